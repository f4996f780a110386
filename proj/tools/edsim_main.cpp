#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "edsim/circuit.hpp"
#include "edsim/entanglement.hpp"
#include "edsim/heisenberg.hpp"
#include "edsim/sampler.hpp"
#include "edsim/statevector.hpp"
#include "edsim/sweep.hpp"
#include "edsim/verify.hpp"

namespace {

using edsim::CircuitSpec;
using edsim::EDReport;
using edsim::EdMethod;
using edsim::ShotConfig;
using nlohmann::ordered_json;

struct GlobalOptions {
    std::string spec_path;
    std::string format;
    std::uint64_t seed = 0;
    std::uint32_t shots = 1024;
    int jobs = 1;
};

ordered_json report_json(const EDReport& report, const CircuitSpec& spec,
                         const std::optional<ShotConfig>& cfg) {
    ordered_json doc;
    doc["qubit"] = report.qubit;
    doc["depth"] = report.depth;
    doc["bloch"] = {report.bloch.x, report.bloch.y, report.bloch.z};
    doc["value"] = report.value;
    doc["method"] = edsim::to_string(report.method);
    if (cfg) {
        doc["shots"] = cfg->shots;
        doc["seed"] = cfg->seed;
    }
    doc["spec"] = ordered_json::parse(edsim::serialize_spec(spec));
    return doc;
}

int cmd_expect(const GlobalOptions& global, const std::string& observable_text,
               bool with_oracle) {
    const CircuitSpec spec = edsim::load_spec(global.spec_path);
    const edsim::PauliString observable =
        edsim::PauliString::parse(observable_text);
    const double engine_value = edsim::expectation(spec, observable);

    std::optional<double> oracle_value;
    if (with_oracle) {
        oracle_value =
            edsim::pauli_expectation(edsim::run(spec), observable);
    }

    if (global.format == "json") {
        ordered_json doc;
        doc["observable"] = observable.str();
        doc["engine"] = engine_value;
        if (oracle_value) {
            doc["oracle"] = *oracle_value;
            doc["abs_diff"] = std::abs(engine_value - *oracle_value);
        }
        doc["spec"] = ordered_json::parse(edsim::serialize_spec(spec));
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::printf("%.17g\n", engine_value);
    if (oracle_value) {
        std::printf("oracle   %.17g\n", *oracle_value);
        std::printf("abs diff %.3g\n", std::abs(engine_value - *oracle_value));
    }
    return 0;
}

int cmd_ed(const GlobalOptions& global, std::uint32_t qubit,
           const std::string& method) {
    const CircuitSpec spec = edsim::load_spec(global.spec_path);
    EDReport report{};
    std::optional<ShotConfig> cfg;
    if (method == "engine") {
        report = edsim::ed_engine(spec, qubit);
    } else if (method == "closed-form") {
        report = edsim::closed_form_ed(spec, qubit);
    } else if (method == "sampled") {
        cfg = ShotConfig{global.shots, global.seed};
        report = edsim::estimate_ed(spec, qubit, *cfg);
    } else {
        throw CLI::ValidationError("--method",
                                   "expected engine, closed-form or sampled");
    }
    std::cout << report_json(report, spec, cfg).dump(2) << "\n";
    return 0;
}

int cmd_sweep(const GlobalOptions& global, const std::string& preset_name,
              const std::string& sweep_path, const std::string& out_path,
              const std::vector<std::string>& evaluator_names, int count) {
    edsim::SweepSpec sweep = [&] {
        if (!preset_name.empty()) {
            return edsim::preset_sweep(
                edsim::surface_preset_from_name(preset_name), count);
        }
        return edsim::load_sweep(sweep_path);
    }();
    if (!evaluator_names.empty()) {
        sweep.evaluators.clear();
        for (const auto& name : evaluator_names) {
            sweep.evaluators.push_back(edsim::evaluator_from_name(name));
        }
    }

    const edsim::SweepResult result =
        edsim::run_sweep(sweep, ShotConfig{global.shots, global.seed},
                         global.jobs);

    std::string rendered;
    if (global.format == "json") {
        ordered_json doc;
        doc["axis1"] = result.axis1_name;
        doc["axis2"] = result.axis2_name;
        doc["axis1_values"] = result.axis1_values;
        doc["axis2_values"] = result.axis2_values;
        for (std::size_t e = 0; e < result.evaluators.size(); ++e) {
            doc[edsim::to_string(result.evaluators[e])] = result.columns[e];
        }
        rendered = doc.dump(2) + "\n";
    } else {
        rendered = edsim::to_csv(result);
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << rendered;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    out << rendered;
    std::fprintf(stderr, "wrote %zu grid points to %s\n", result.points(),
                 out_path.c_str());
    return 0;
}

int cmd_verify(const GlobalOptions& global, const std::string& suite) {
    edsim::VerifyOptions options;
    options.seed = global.seed;
    options.shots = global.shots;

    std::vector<edsim::CheckResult> results;
    if (suite == "two-qubit") {
        results = edsim::verify_two_qubit(options);
    } else if (suite == "chain") {
        results = edsim::verify_chain(options);
    } else if (suite == "figures") {
        results = edsim::verify_figures(options);
    } else if (suite == "all") {
        results = edsim::verify_all(options);
    } else {
        throw CLI::ValidationError("--suite",
                                   "expected two-qubit, chain, figures or all");
    }

    std::size_t width = 0;
    for (const auto& r : results) {
        width = std::max(width, r.suite.size() + r.name.size() + 2);
    }
    for (const auto& r : results) {
        const std::string label = r.suite + ": " + r.name;
        std::printf("%-*s  %s  %s\n", static_cast<int>(width), label.c_str(),
                    r.passed ? "PASS" : "FAIL", r.detail.c_str());
    }
    const bool ok = edsim::all_passed(results);
    std::printf("%zu/%zu checks passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.passed; })),
                results.size());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and sampled analysis of layered RY+CZ circuits"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--spec", global.spec_path, "Circuit spec file (JSON)");
    app.add_option("--format", global.format, "Output format: csv or json");
    app.add_option("--seed", global.seed, "Sampling seed (default 0)");
    app.add_option("--shots", global.shots,
                   "Measurement shots per basis (default 1024)");
    app.add_option("--jobs", global.jobs, "Worker threads for sweeps");

    std::string observable_text;
    bool with_oracle = false;
    auto* expect = app.add_subcommand(
        "expect", "Expectation value of a Pauli observable");
    expect->add_option("observable", observable_text,
                       "Pauli string, e.g. \"X0\" or \"Y0 Y1\"")
        ->required();
    expect->add_flag("--oracle", with_oracle,
                     "Also evaluate with the dense simulator and print the "
                     "difference");

    std::uint32_t qubit = 0;
    std::string method = "engine";
    auto* ed = app.add_subcommand(
        "ed", "Entanglement distance of one qubit (JSON report)");
    ed->add_option("--qubit", qubit, "Target qubit (default 0)");
    ed->add_option("--method", method,
                   "engine (default), closed-form or sampled");

    std::string preset_name, sweep_path, out_path;
    std::vector<std::string> evaluator_names;
    int count = 25;
    auto* sweep =
        app.add_subcommand("sweep", "Two-angle entanglement-distance grid");
    auto* preset_opt = sweep->add_option(
        "--preset", preset_name, "Built-in surface: fig2, fig3, fig4, fig6, fig7");
    sweep->add_option("--sweep-file", sweep_path, "Sweep document (JSON)")
        ->excludes(preset_opt);
    sweep->add_option("--out", out_path, "Output path ('-' for stdout)");
    sweep->add_option("--evaluators", evaluator_names,
                      "Subset of engine, closed_form, sampled")
        ->delimiter(',');
    sweep->add_option("--count", count, "Points per axis for presets");

    std::string suite = "all";
    auto* verify = app.add_subcommand(
        "verify", "Cross-check engine, closed forms and sampling");
    verify->add_option("--suite", suite, "two-qubit, chain, figures or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expect->parsed()) {
            return cmd_expect(global, observable_text, with_oracle);
        }
        if (ed->parsed()) {
            return cmd_ed(global, qubit, method);
        }
        if (sweep->parsed()) {
            if (preset_name.empty() && sweep_path.empty()) {
                throw std::invalid_argument(
                    "sweep needs --preset or --sweep-file");
            }
            return cmd_sweep(global, preset_name, sweep_path, out_path,
                             evaluator_names, count);
        }
        if (verify->parsed()) {
            return cmd_verify(global, suite);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
