#include "edsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace edsim {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Evaluator evaluator_from_name(const std::string& name) {
    if (name == "engine") return Evaluator::Engine;
    if (name == "closed_form") return Evaluator::ClosedForm;
    if (name == "sampled") return Evaluator::Sampled;
    throw std::invalid_argument("unknown evaluator '" + name +
                                "' (expected engine, closed_form or sampled)");
}

std::string to_string(Evaluator evaluator) {
    switch (evaluator) {
        case Evaluator::Engine: return "engine";
        case Evaluator::ClosedForm: return "closed_form";
        case Evaluator::Sampled: return "sampled";
    }
    throw std::invalid_argument("invalid Evaluator");
}

std::vector<double> AxisSpec::values() const {
    if (count < 2) {
        throw std::invalid_argument("axis '" + name +
                                    "' needs at least 2 points");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
        out.push_back(start + step * static_cast<double>(i));
    }
    return out;
}

CircuitTemplate::CircuitTemplate(Topology topology,
                                 std::vector<std::vector<Entry>> entries)
    : topology_(topology), entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != topology_.n_qubits) {
            throw std::invalid_argument(
                "template angle row has " + std::to_string(row.size()) +
                " entries, expected " + std::to_string(topology_.n_qubits));
        }
    }
}

std::vector<std::string> CircuitTemplate::free_names() const {
    std::set<std::string> names;
    for (const auto& row : entries_) {
        for (const auto& entry : row) {
            if (const auto* name = std::get_if<std::string>(&entry)) {
                names.insert(*name);
            }
        }
    }
    return {names.begin(), names.end()};
}

CircuitSpec CircuitTemplate::instantiate(const std::string& name_a, double a,
                                         const std::string& name_b,
                                         double b) const {
    std::vector<std::vector<double>> rows;
    rows.reserve(entries_.size());
    for (const auto& row : entries_) {
        auto& out = rows.emplace_back();
        out.reserve(row.size());
        for (const auto& entry : row) {
            if (const auto* fixed = std::get_if<double>(&entry)) {
                out.push_back(*fixed);
            } else {
                const auto& name = std::get<std::string>(entry);
                if (name == name_a) {
                    out.push_back(a);
                } else if (name == name_b) {
                    out.push_back(b);
                } else {
                    throw std::invalid_argument("template angle '" + name +
                                                "' matches no sweep axis");
                }
            }
        }
    }
    return CircuitSpec(topology_, std::move(rows));
}

namespace {

CircuitTemplate::Entry parse_entry(const json& value) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    throw std::invalid_argument(
        "template angle entries must be numbers or axis names");
}

CircuitTemplate parse_template(const json& doc) {
    if (!doc.is_object() || !doc.contains("topology") ||
        !doc.contains("layers") || !doc.contains("angles")) {
        throw std::invalid_argument(
            "sweep template needs 'topology', 'layers' and 'angles'");
    }
    const std::string kind = doc.at("topology").get<std::string>();
    Topology topology{};
    if (kind == "pair") {
        topology = Topology::pair();
    } else if (kind == "closed_chain") {
        topology = Topology::closed_chain(
            doc.at("n_qubits").get<std::uint32_t>());
    } else {
        throw std::invalid_argument("unknown topology '" + kind + "'");
    }
    const auto layers = doc.at("layers").get<std::int64_t>();
    if (layers < 0) {
        throw std::invalid_argument("'layers' must be >= 0");
    }

    const json& angles = doc.at("angles");
    std::vector<std::vector<CircuitTemplate::Entry>> rows;
    if (!angles.is_array()) {
        rows.assign(static_cast<std::size_t>(layers),
                    std::vector<CircuitTemplate::Entry>(topology.n_qubits,
                                                        parse_entry(angles)));
        return CircuitTemplate(topology, std::move(rows));
    }
    if (angles.size() != static_cast<std::size_t>(layers)) {
        throw std::invalid_argument("'angles' must have one entry per layer");
    }
    for (const auto& layer_entry : angles) {
        auto& row = rows.emplace_back();
        if (layer_entry.is_array()) {
            if (layer_entry.size() != topology.n_qubits) {
                throw std::invalid_argument(
                    "template angle row has the wrong number of entries");
            }
            for (const auto& value : layer_entry) {
                row.push_back(parse_entry(value));
            }
        } else {
            row.assign(topology.n_qubits, parse_entry(layer_entry));
        }
    }
    return CircuitTemplate(topology, std::move(rows));
}

void validate_axes(const SweepSpec& sweep) {
    if (sweep.axis1.name == sweep.axis2.name) {
        throw std::invalid_argument("sweep axes must have distinct names");
    }
    sweep.axis1.values();  // count checks
    sweep.axis2.values();
    const auto names = sweep.circuit.free_names();
    for (const auto& name : names) {
        if (name != sweep.axis1.name && name != sweep.axis2.name) {
            throw std::invalid_argument("template angle '" + name +
                                        "' matches no sweep axis");
        }
    }
    for (const auto* axis : {&sweep.axis1, &sweep.axis2}) {
        if (std::find(names.begin(), names.end(), axis->name) == names.end()) {
            throw std::invalid_argument("axis '" + axis->name +
                                        "' is not used by the template");
        }
    }
    if (sweep.qubit >= sweep.circuit.topology().n_qubits) {
        throw std::out_of_range("sweep qubit out of range");
    }
    if (sweep.evaluators.empty()) {
        throw std::invalid_argument("sweep needs at least one evaluator");
    }
    std::set<Evaluator> seen(sweep.evaluators.begin(), sweep.evaluators.end());
    if (seen.size() != sweep.evaluators.size()) {
        throw std::invalid_argument("duplicate evaluator in sweep");
    }
}

std::vector<Evaluator> parse_evaluators(const json& doc) {
    std::vector<Evaluator> out;
    if (!doc.contains("evaluators")) {
        return {Evaluator::Engine, Evaluator::ClosedForm};
    }
    for (const auto& name : doc.at("evaluators")) {
        out.push_back(evaluator_from_name(name.get<std::string>()));
    }
    return out;
}

}  // namespace

SweepSpec parse_sweep(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(
            std::string("sweep document is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) {
            throw std::invalid_argument(
                "sweep document must be a JSON object");
        }

        if (doc.contains("preset")) {
            const auto preset =
                surface_preset_from_name(doc.at("preset").get<std::string>());
            const int count = doc.value("count", 25);
            SweepSpec sweep = preset_sweep(preset, count);
            sweep.evaluators = parse_evaluators(doc);
            validate_axes(sweep);
            return sweep;
        }

        if (!doc.contains("template") || !doc.contains("axes")) {
            throw std::invalid_argument(
                "sweep document needs either 'preset' or 'template' + 'axes'");
        }
        const json& axes = doc.at("axes");
        if (!axes.is_array() || axes.size() != 2) {
            throw std::invalid_argument("'axes' must list exactly two axes");
        }
        const auto parse_axis = [](const json& a) {
            return AxisSpec{a.at("name").get<std::string>(),
                            a.at("start").get<double>(),
                            a.at("stop").get<double>(),
                            a.at("count").get<int>()};
        };

        SweepSpec sweep{parse_template(doc.at("template")),
                        parse_axis(axes[0]), parse_axis(axes[1]),
                        doc.value("qubit", 0u), parse_evaluators(doc),
                        std::nullopt};
        validate_axes(sweep);
        return sweep;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed sweep document: ") +
                                    e.what());
    }
}

SweepSpec load_sweep(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open sweep file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep(buf.str());
}

namespace {

SweepSpec make_pair_preset(SurfacePreset preset, int count,
                           const std::string& name_a,
                           const std::string& name_b) {
    using Entry = CircuitTemplate::Entry;
    const double half_pi = std::numbers::pi / 2.0;
    std::vector<std::vector<Entry>> rows;
    switch (preset) {
        case SurfacePreset::Fig2:
            rows = {{half_pi, half_pi}, {name_a, name_a}, {name_b, name_b}};
            break;
        case SurfacePreset::Fig3:
            rows = {{name_a, name_a}, {half_pi, half_pi}, {name_b, name_b}};
            break;
        case SurfacePreset::Fig4:
            rows = {{name_a, name_a}, {name_b, name_b}, {half_pi, half_pi}};
            break;
        default:
            throw std::logic_error("not a pair preset");
    }
    return SweepSpec{CircuitTemplate(Topology::pair(), std::move(rows)),
                     AxisSpec{name_a, 0.0, kTwoPi, count},
                     AxisSpec{name_b, 0.0, kTwoPi, count},
                     0,
                     {Evaluator::Engine, Evaluator::ClosedForm},
                     preset};
}

}  // namespace

SweepSpec preset_sweep(SurfacePreset preset, int count) {
    using Entry = CircuitTemplate::Entry;
    switch (preset) {
        case SurfacePreset::Fig2:
            return make_pair_preset(preset, count, "theta2", "theta3");
        case SurfacePreset::Fig3:
            return make_pair_preset(preset, count, "theta1", "theta3");
        case SurfacePreset::Fig4:
            return make_pair_preset(preset, count, "theta1", "theta2");
        case SurfacePreset::Fig6: {
            std::vector<std::vector<Entry>> rows{
                std::vector<Entry>(5, Entry{"theta1"}),
                std::vector<Entry>(5, Entry{"theta2"})};
            return SweepSpec{
                CircuitTemplate(Topology::closed_chain(5), std::move(rows)),
                AxisSpec{"theta1", 0.0, kTwoPi, count},
                AxisSpec{"theta2", 0.0, kTwoPi, count},
                2,
                {Evaluator::Engine, Evaluator::ClosedForm},
                preset};
        }
        case SurfacePreset::Fig7: {
            std::vector<Entry> row(5, Entry{"theta_env"});
            row[2] = Entry{"theta_a"};
            std::vector<std::vector<Entry>> rows{row, row};
            return SweepSpec{
                CircuitTemplate(Topology::closed_chain(5), std::move(rows)),
                AxisSpec{"theta_a", 0.0, kTwoPi, count},
                AxisSpec{"theta_env", 0.0, kTwoPi, count},
                2,
                {Evaluator::Engine, Evaluator::ClosedForm},
                preset};
        }
    }
    throw std::invalid_argument("invalid SurfacePreset");
}

CircuitSpec preset_circuit(SurfacePreset preset, double a, double b) {
    const SweepSpec sweep = preset_sweep(preset);
    return sweep.circuit.instantiate(sweep.axis1.name, a, sweep.axis2.name, b);
}

std::uint32_t preset_qubit(SurfacePreset preset) {
    return preset_sweep(preset).qubit;
}

const std::vector<double>& SweepResult::column(Evaluator evaluator) const {
    for (std::size_t i = 0; i < evaluators.size(); ++i) {
        if (evaluators[i] == evaluator) {
            return columns[i];
        }
    }
    throw std::invalid_argument("evaluator column not present");
}

SweepResult run_sweep(const SweepSpec& sweep, const ShotConfig& cfg,
                      int jobs) {
    validate_axes(sweep);
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }

    SweepResult result;
    result.axis1_name = sweep.axis1.name;
    result.axis2_name = sweep.axis2.name;
    result.axis1_values = sweep.axis1.values();
    result.axis2_values = sweep.axis2.values();
    result.evaluators = sweep.evaluators;
    result.columns.assign(sweep.evaluators.size(),
                          std::vector<double>(result.points(), 0.0));

    const std::size_t n_points = result.points();
    const auto evaluate_point = [&](std::size_t index) {
        const std::size_t i1 = index / result.axis2_values.size();
        const std::size_t i2 = index % result.axis2_values.size();
        const double a = result.axis1_values[i1];
        const double b = result.axis2_values[i2];
        const CircuitSpec spec = sweep.circuit.instantiate(
            sweep.axis1.name, a, sweep.axis2.name, b);
        for (std::size_t e = 0; e < sweep.evaluators.size(); ++e) {
            double value = 0.0;
            switch (sweep.evaluators[e]) {
                case Evaluator::Engine:
                    value = ed_engine(spec, sweep.qubit).value;
                    break;
                case Evaluator::ClosedForm:
                    value = sweep.preset
                                ? surface_formula(*sweep.preset, a, b)
                                : closed_form_ed(spec, sweep.qubit).value;
                    break;
                case Evaluator::Sampled:
                    value = estimate_ed(spec, sweep.qubit, cfg, index).value;
                    break;
            }
            result.columns[e][index] = value;
        }
    };

    if (jobs == 1) {
        for (std::size_t index = 0; index < n_points; ++index) {
            evaluate_point(index);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const auto n_workers =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), n_points);
        workers.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&] {
                for (std::size_t index = next.fetch_add(1);
                     index < n_points; index = next.fetch_add(1)) {
                    evaluate_point(index);
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }
    return result;
}

std::string to_csv(const SweepResult& result) {
    std::string out = result.axis1_name + "," + result.axis2_name;
    for (const auto evaluator : result.evaluators) {
        out += "," + to_string(evaluator);
    }
    out += "\n";

    char buf[64];
    const auto append_number = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out += buf;
    };
    for (std::size_t i1 = 0; i1 < result.axis1_values.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < result.axis2_values.size(); ++i2) {
            append_number(result.axis1_values[i1]);
            out += ',';
            append_number(result.axis2_values[i2]);
            const std::size_t index = result.row_index(i1, i2);
            for (const auto& column : result.columns) {
                out += ',';
                append_number(column[index]);
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace edsim
