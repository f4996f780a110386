#include "edsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "edsim/entanglement.hpp"
#include "edsim/heisenberg.hpp"
#include "edsim/sampler.hpp"
#include "edsim/sweep.hpp"
#include "edsim/two_qubit_reference.hpp"

namespace edsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double uniform_angle(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * kTwoPi;
}

std::string format_max(double worst, double tolerance) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max|diff| = %.3g (tolerance %.0e)", worst,
                  tolerance);
    return buf;
}

CheckResult tolerance_check(std::string suite, std::string name, double worst,
                            double tolerance) {
    return CheckResult{std::move(suite), std::move(name), worst <= tolerance,
                       format_max(worst, tolerance)};
}

double pair_expectation(const CircuitSpec& spec, Pauli p0, Pauli p1) {
    PauliString s;
    s.set_factor(0, p0);
    s.set_factor(1, p1);
    return expectation(spec, s);
}

struct MomentDiff {
    double worst = 0.0;
    void track(double reference, double engine) {
        worst = std::max(worst, std::abs(reference - engine));
    }
};

void track_single(MomentDiff& diff, const two_qubit::SingleMoments& m,
                  const CircuitSpec& spec) {
    diff.track(m.x0, pair_expectation(spec, Pauli::X, Pauli::I));
    diff.track(m.y0, pair_expectation(spec, Pauli::Y, Pauli::I));
    diff.track(m.z0, pair_expectation(spec, Pauli::Z, Pauli::I));
    diff.track(m.x1, pair_expectation(spec, Pauli::I, Pauli::X));
    diff.track(m.y1, pair_expectation(spec, Pauli::I, Pauli::Y));
    diff.track(m.z1, pair_expectation(spec, Pauli::I, Pauli::Z));
}

void track_pair(MomentDiff& diff, const two_qubit::PairMoments& m,
                const CircuitSpec& spec) {
    diff.track(m.xx, pair_expectation(spec, Pauli::X, Pauli::X));
    diff.track(m.xy, pair_expectation(spec, Pauli::X, Pauli::Y));
    diff.track(m.xz, pair_expectation(spec, Pauli::X, Pauli::Z));
    diff.track(m.yx, pair_expectation(spec, Pauli::Y, Pauli::X));
    diff.track(m.yy, pair_expectation(spec, Pauli::Y, Pauli::Y));
    diff.track(m.yz, pair_expectation(spec, Pauli::Y, Pauli::Z));
    diff.track(m.zx, pair_expectation(spec, Pauli::Z, Pauli::X));
    diff.track(m.zy, pair_expectation(spec, Pauli::Z, Pauli::Y));
    diff.track(m.zz, pair_expectation(spec, Pauli::Z, Pauli::Z));
}

CircuitSpec random_pair_spec(std::mt19937_64& rng, std::uint32_t layers) {
    std::vector<std::vector<double>> angles(layers);
    for (auto& row : angles) {
        row = {uniform_angle(rng), uniform_angle(rng)};
    }
    return CircuitSpec(Topology::pair(), std::move(angles));
}

CircuitSpec random_chain_spec(std::mt19937_64& rng, std::uint32_t n,
                              std::uint32_t layers) {
    std::vector<std::vector<double>> angles(layers);
    for (auto& row : angles) {
        row.resize(n);
        for (auto& theta : row) {
            theta = uniform_angle(rng);
        }
    }
    return CircuitSpec(Topology::closed_chain(n), std::move(angles));
}

}  // namespace

std::vector<CheckResult> verify_two_qubit(const VerifyOptions& options) {
    std::mt19937_64 rng(options.seed);
    const std::string suite = "two-qubit";
    std::vector<CheckResult> results;

    MomentDiff depth1, depth2, depth3, identity, form1, form2;
    for (int i = 0; i < options.samples; ++i) {
        const two_qubit::LayerAngles t1{uniform_angle(rng),
                                        uniform_angle(rng)};
        const two_qubit::LayerAngles t2{uniform_angle(rng),
                                        uniform_angle(rng)};
        const two_qubit::LayerAngles t3{uniform_angle(rng),
                                        uniform_angle(rng)};
        const CircuitSpec spec1(Topology::pair(), {{t1.q0, t1.q1}});
        const CircuitSpec spec2(Topology::pair(),
                                {{t1.q0, t1.q1}, {t2.q0, t2.q1}});
        const CircuitSpec spec3(
            Topology::pair(),
            {{t1.q0, t1.q1}, {t2.q0, t2.q1}, {t3.q0, t3.q1}});

        track_single(depth1, two_qubit::depth1_single(t1), spec1);
        track_pair(depth1, two_qubit::depth1_pair(t1), spec1);
        track_single(depth2, two_qubit::depth2_single(t1, t2), spec2);
        track_pair(depth2, two_qubit::depth2_pair(t1, t2), spec2);
        track_single(depth3, two_qubit::depth3_single(t1, t2, t3), spec3);

        for (const auto* spec : {&spec1, &spec2, &spec3}) {
            const double yy2 = ed_two_qubit_identity(*spec);
            identity.track(yy2, ed_engine(*spec, 0).value);
            identity.track(yy2, ed_engine(*spec, 1).value);
        }
        form1.track(ed_pair_depth1(t1.q0, t1.q1), ed_engine(spec1, 0).value);
        form2.track(ed_pair_depth2(t1.q0, t1.q1, t2.q0, t2.q1),
                    ed_engine(spec2, 0).value);
    }

    results.push_back(
        tolerance_check(suite, "depth-1 moments vs engine", depth1.worst, 1e-12));
    results.push_back(
        tolerance_check(suite, "depth-2 moments vs engine", depth2.worst, 1e-12));
    results.push_back(
        tolerance_check(suite, "depth-3 moments vs engine", depth3.worst, 1e-12));
    results.push_back(tolerance_check(
        suite, "ED equals <Y0 Y1>^2 for both qubits", identity.worst, 1e-10));
    results.push_back(tolerance_check(
        suite, "depth-1 closed form vs engine", form1.worst, 1e-10));
    results.push_back(tolerance_check(
        suite, "depth-2 closed form vs engine", form2.worst, 1e-10));
    return results;
}

std::vector<CheckResult> verify_chain(const VerifyOptions& options) {
    std::mt19937_64 rng(options.seed);
    const std::string suite = "chain";
    std::vector<CheckResult> results;

    MomentDiff depth1, depth2;
    for (int i = 0; i < options.samples; ++i) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng() % 3);
        const auto qubit = static_cast<std::uint32_t>(rng() % n);
        const CircuitSpec spec1 = random_chain_spec(rng, n, 1);
        depth1.track(closed_form_ed(spec1, qubit).value,
                     ed_engine(spec1, qubit).value);
        const CircuitSpec spec2 = random_chain_spec(rng, n, 2);
        depth2.track(closed_form_ed(spec2, qubit).value,
                     ed_engine(spec2, qubit).value);
    }
    results.push_back(tolerance_check(
        suite, "depth-1 closed form vs engine (N = 5..7)", depth1.worst, 1e-10));
    results.push_back(tolerance_check(
        suite, "depth-2 closed form vs engine (N = 5..7)", depth2.worst, 1e-10));

    // Depth-2 locality: angles beyond the second neighbors of the target
    // must not move its entanglement distance.
    MomentDiff locality;
    const std::uint32_t n = 9, target = 4;
    for (int i = 0; i < std::min(options.samples, 50); ++i) {
        const CircuitSpec base = random_chain_spec(rng, n, 2);
        const double reference = ed_engine(base, target).value;
        CircuitSpec perturbed = base;
        for (const std::uint32_t far : {0u, 1u, 7u, 8u}) {
            for (std::uint32_t layer = 1; layer <= 2; ++layer) {
                perturbed =
                    perturbed.with_angle(layer, far, uniform_angle(rng));
            }
        }
        locality.track(reference, ed_engine(perturbed, target).value);
    }
    results.push_back(tolerance_check(
        suite, "depth-2 ED ignores qubits beyond distance 2 (N = 9)",
        locality.worst, 1e-12));
    return results;
}

std::vector<CheckResult> verify_figures(const VerifyOptions& options) {
    const std::string suite = "figures";
    std::vector<CheckResult> results;

    for (const auto preset :
         {SurfacePreset::Fig2, SurfacePreset::Fig3, SurfacePreset::Fig4,
          SurfacePreset::Fig6, SurfacePreset::Fig7}) {
        const std::string name = to_string(preset);

        SweepSpec exact = preset_sweep(preset, options.grid);
        exact.evaluators = {Evaluator::Engine, Evaluator::ClosedForm};
        const SweepResult grid = run_sweep(exact, ShotConfig{});
        double worst = 0.0;
        const auto& engine = grid.column(Evaluator::Engine);
        const auto& formula = grid.column(Evaluator::ClosedForm);
        for (std::size_t i = 0; i < engine.size(); ++i) {
            worst = std::max(worst, std::abs(engine[i] - formula[i]));
        }
        results.push_back(tolerance_check(
            suite, name + " closed form vs engine", worst, 1e-10));

        SweepSpec sampled = preset_sweep(preset, options.sampled_grid);
        sampled.evaluators = {Evaluator::ClosedForm, Evaluator::Sampled};
        const SweepResult noisy =
            run_sweep(sampled, ShotConfig{options.shots, options.seed});
        const AgreementMetrics metrics =
            agreement(noisy.column(Evaluator::ClosedForm),
                      noisy.column(Evaluator::Sampled));
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "MAE = %.4f, RMSE = %.4f, correlation = %.4f "
                      "(%u shots)",
                      metrics.mae, metrics.rmse, metrics.pearson.value_or(0.0),
                      options.shots);
        const bool passed = metrics.mae <= 0.03 && metrics.rmse <= 0.04 &&
                            metrics.pearson.value_or(0.0) >= 0.99;
        results.push_back(
            CheckResult{suite, name + " sampled vs closed form", passed, buf});
    }
    return results;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
    std::vector<CheckResult> results = verify_two_qubit(options);
    for (auto& suite : {verify_chain(options), verify_figures(options)}) {
        results.insert(results.end(), suite.begin(), suite.end());
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace edsim
