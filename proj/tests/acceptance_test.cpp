// End-to-end acceptance suite. Each case prints one PASS/FAIL line with the
// measured figure of merit next to its fixed threshold.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "edsim/entanglement.hpp"
#include "edsim/heisenberg.hpp"
#include "edsim/sampler.hpp"
#include "edsim/statevector.hpp"
#include "edsim/sweep.hpp"
#include "edsim/two_qubit_reference.hpp"

using namespace edsim;

namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform_angle(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * kPi;
}

CircuitSpec random_spec(std::mt19937_64& rng, std::uint32_t max_n,
                        std::uint32_t max_layers) {
    const bool use_pair = (rng() % 2) == 0;
    const std::uint32_t n =
        use_pair ? 2 : 3 + static_cast<std::uint32_t>(rng() % (max_n - 2));
    const auto layers = static_cast<std::uint32_t>(rng() % (max_layers + 1));
    std::vector<std::vector<double>> angles(layers, std::vector<double>(n));
    for (auto& row : angles) {
        for (auto& theta : row) {
            theta = uniform_angle(rng);
        }
    }
    return CircuitSpec(use_pair ? Topology::pair() : Topology::closed_chain(n),
                       std::move(angles));
}

void report(int criterion, const char* label, bool passed,
            const char* detail_format, ...) {
    char detail[160];
    va_list args;
    va_start(args, detail_format);
    std::vsnprintf(detail, sizeof(detail), detail_format, args);
    va_end(args);
    std::printf("[criterion %2d] %s  %s: %s\n", criterion,
                passed ? "PASS" : "FAIL", label, detail);
    std::fflush(stdout);
}

}  // namespace

TEST_CASE("01 operator engine vs dense oracle over random circuits") {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const CircuitSpec spec = random_spec(rng, 6, 4);
        const StateVector state = run(spec);
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            for (const Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                const PauliString obs = PauliString::single(p, q);
                worst = std::max(worst,
                                 std::abs(expectation(spec, obs) -
                                          pauli_expectation(state, obs)));
            }
        }
        for (const auto& [a, b] : spec.topology().edges()) {
            for (const Pauli pa : {Pauli::X, Pauli::Y, Pauli::Z}) {
                for (const Pauli pb : {Pauli::X, Pauli::Y, Pauli::Z}) {
                    const PauliString obs{{a, pa}, {b, pb}};
                    worst = std::max(worst,
                                     std::abs(expectation(spec, obs) -
                                              pauli_expectation(state, obs)));
                }
            }
        }
    }
    const bool passed = worst <= 1e-10;
    report(1, "engine vs oracle, 1000 random circuits", passed,
           "max|diff| = %.3g (tolerance 1e-10)", worst);
    CHECK(passed);
}

TEST_CASE("02 two-qubit reference moments at depths 1..3") {
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    const auto track_single = [&](const two_qubit::SingleMoments& m,
                                  const CircuitSpec& spec) {
        const char* names[] = {"X0", "Y0", "Z0", "X1", "Y1", "Z1"};
        const double values[] = {m.x0, m.y0, m.z0, m.x1, m.y1, m.z1};
        for (int i = 0; i < 6; ++i) {
            worst = std::max(
                worst, std::abs(values[i] - expectation(
                                                spec, PauliString::parse(
                                                          names[i]))));
        }
    };
    const auto track_pair = [&](const two_qubit::PairMoments& m,
                                const CircuitSpec& spec) {
        const char* names[] = {"X0 X1", "X0 Y1", "X0 Z1", "Y0 X1", "Y0 Y1",
                               "Y0 Z1", "Z0 X1", "Z0 Y1", "Z0 Z1"};
        const double values[] = {m.xx, m.xy, m.xz, m.yx, m.yy,
                                 m.yz, m.zx, m.zy, m.zz};
        for (int i = 0; i < 9; ++i) {
            worst = std::max(
                worst, std::abs(values[i] - expectation(
                                                spec, PauliString::parse(
                                                          names[i]))));
        }
    };

    for (int trial = 0; trial < 120; ++trial) {
        const two_qubit::LayerAngles t1{uniform_angle(rng), uniform_angle(rng)};
        const two_qubit::LayerAngles t2{uniform_angle(rng), uniform_angle(rng)};
        const two_qubit::LayerAngles t3{uniform_angle(rng), uniform_angle(rng)};
        const CircuitSpec spec1(Topology::pair(), {{t1.q0, t1.q1}});
        const CircuitSpec spec2(Topology::pair(),
                                {{t1.q0, t1.q1}, {t2.q0, t2.q1}});
        const CircuitSpec spec3(
            Topology::pair(),
            {{t1.q0, t1.q1}, {t2.q0, t2.q1}, {t3.q0, t3.q1}});
        track_single(two_qubit::depth1_single(t1), spec1);
        track_pair(two_qubit::depth1_pair(t1), spec1);
        track_single(two_qubit::depth2_single(t1, t2), spec2);
        track_pair(two_qubit::depth2_pair(t1, t2), spec2);
        track_single(two_qubit::depth3_single(t1, t2, t3), spec3);
    }
    const bool passed = worst <= 1e-12;
    report(2, "closed-form moments vs engine, 120 angle tuples", passed,
           "max|diff| = %.3g (tolerance 1e-12)", worst);
    CHECK(passed);
}

TEST_CASE("03 pair entanglement distance equals <Y0 Y1>^2") {
    std::mt19937_64 rng(1003);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t layers = 1 + trial % 3;
        std::vector<std::vector<double>> angles(layers);
        for (auto& row : angles) {
            row = {uniform_angle(rng), uniform_angle(rng)};
        }
        const CircuitSpec spec(Topology::pair(), angles);
        const double yy2 = ed_two_qubit_identity(spec);
        worst = std::max(worst, std::abs(ed_engine(spec, 0).value - yy2));
        worst = std::max(worst, std::abs(ed_engine(spec, 1).value - yy2));
    }
    const bool passed = worst <= 1e-10;
    report(3, "ED identity, 500 random pair circuits", passed,
           "max|diff| = %.3g (tolerance 1e-10)", worst);
    CHECK(passed);
}

TEST_CASE("04 closed forms vs engine") {
    std::mt19937_64 rng(1004);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double t0 = uniform_angle(rng), t1 = uniform_angle(rng);
        const double u0 = uniform_angle(rng), u1 = uniform_angle(rng);
        const CircuitSpec pair1(Topology::pair(), {{t0, t1}});
        worst = std::max(worst, std::abs(ed_pair_depth1(t0, t1) -
                                         ed_engine(pair1, 0).value));
        const CircuitSpec pair2(Topology::pair(), {{t0, t1}, {u0, u1}});
        worst = std::max(worst, std::abs(ed_pair_depth2(t0, t1, u0, u1) -
                                         ed_engine(pair2, 0).value));

        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng() % 3);
        const auto qubit = static_cast<std::uint32_t>(rng() % n);
        std::vector<std::vector<double>> one(1, std::vector<double>(n));
        for (auto& theta : one[0]) {
            theta = uniform_angle(rng);
        }
        const CircuitSpec ring1(Topology::closed_chain(n), one);
        worst = std::max(worst, std::abs(closed_form_ed(ring1, qubit).value -
                                         ed_engine(ring1, qubit).value));

        std::vector<std::vector<double>> two(2, std::vector<double>(n));
        for (auto& row : two) {
            for (auto& theta : row) {
                theta = uniform_angle(rng);
            }
        }
        const CircuitSpec ring2(Topology::closed_chain(n), two);
        worst = std::max(worst, std::abs(closed_form_ed(ring2, qubit).value -
                                         ed_engine(ring2, qubit).value));
    }
    const bool passed = worst <= 1e-10;
    report(4, "four closed forms, 200 angle sets each", passed,
           "max|diff| = %.3g (tolerance 1e-10)", worst);
    CHECK(passed);
}

TEST_CASE("05 surface formulas vs engine on 25x25 grids") {
    double worst = 0.0;
    for (const auto preset :
         {SurfacePreset::Fig2, SurfacePreset::Fig3, SurfacePreset::Fig4,
          SurfacePreset::Fig6, SurfacePreset::Fig7}) {
        const SweepResult grid = run_sweep(preset_sweep(preset, 25),
                                           ShotConfig{});
        const auto& engine = grid.column(Evaluator::Engine);
        const auto& formula = grid.column(Evaluator::ClosedForm);
        for (std::size_t i = 0; i < engine.size(); ++i) {
            worst = std::max(worst, std::abs(engine[i] - formula[i]));
        }
    }
    const bool passed = worst <= 1e-10;
    report(5, "five surface presets, 625 points each", passed,
           "max|diff| = %.3g (tolerance 1e-10)", worst);
    CHECK(passed);
}

TEST_CASE("06 point values") {
    const CircuitSpec bell(Topology::pair(), {{kPi / 2, kPi / 2}});
    const double bell_ed = ed_engine(bell, 0).value;

    const CircuitSpec ring_half(Topology::closed_chain(5),
                                {std::vector<double>(5, kPi / 2)});
    const CircuitSpec ring_quarter(Topology::closed_chain(5),
                                   {std::vector<double>(5, kPi / 4)});
    const double ring_half_ed = ed_engine(ring_half, 2).value;
    const double ring_quarter_ed = ed_engine(ring_quarter, 2).value;

    const double worst = std::max(
        {std::abs(bell_ed - 1.0), std::abs(ring_half_ed - 1.0),
         std::abs(ring_quarter_ed - 0.375),
         std::abs(ed_chain_depth1(kPi / 4, kPi / 4, kPi / 4) - 0.375),
         std::abs(ed_chain_depth1(kPi / 2, kPi / 2, kPi / 2) - 1.0)});
    const bool passed = worst <= 1e-12;
    report(6, "pinned point values", passed,
           "max|diff| = %.3g (tolerance 1e-12)", worst);
    CHECK(passed);
}

TEST_CASE("07 reality and range") {
    std::mt19937_64 rng(1007);
    bool y_exact = true;
    double worst_ed_low = 0.0, worst_ed_high = 1.0;
    double worst_imag = 0.0, worst_norm = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const CircuitSpec spec = random_spec(rng, 6, 4);
        const StateVector state = run(spec);
        worst_imag = std::max(worst_imag, state.max_imag());
        worst_norm = std::max(worst_norm, std::abs(state.norm() - 1.0));
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            if (expectation(spec, PauliString::single(Pauli::Y, q)) != 0.0) {
                y_exact = false;
            }
            const double ed = ed_engine(spec, q).value;
            worst_ed_low = std::min(worst_ed_low, ed);
            worst_ed_high = std::max(worst_ed_high, ed);
        }
    }
    const bool passed = y_exact && worst_ed_low >= 0.0 &&
                        worst_ed_high <= 1.0 + 1e-10 && worst_imag < 1e-12 &&
                        worst_norm < 1e-12;
    report(7, "reality and range over 200 random circuits", passed,
           "<Y> exact: %s, ED in [%.3g, %.3g], max imag %.3g, norm err %.3g",
           y_exact ? "yes" : "no", worst_ed_low, worst_ed_high, worst_imag,
           worst_norm);
    CHECK(passed);
}

TEST_CASE("08 sampled agreement bands on the two-qubit surfaces") {
    bool passed = true;
    char detail[160];
    std::string summary;
    for (const auto preset :
         {SurfacePreset::Fig2, SurfacePreset::Fig3, SurfacePreset::Fig4}) {
        SweepSpec sweep = preset_sweep(preset, 9);
        sweep.evaluators = {Evaluator::ClosedForm, Evaluator::Sampled};
        const SweepResult grid = run_sweep(sweep, ShotConfig{1024, 1});
        const AgreementMetrics metrics =
            agreement(grid.column(Evaluator::ClosedForm),
                      grid.column(Evaluator::Sampled));
        const double pearson = metrics.pearson.value_or(0.0);
        passed = passed && metrics.mae <= 0.03 && metrics.rmse <= 0.04 &&
                 pearson >= 0.99;
        std::snprintf(detail, sizeof(detail), "%s mae %.3f rmse %.3f r %.4f; ",
                      to_string(preset).c_str(), metrics.mae, metrics.rmse,
                      pearson);
        summary += detail;
    }
    report(8, "1024-shot 9x9 grids", passed,
           "%s(bands: mae <= 0.03, rmse <= 0.04, r >= 0.99)", summary.c_str());
    CHECK(passed);
}

TEST_CASE("09 shot scaling of the grid error") {
    SweepSpec sweep = preset_sweep(SurfacePreset::Fig2, 9);
    sweep.evaluators = {Evaluator::ClosedForm, Evaluator::Sampled};

    const auto mean_rmse = [&](std::uint32_t shots) {
        double total = 0.0;
        const int seeds = 50;
        for (int s = 0; s < seeds; ++s) {
            const SweepResult grid = run_sweep(
                sweep, ShotConfig{shots, static_cast<std::uint64_t>(s)});
            total += agreement(grid.column(Evaluator::ClosedForm),
                               grid.column(Evaluator::Sampled))
                         .rmse;
        }
        return total / seeds;
    };
    const double coarse = mean_rmse(1024);
    const double refined = mean_rmse(16384);
    const double ratio = refined / coarse;
    const bool passed = ratio >= 0.2 && ratio <= 0.35;
    report(9, "RMSE ratio 16384 vs 1024 shots, 50 seeds", passed,
           "ratio = %.3f (band [0.20, 0.35], ideal 0.25)", ratio);
    CHECK(passed);
}

TEST_CASE("10 light cone on the 9-qubit ring at depth 2") {
    std::mt19937_64 rng(1010);
    const std::uint32_t n = 9, target = 4;
    std::uint64_t window = 0;
    for (std::uint32_t q = target - 2; q <= target + 2; ++q) {
        window |= 1ULL << q;
    }

    bool support_ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<double>> angles(2, std::vector<double>(n));
        for (auto& row : angles) {
            for (auto& theta : row) {
                theta = uniform_angle(rng);
            }
        }
        const CircuitSpec spec(Topology::closed_chain(n), angles);
        const BackpropResult result =
            backpropagate(spec, PauliString::single(Pauli::X, target));
        if ((result.evolved.support_mask() & ~window) != 0) {
            support_ok = false;
        }

        const double reference = ed_engine(spec, target).value;
        CircuitSpec perturbed = spec;
        for (const std::uint32_t far : {0u, 1u, 7u, 8u}) {
            perturbed = perturbed.with_angle(1, far, uniform_angle(rng));
            perturbed = perturbed.with_angle(2, far, uniform_angle(rng));
        }
        worst = std::max(worst,
                         std::abs(ed_engine(perturbed, target).value -
                                  reference));
    }
    const bool passed = support_ok && worst <= 1e-12;
    report(10, "depth-2 support and ED locality", passed,
           "support in window: %s, max ED shift %.3g (tolerance 1e-12)",
           support_ok ? "yes" : "no", worst);
    CHECK(passed);
}
