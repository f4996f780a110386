#include "edsim/heisenberg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "edsim/statevector.hpp"
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

}  // namespace

TEST_CASE("single-layer expectations") {
    const double t0 = kPi / 2, t1 = kPi / 3;
    const CircuitSpec spec(Topology::pair(), {{t0, t1}});
    CHECK(expectation(spec, PauliString::parse("X0")) ==
          doctest::Approx(std::sin(t0) * std::cos(t1)).epsilon(1e-14));
    CHECK(expectation(spec, PauliString::parse("X0")) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(expectation(spec, PauliString::parse("Z0")) ==
          doctest::Approx(std::cos(t0)).epsilon(1e-14));

    // uniform ring: <Z_a> depends only on the qubit's own angle
    const double theta = 0.77;
    const CircuitSpec ring(Topology::closed_chain(5),
                           {std::vector<double>(5, theta)});
    for (std::uint32_t q = 0; q < 5; ++q) {
        CHECK(expectation(ring, PauliString::single(Pauli::Z, q)) ==
              doctest::Approx(std::cos(theta)).epsilon(1e-14));
    }
}

TEST_CASE("empty circuit returns the observable unchanged") {
    const CircuitSpec spec(Topology::closed_chain(4), {});
    const PauliString obs = PauliString::parse("X1 Z2");
    const BackpropResult result = backpropagate(spec, obs);
    CHECK(result.term_counts.empty());
    CHECK(result.evolved.size() == 1);
    CHECK(result.evolved.coefficient(obs) == 1.0);
}

TEST_CASE("<Y_q> vanishes exactly") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const CircuitSpec spec = random_spec(rng, 6, 4);
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            // every evolved term keeps an odd number of Y factors, so each
            // contributes exactly zero to the vacuum expectation
            CHECK(expectation(spec, PauliString::single(Pauli::Y, q)) == 0.0);
        }
    }
}

TEST_CASE("engine agrees with the dense oracle") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const CircuitSpec spec = random_spec(rng, 6, 4);
        const StateVector state = run(spec);
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            for (const Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                const PauliString obs = PauliString::single(p, q);
                CHECK(std::abs(expectation(spec, obs) -
                               pauli_expectation(state, obs)) < 1e-10);
            }
        }
        for (const auto& [a, b] : spec.topology().edges()) {
            for (const Pauli pa : {Pauli::X, Pauli::Y, Pauli::Z}) {
                for (const Pauli pb : {Pauli::X, Pauli::Y, Pauli::Z}) {
                    const PauliString obs{{a, pa}, {b, pb}};
                    CHECK(std::abs(expectation(spec, obs) -
                                   pauli_expectation(state, obs)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("two-qubit reference moments, depths 1..3") {
    // the written-out closed forms, cross-checked against both the engine
    // and the dense oracle
    std::mt19937_64 rng(47);
    const auto check_single = [&](const two_qubit::SingleMoments& m,
                                  const CircuitSpec& spec) {
        const StateVector state = run(spec);
        const struct {
            double reference;
            const char* obs;
        } rows[] = {
            {m.x0, "X0"}, {m.y0, "Y0"}, {m.z0, "Z0"},
            {m.x1, "X1"}, {m.y1, "Y1"}, {m.z1, "Z1"},
        };
        for (const auto& row : rows) {
            const PauliString obs = PauliString::parse(row.obs);
            CAPTURE(row.obs);
            CHECK(std::abs(row.reference - expectation(spec, obs)) < 1e-12);
            CHECK(std::abs(row.reference - pauli_expectation(state, obs)) <
                  1e-12);
        }
    };
    const auto check_pair = [&](const two_qubit::PairMoments& m,
                                const CircuitSpec& spec) {
        const struct {
            double reference;
            const char* obs;
        } rows[] = {
            {m.xx, "X0 X1"}, {m.xy, "X0 Y1"}, {m.xz, "X0 Z1"},
            {m.yx, "Y0 X1"}, {m.yy, "Y0 Y1"}, {m.yz, "Y0 Z1"},
            {m.zx, "Z0 X1"}, {m.zy, "Z0 Y1"}, {m.zz, "Z0 Z1"},
        };
        for (const auto& row : rows) {
            const PauliString obs = PauliString::parse(row.obs);
            CAPTURE(row.obs);
            CHECK(std::abs(row.reference - expectation(spec, obs)) < 1e-12);
        }
    };

    for (int trial = 0; trial < 40; ++trial) {
        const two_qubit::LayerAngles t1{uniform_angle(rng), uniform_angle(rng)};
        const two_qubit::LayerAngles t2{uniform_angle(rng), uniform_angle(rng)};
        const two_qubit::LayerAngles t3{uniform_angle(rng), uniform_angle(rng)};
        const CircuitSpec spec1(Topology::pair(), {{t1.q0, t1.q1}});
        const CircuitSpec spec2(Topology::pair(),
                                {{t1.q0, t1.q1}, {t2.q0, t2.q1}});
        const CircuitSpec spec3(
            Topology::pair(),
            {{t1.q0, t1.q1}, {t2.q0, t2.q1}, {t3.q0, t3.q1}});

        check_single(two_qubit::depth1_single(t1), spec1);
        check_pair(two_qubit::depth1_pair(t1), spec1);
        check_single(two_qubit::depth2_single(t1, t2), spec2);
        check_pair(two_qubit::depth2_pair(t1, t2), spec2);
        check_single(two_qubit::depth3_single(t1, t2, t3), spec3);
    }
}

TEST_CASE("bloch vectors") {
    const CircuitSpec empty(Topology::pair(), {});
    const Bloch up = bloch_vector(empty, 0);
    CHECK(up.x == 0.0);
    CHECK(up.y == 0.0);
    CHECK(up.z == 1.0);

    const CircuitSpec bell(Topology::pair(), {{kPi / 2, kPi / 2}});
    const Bloch mixed = bloch_vector(bell, 0);
    CHECK(std::abs(mixed.x) < 1e-14);
    CHECK(mixed.y == 0.0);
    CHECK(std::abs(mixed.z) < 1e-14);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const CircuitSpec spec = random_spec(rng, 6, 4);
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            const Bloch b = bloch_vector(spec, q);
            CHECK(b.y == 0.0);
            CHECK(b.norm2() <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("evolved support stays inside the light cone") {
    std::mt19937_64 rng(59);
    const std::uint32_t n = 9;
    for (std::uint32_t layers = 1; layers <= 3; ++layers) {
        std::vector<std::vector<double>> angles(layers,
                                                std::vector<double>(n));
        for (auto& row : angles) {
            for (auto& theta : row) {
                theta = uniform_angle(rng);
            }
        }
        const CircuitSpec spec(Topology::closed_chain(n), angles);
        const std::uint32_t a = 4;
        const BackpropResult result =
            backpropagate(spec, PauliString::single(Pauli::X, a));
        CHECK(result.term_counts.size() == layers);

        std::uint64_t window = 0;
        for (std::int64_t offset = -static_cast<std::int64_t>(layers);
             offset <= static_cast<std::int64_t>(layers); ++offset) {
            window |= 1ULL << ((a + n + offset) % n);
        }
        CHECK((result.evolved.support_mask() & ~window) == 0);
    }
}

TEST_CASE("observable range errors") {
    const CircuitSpec spec(Topology::pair(), {{0.1, 0.2}});
    CHECK_THROWS_AS(expectation(spec, PauliString::parse("X2")),
                    std::out_of_range);
    CHECK_THROWS_AS(bloch_vector(spec, 2), std::out_of_range);
}

TEST_CASE("opt-in pruning trims small terms") {
    std::mt19937_64 rng(89);
    std::vector<std::vector<double>> angles(4, std::vector<double>(6));
    for (auto& row : angles) {
        for (auto& theta : row) {
            theta = uniform_angle(rng);
        }
    }
    const CircuitSpec spec(Topology::closed_chain(6), angles);
    const PauliString obs = PauliString::single(Pauli::X, 0);

    const BackpropResult exact = backpropagate(spec, obs);
    const BackpropResult same = backpropagate(spec, obs, 0.0);
    CHECK(exact.evolved.size() == same.evolved.size());
    CHECK(vacuum_expectation(exact.evolved) ==
          vacuum_expectation(same.evolved));

    const BackpropResult coarse = backpropagate(spec, obs, 0.05);
    CHECK(coarse.evolved.size() <= exact.evolved.size());
    CHECK(std::abs(vacuum_expectation(coarse.evolved) -
                   vacuum_expectation(exact.evolved)) < 0.05 * 64);

    CHECK_THROWS_AS(backpropagate(spec, obs, -1.0), std::invalid_argument);
}
