#include "edsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace edsim {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

}  // namespace

StateVector::StateVector(std::uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n_qubits > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense statevector is limited to " +
            std::to_string(kMaxDenseQubits) + " qubits (asked for " +
            std::to_string(n_qubits) + ")");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, 0.0);
    amplitudes_[0] = 1.0;
}

void StateVector::check_qubit(std::uint32_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(n_qubits_) + " qubits");
    }
}

void StateVector::apply_ry(std::uint32_t qubit, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    apply_unitary1q(qubit, c, -s, s, c);
}

void StateVector::apply_cz(std::uint32_t a, std::uint32_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("CZ qubits must differ");
    }
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
        if ((idx & mask) == mask) {
            amplitudes_[idx] = -amplitudes_[idx];
        }
    }
}

void StateVector::apply_unitary1q(std::uint32_t qubit,
                                  std::complex<double> u00,
                                  std::complex<double> u01,
                                  std::complex<double> u10,
                                  std::complex<double> u11) {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
        if (idx & bit) {
            continue;
        }
        const std::complex<double> a0 = amplitudes_[idx];
        const std::complex<double> a1 = amplitudes_[idx | bit];
        amplitudes_[idx] = u00 * a0 + u01 * a1;
        amplitudes_[idx | bit] = u10 * a0 + u11 * a1;
    }
}

double StateVector::marginal_zero_probability(std::uint32_t qubit) const {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t idx = 0; idx < amplitudes_.size(); ++idx) {
        if ((idx & bit) == 0) {
            p += std::norm(amplitudes_[idx]);
        }
    }
    if (p < 0.0) {
        p = 0.0;
    }
    if (p > 1.0) {
        p = 1.0;
    }
    return p;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const auto& a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

double StateVector::max_imag() const {
    double worst = 0.0;
    for (const auto& a : amplitudes_) {
        worst = std::max(worst, std::abs(a.imag()));
    }
    return worst;
}

StateVector run(const CircuitSpec& spec) {
    StateVector state(spec.num_qubits());
    for (std::uint32_t layer = 1; layer <= spec.layers(); ++layer) {
        for (const Gate& g : layer_gates(spec, layer)) {
            switch (g.kind) {
                case Gate::Kind::Ry:
                    state.apply_ry(g.q0, g.angle);
                    break;
                case Gate::Kind::Cz:
                    state.apply_cz(g.q0, g.q1);
                    break;
            }
        }
    }
    return state;
}

double pauli_expectation(const StateVector& state,
                         const PauliString& observable) {
    const std::uint32_t n = state.num_qubits();
    if (observable.support_mask() != 0 && observable.max_qubit() >= n) {
        throw std::out_of_range("observable acts on qubit " +
                                std::to_string(observable.max_qubit()) +
                                " outside the state");
    }
    const auto amps = state.amplitudes();
    const std::uint64_t x_mask = observable.x_mask();
    const std::uint64_t y_mask = observable.x_mask() & observable.z_mask();
    const std::uint64_t z_mask = observable.z_mask() & ~observable.x_mask();

    // P|b> = phase(b) |b ^ x_mask> with
    // phase(b) = sign * i^{|Y|} * (-1)^{popcount(b & (z_mask|y_mask))}.
    const int y_count = std::popcount(y_mask);
    static constexpr std::complex<double> kIPow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const std::complex<double> base_phase =
        static_cast<double>(observable.sign()) * kIPow[y_count & 3];

    std::complex<double> acc = 0.0;
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        const int parity =
            std::popcount(static_cast<std::uint64_t>(idx) & (z_mask | y_mask)) & 1;
        const std::complex<double> phase = parity ? -base_phase : base_phase;
        acc += std::conj(amps[idx ^ x_mask]) * phase * amps[idx];
    }
    if (std::abs(acc.imag()) > 1e-12) {
        throw std::logic_error("expectation of a Hermitian observable came "
                               "out complex");
    }
    return acc.real();
}

Bloch reduced_bloch(const StateVector& state, std::uint32_t qubit) {
    return Bloch{
        pauli_expectation(state, PauliString::single(Pauli::X, qubit)),
        pauli_expectation(state, PauliString::single(Pauli::Y, qubit)),
        pauli_expectation(state, PauliString::single(Pauli::Z, qubit)),
    };
}

}  // namespace edsim
