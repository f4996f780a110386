#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "edsim/circuit.hpp"
#include "edsim/pauli.hpp"

namespace edsim {

/// Dense 2^N complex amplitude vector used as the brute-force oracle.
///
/// Bit convention (fixed): qubit q addresses bit q of the basis-state
/// index, so |amplitudes[idx]| is the amplitude of the basis state whose
/// qubit q reads ((idx >> q) & 1).
class StateVector {
public:
    static constexpr std::uint32_t kMaxDenseQubits = 24;

    /// |0...0> on n qubits.
    explicit StateVector(std::uint32_t n_qubits);

    std::uint32_t num_qubits() const { return n_qubits_; }
    std::span<const std::complex<double>> amplitudes() const {
        return amplitudes_;
    }

    /// Rotation exp(-i theta Y / 2):
    /// [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
    void apply_ry(std::uint32_t qubit, double theta);

    /// Negates the amplitude of every basis state with both edge qubits set.
    void apply_cz(std::uint32_t a, std::uint32_t b);

    /// General single-qubit unitary [[u00, u01], [u10, u11]].
    void apply_unitary1q(std::uint32_t qubit, std::complex<double> u00,
                         std::complex<double> u01, std::complex<double> u10,
                         std::complex<double> u11);

    /// Probability of reading 0 on the given qubit in the Z basis.
    double marginal_zero_probability(std::uint32_t qubit) const;

    double norm() const;
    /// Largest |imaginary part| over all amplitudes.
    double max_imag() const;

private:
    void check_qubit(std::uint32_t qubit) const;

    std::uint32_t n_qubits_;
    std::vector<std::complex<double>> amplitudes_;
};

/// Applies layer_gates for layers 1..L in forward order to |0...0>.
StateVector run(const CircuitSpec& spec);

/// <psi| P |psi>. The result of a Hermitian observable is real; the
/// imaginary residual is checked against 1e-12 and discarded.
double pauli_expectation(const StateVector& state, const PauliString& observable);

/// (<X_q>, <Y_q>, <Z_q>) of one qubit.
Bloch reduced_bloch(const StateVector& state, std::uint32_t qubit);

}  // namespace edsim
