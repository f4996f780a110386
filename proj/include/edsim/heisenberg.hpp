#pragma once

#include <cstdint>
#include <vector>

#include "edsim/circuit.hpp"
#include "edsim/pauli.hpp"

namespace edsim {

/// Outcome of back-propagating an observable through the full circuit.
struct BackpropResult {
    PauliSum evolved;
    /// Term count after each conjugated layer, deepest layer first
    /// (exactly L entries).
    std::vector<std::size_t> term_counts;
};

/// Evolves the observable backward through layers L..1. Each layer is the
/// reverse of its forward gate order: first the CZ edges, then the RY
/// rotation on every qubit.
///
/// Evaluation is exact by default. A positive prune_epsilon drops terms
/// with |coefficient| < prune_epsilon after each layer, trading accuracy
/// for memory on deep circuits; it is off (0.0) unless asked for.
BackpropResult backpropagate(const CircuitSpec& spec,
                             const PauliString& observable,
                             double prune_epsilon = 0.0);

/// <psi_L| observable |psi_L> as the vacuum expectation of the evolved sum.
double expectation(const CircuitSpec& spec, const PauliString& observable);

/// (<X_q>, <Y_q>, <Z_q>) after the full circuit. The y component is exactly
/// zero for this real-valued gate family.
Bloch bloch_vector(const CircuitSpec& spec, std::uint32_t qubit);

}  // namespace edsim
