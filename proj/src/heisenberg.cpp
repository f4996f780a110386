#include "edsim/heisenberg.hpp"

#include <stdexcept>
#include <utility>

namespace edsim {

BackpropResult backpropagate(const CircuitSpec& spec,
                             const PauliString& observable,
                             double prune_epsilon) {
    if (observable.support_mask() != 0 &&
        observable.max_qubit() >= spec.num_qubits()) {
        throw std::out_of_range("observable acts on qubit " +
                                std::to_string(observable.max_qubit()) +
                                " outside the circuit");
    }
    if (prune_epsilon < 0.0) {
        throw std::invalid_argument("prune_epsilon must be >= 0");
    }
    const auto edges = spec.topology().edges();

    BackpropResult result;
    result.term_counts.reserve(spec.layers());
    PauliSum sum(observable);
    for (std::uint32_t layer = spec.layers(); layer >= 1; --layer) {
        sum = conjugate_cz_layer(sum, edges);
        for (std::uint32_t q = 0; q < spec.num_qubits(); ++q) {
            sum = conjugate_ry(sum, q, spec.angle(layer, q));
        }
        if (prune_epsilon > 0.0) {
            sum = sum.pruned(prune_epsilon);
        }
        result.term_counts.push_back(sum.size());
    }
    result.evolved = std::move(sum);
    return result;
}

double expectation(const CircuitSpec& spec, const PauliString& observable) {
    return vacuum_expectation(backpropagate(spec, observable).evolved);
}

Bloch bloch_vector(const CircuitSpec& spec, std::uint32_t qubit) {
    return Bloch{
        expectation(spec, PauliString::single(Pauli::X, qubit)),
        expectation(spec, PauliString::single(Pauli::Y, qubit)),
        expectation(spec, PauliString::single(Pauli::Z, qubit)),
    };
}

}  // namespace edsim
