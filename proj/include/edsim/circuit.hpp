#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edsim {

enum class TopologyKind { Pair, ClosedChain };

/// Entangling topology of one layer. Pair is the two-qubit circuit with the
/// single edge (0,1). ClosedChain is a ring of N >= 3 qubits with edges
/// (q, q+1 mod N) listed in ascending q order.
struct Topology {
    TopologyKind kind;
    std::uint32_t n_qubits;

    static Topology pair();
    static Topology closed_chain(std::uint32_t n_qubits);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Layered ansatz description: entangling topology plus the angle schedule
/// theta[layer][qubit] in radians. Layer n applies RY on every qubit, then
/// CZ on every topology edge. Angles are kept exactly as given (no 2*pi
/// normalization).
class CircuitSpec {
public:
    CircuitSpec(Topology topology, std::vector<std::vector<double>> angles);

    const Topology& topology() const { return topology_; }
    std::uint32_t num_qubits() const { return topology_.n_qubits; }
    std::uint32_t layers() const {
        return static_cast<std::uint32_t>(angles_.size());
    }

    /// Rotation angle of the given qubit in the given layer (1-based).
    double angle(std::uint32_t layer, std::uint32_t qubit) const;
    const std::vector<std::vector<double>>& angles() const { return angles_; }

    /// Copy with one angle replaced; used by perturbation tests and sweeps.
    CircuitSpec with_angle(std::uint32_t layer, std::uint32_t qubit,
                           double theta) const;

    friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;

private:
    Topology topology_;
    std::vector<std::vector<double>> angles_;
};

struct Gate {
    enum class Kind { Ry, Cz };
    Kind kind;
    std::uint32_t q0;
    std::uint32_t q1;    // second CZ qubit; unused for Ry
    double angle;        // Ry angle; unused for Cz
};

/// Gates of one layer in application order: RY on qubits 0..N-1, then CZ on
/// each topology edge ascending. The CZ order within a layer is semantically
/// irrelevant (CZ gates commute); the ascending order is for reproducibility.
std::vector<Gate> layer_gates(const CircuitSpec& spec, std::uint32_t layer);

/// Parses a circuit spec document (JSON). Fields:
///   topology: "pair" | "closed_chain"
///   n_qubits: integer (optional for "pair", where it defaults to 2)
///   layers:   integer >= 0
///   angles:   scalar (all qubits, all layers)
///             | array of `layers` numbers (per-layer, broadcast to qubits)
///             | array of `layers` rows of `n_qubits` numbers
CircuitSpec parse_spec(const std::string& text);

/// Reads and parses a spec file.
CircuitSpec load_spec(const std::string& path);

/// Canonical JSON form (full angle matrix). parse_spec(serialize_spec(s))
/// reproduces s exactly.
std::string serialize_spec(const CircuitSpec& spec);

}  // namespace edsim
