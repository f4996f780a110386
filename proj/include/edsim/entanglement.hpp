#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "edsim/circuit.hpp"
#include "edsim/pauli.hpp"

namespace edsim {

enum class EdMethod { Engine, ClosedForm, Sampled };

std::string to_string(EdMethod method);

/// Per-qubit entanglement-distance report: the Bloch components at the
/// given depth and the value 1 - x^2 - y^2 - z^2 in [0, 1].
struct EDReport {
    std::uint32_t qubit;
    std::uint32_t depth;
    Bloch bloch;
    double value;
    EdMethod method;
};

/// 1 - x^2 - y^2 - z^2, clamped to [0, 1]. Values below -1e-10 (a Bloch
/// norm exceeding 1 beyond tolerance) signal inconsistent inputs and throw.
double ed_from_bloch(double x, double y, double z);

/// Entanglement distance of one qubit from the back-propagation engine.
EDReport ed_engine(const CircuitSpec& spec, std::uint32_t qubit);

/// For the pair topology the entanglement distance of either qubit equals
/// the square of the <Y0 Y1> correlator; this evaluates that route.
double ed_two_qubit_identity(const CircuitSpec& spec);

/// The independently transcribed closed-form entanglement-distance
/// expressions. Each takes the rotation angles it depends on and nothing
/// else, so agreement with ed_engine is a genuine cross-check.
enum class ClosedFormKind {
    PairDepth1,   // two qubits, one layer; angles (t0_1, t1_1)
    PairDepth2,   // two qubits, two layers; angles (t0_1, t1_1, t0_2, t1_2)
    ChainDepth1,  // ring, one layer; angles (t_a, t_prev, t_next)
    ChainDepth2,  // ring of N >= 5, two layers; ten angles, see below
};

double ed_pair_depth1(double t0_1, double t1_1);
double ed_pair_depth2(double t0_1, double t1_1, double t0_2, double t1_2);
double ed_chain_depth1(double t_a, double t_prev, double t_next);

/// Angles feeding the depth-2 ring expression: entries are ordered by
/// chain offset a-2, a-1, a, a+1, a+2 for each layer. Valid only when the
/// five sites are distinct (N >= 5).
struct ChainDepth2Angles {
    std::array<double, 5> layer1;
    std::array<double, 5> layer2;
};

double ed_chain_depth2(const ChainDepth2Angles& angles);

/// Dispatcher over the four closed forms with arity checking. Angle order:
///   PairDepth1:  t0_1, t1_1
///   PairDepth2:  t0_1, t1_1, t0_2, t1_2
///   ChainDepth1: t_a, t_prev, t_next
///   ChainDepth2: layer-1 angles at offsets a-2..a+2, then layer-2 angles
///                at offsets a-2..a+2 (10 total)
double closed_form(ClosedFormKind kind, std::span<const double> angles);

/// The closed form matching a circuit spec, if any: pair at depth 1 or 2,
/// ring at depth 1, or ring of N >= 5 at depth 2.
std::optional<ClosedFormKind> applicable_closed_form(const CircuitSpec& spec);

/// Evaluates the applicable closed form with the spec's own angles around
/// the target qubit. Throws when no closed form applies.
EDReport closed_form_ed(const CircuitSpec& spec, std::uint32_t qubit);

/// Built-in two-angle entanglement-distance surfaces. Fig2..Fig4 are
/// three-layer two-qubit circuits with one layer pinned at pi/2 and the
/// other two layers swept (both qubits sharing each layer's angle). Fig6
/// sweeps uniform per-layer angles on the 5-qubit ring at depth 2. Fig7
/// sweeps the target qubit's angle against a uniform environment angle on
/// the same ring.
enum class SurfacePreset { Fig2, Fig3, Fig4, Fig6, Fig7 };

SurfacePreset surface_preset_from_name(const std::string& name);
std::string to_string(SurfacePreset preset);

/// Evaluates the preset's closed-form surface at the swept angles (a, b).
double surface_formula(SurfacePreset preset, double a, double b);

}  // namespace edsim
