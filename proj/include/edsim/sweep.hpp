#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edsim/circuit.hpp"
#include "edsim/entanglement.hpp"
#include "edsim/sampler.hpp"

namespace edsim {

enum class Evaluator { Engine, ClosedForm, Sampled };

Evaluator evaluator_from_name(const std::string& name);
std::string to_string(Evaluator evaluator);

/// One swept angle: `count` evenly spaced values over [start, stop].
struct AxisSpec {
    std::string name;
    double start;
    double stop;
    int count;

    std::vector<double> values() const;
};

/// Circuit description whose angle entries may name one of the sweep axes
/// instead of carrying a number.
class CircuitTemplate {
public:
    using Entry = std::variant<double, std::string>;

    CircuitTemplate(Topology topology, std::vector<std::vector<Entry>> entries);

    const Topology& topology() const { return topology_; }
    std::uint32_t layers() const {
        return static_cast<std::uint32_t>(entries_.size());
    }

    /// Axis names referenced by at least one entry.
    std::vector<std::string> free_names() const;

    /// Resolves every named entry against the two axis bindings.
    CircuitSpec instantiate(const std::string& name_a, double a,
                            const std::string& name_b, double b) const;

private:
    Topology topology_;
    std::vector<std::vector<Entry>> entries_;
};

/// Two-axis entanglement-distance sweep over a circuit template. Built-in
/// presets additionally carry the matching closed-form surface; generic
/// sweeps fall back to the closed form applicable to the instantiated spec.
struct SweepSpec {
    CircuitTemplate circuit;
    AxisSpec axis1;
    AxisSpec axis2;
    std::uint32_t qubit;
    std::vector<Evaluator> evaluators;
    std::optional<SurfacePreset> preset;
};

/// Parses a sweep document (JSON): either {"preset": "fig2", ...overrides}
/// or an explicit {"template", "axes", "qubit", "evaluators"} object.
SweepSpec parse_sweep(const std::string& text);
SweepSpec load_sweep(const std::string& path);

/// The built-in sweep for a surface preset with `count` points per axis.
SweepSpec preset_sweep(SurfacePreset preset, int count = 25);

/// Fully specified circuit for one preset grid point, and the qubit whose
/// entanglement distance the preset tracks.
CircuitSpec preset_circuit(SurfacePreset preset, double a, double b);
std::uint32_t preset_qubit(SurfacePreset preset);

/// Evaluated grid in row-major order (axis1 outer, axis2 inner). columns
/// holds one value vector per requested evaluator, in the order listed in
/// `evaluators`.
struct SweepResult {
    std::string axis1_name;
    std::string axis2_name;
    std::vector<double> axis1_values;
    std::vector<double> axis2_values;
    std::vector<Evaluator> evaluators;
    std::vector<std::vector<double>> columns;

    std::size_t points() const {
        return axis1_values.size() * axis2_values.size();
    }
    std::size_t row_index(std::size_t i1, std::size_t i2) const {
        return i1 * axis2_values.size() + i2;
    }
    const std::vector<double>& column(Evaluator evaluator) const;
};

/// Runs the sweep. Sampled points use sub-seeds derived from cfg.seed and
/// the row-major point index, so the output is independent of `jobs`.
SweepResult run_sweep(const SweepSpec& sweep, const ShotConfig& cfg,
                      int jobs = 1);

/// CSV rendering: header `axis1,axis2,<evaluators...>`, one row per grid
/// point in row-major order, every number printed with 17 significant
/// digits. Byte-stable for identical inputs and seeds.
std::string to_csv(const SweepResult& result);

}  // namespace edsim
