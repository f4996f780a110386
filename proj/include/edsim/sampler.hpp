#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "edsim/circuit.hpp"
#include "edsim/entanglement.hpp"
#include "edsim/pauli.hpp"

namespace edsim {

/// Finite-shot estimation settings. Estimates are bit-for-bit reproducible:
/// the generator is a std::mt19937_64 (fully pinned by the standard) seeded
/// per estimate via derive_stream_seed, uniforms come from the top 53 bits,
/// and the binomial draw counts explicit Bernoulli trials.
struct ShotConfig {
    std::uint32_t shots = 1024;
    std::uint64_t seed = 0;
};

/// Grid-agreement summary between an analytic and a sampled value grid.
/// pearson is empty when either grid is constant (the correlation is
/// undefined there, not zero).
struct AgreementMetrics {
    double mae;
    double rmse;
    std::optional<double> pearson;
};

/// Per-estimate RNG stream id: a SplitMix64 chain over the user seed, the
/// measurement basis tag (X=1, Y=2, Z=3) and the grid-point index. Distinct
/// bases and grid points get independent streams from one user seed.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t basis_tag,
                                 std::uint64_t point_index);

/// Estimates <observable> from cfg.shots simulated measurements.
///
/// The observable must be a single-qubit X, Y or Z. The state is prepared
/// with the dense simulator, rotated into the measurement basis (X via
/// RY(-pi/2) on the measured qubit; Y via S-adjoint then Hadamard), the
/// exact probability p of reading 0 is computed, and k ~ Binomial(shots, p)
/// is drawn from the seeded stream. Returns 2k/shots - 1.
double estimate_pauli(const CircuitSpec& spec, const PauliString& observable,
                      const ShotConfig& cfg, std::uint64_t point_index = 0);

/// Entanglement distance from three sampled Bloch components (independent
/// X/Y/Z streams), clamped to [0, 1]; method = Sampled.
EDReport estimate_ed(const CircuitSpec& spec, std::uint32_t qubit,
                     const ShotConfig& cfg, std::uint64_t point_index = 0);

/// mae = mean |a - s|, rmse = sqrt(mean (a - s)^2), pearson = sample
/// correlation coefficient. Grids must be non-empty and equal-shaped.
AgreementMetrics agreement(std::span<const double> analytic,
                           std::span<const double> sampled);

}  // namespace edsim
