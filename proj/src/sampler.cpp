#include "edsim/sampler.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "edsim/statevector.hpp"

namespace edsim {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the engine's top 53 bits.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint32_t binomial_draw(std::mt19937_64& rng, std::uint32_t shots,
                            double p) {
    std::uint32_t k = 0;
    for (std::uint32_t i = 0; i < shots; ++i) {
        k += uniform01(rng) < p;
    }
    return k;
}

std::uint64_t basis_tag(Pauli p) {
    switch (p) {
        case Pauli::X: return 1;
        case Pauli::Y: return 2;
        case Pauli::Z: return 3;
        case Pauli::I: break;
    }
    throw std::invalid_argument("measurement basis must be X, Y or Z");
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t point_index) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ tag);
    h = splitmix64(h ^ point_index);
    return h;
}

double estimate_pauli(const CircuitSpec& spec, const PauliString& observable,
                      const ShotConfig& cfg, std::uint64_t point_index) {
    if (cfg.shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (observable.weight() != 1 || observable.sign() != 1) {
        throw std::invalid_argument(
            "shot estimation supports exactly one unsigned single-qubit "
            "Pauli factor, got '" + observable.str() + "'");
    }
    const std::uint32_t qubit = observable.max_qubit();
    if (qubit >= spec.num_qubits()) {
        throw std::out_of_range("observable qubit out of range");
    }
    const Pauli basis = observable.factor(qubit);

    StateVector state = run(spec);
    switch (basis) {
        case Pauli::X:
            state.apply_ry(qubit, -kPi / 2.0);
            break;
        case Pauli::Y:
            // S-adjoint then Hadamard maps the Y eigenbasis onto Z.
            state.apply_unitary1q(qubit, 1.0, 0.0, 0.0, {0.0, -1.0});
            state.apply_unitary1q(qubit, 1.0 / std::sqrt(2.0),
                                  1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0),
                                  -1.0 / std::sqrt(2.0));
            break;
        case Pauli::Z:
            break;
        case Pauli::I:
            throw std::invalid_argument("identity is not a measurement basis");
    }

    const double p = state.marginal_zero_probability(qubit);
    std::mt19937_64 rng(derive_stream_seed(cfg.seed, basis_tag(basis),
                                           point_index));
    const std::uint32_t k = binomial_draw(rng, cfg.shots, p);
    return 2.0 * static_cast<double>(k) / static_cast<double>(cfg.shots) - 1.0;
}

EDReport estimate_ed(const CircuitSpec& spec, std::uint32_t qubit,
                     const ShotConfig& cfg, std::uint64_t point_index) {
    if (qubit >= spec.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) +
                                " out of range");
    }
    const Bloch b{
        estimate_pauli(spec, PauliString::single(Pauli::X, qubit), cfg,
                       point_index),
        estimate_pauli(spec, PauliString::single(Pauli::Y, qubit), cfg,
                       point_index),
        estimate_pauli(spec, PauliString::single(Pauli::Z, qubit), cfg,
                       point_index),
    };
    // Shot noise can push the estimated Bloch norm past 1; clamp instead of
    // rejecting.
    double value = 1.0 - b.norm2();
    if (value < 0.0) {
        value = 0.0;
    }
    if (value > 1.0) {
        value = 1.0;
    }
    return EDReport{qubit, spec.layers(), b, value, EdMethod::Sampled};
}

AgreementMetrics agreement(std::span<const double> analytic,
                           std::span<const double> sampled) {
    if (analytic.size() != sampled.size()) {
        throw std::invalid_argument("grids differ in size (" +
                                    std::to_string(analytic.size()) + " vs " +
                                    std::to_string(sampled.size()) + ")");
    }
    if (analytic.empty()) {
        throw std::invalid_argument("grids are empty");
    }
    const auto n = static_cast<double>(analytic.size());

    double abs_sum = 0.0, sq_sum = 0.0;
    double a_mean = 0.0, s_mean = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const double d = analytic[i] - sampled[i];
        abs_sum += std::abs(d);
        sq_sum += d * d;
        a_mean += analytic[i];
        s_mean += sampled[i];
    }
    a_mean /= n;
    s_mean /= n;

    double cov = 0.0, a_var = 0.0, s_var = 0.0;
    for (std::size_t i = 0; i < analytic.size(); ++i) {
        const double da = analytic[i] - a_mean;
        const double ds = sampled[i] - s_mean;
        cov += da * ds;
        a_var += da * da;
        s_var += ds * ds;
    }

    AgreementMetrics out{abs_sum / n, std::sqrt(sq_sum / n), std::nullopt};
    if (a_var > 0.0 && s_var > 0.0) {
        out.pearson = cov / std::sqrt(a_var * s_var);
    }
    return out;
}

}  // namespace edsim
