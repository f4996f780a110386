#include "edsim/entanglement.hpp"

#include <cmath>
#include <stdexcept>

#include "edsim/heisenberg.hpp"
#include "edsim/two_qubit_reference.hpp"

namespace edsim {

namespace {

constexpr double kNormTolerance = 1e-10;

double squared(double v) {
    return v * v;
}

struct ChainBloch {
    double x;
    double z;
};

ChainBloch chain_depth2_bloch(const ChainDepth2Angles& angles) {
    // Offsets into the five-site window around the target qubit.
    enum { M2 = 0, M1 = 1, A = 2, P1 = 3, P2 = 4 };
    const auto& t1 = angles.layer1;
    const auto& t2 = angles.layer2;

    const double x =
        std::sin(t1[A]) * std::cos(t2[A]) * std::cos(t2[M1]) * std::cos(t2[P1]) +
        std::sin(t2[A]) *
            (std::cos(t1[A]) * std::cos(t1[M1]) * std::cos(t1[P1]) *
                 std::cos(t2[M1]) * std::cos(t2[P1]) -
             std::cos(t1[M1]) * std::sin(t1[P1]) * std::cos(t1[P2]) *
                 std::cos(t2[M1]) * std::sin(t2[P1]) -
             std::sin(t1[M1]) * std::cos(t1[M2]) * std::cos(t1[P1]) *
                 std::sin(t2[M1]) * std::cos(t2[P1]) +
             std::cos(t1[A]) * std::sin(t1[M1]) * std::sin(t1[P1]) *
                 std::cos(t1[M2]) * std::cos(t1[P2]) * std::sin(t2[M1]) *
                 std::sin(t2[P1]));
    const double z =
        std::cos(t1[A]) * std::cos(t2[A]) -
        std::sin(t1[A]) * std::sin(t2[A]) * std::cos(t1[M1]) * std::cos(t1[P1]);
    return {x, z};
}

}  // namespace

std::string to_string(EdMethod method) {
    switch (method) {
        case EdMethod::Engine: return "engine";
        case EdMethod::ClosedForm: return "closed_form";
        case EdMethod::Sampled: return "sampled";
    }
    throw std::invalid_argument("invalid EdMethod");
}

double ed_from_bloch(double x, double y, double z) {
    const double norm2 = x * x + y * y + z * z;
    if (norm2 > 1.0 + kNormTolerance) {
        throw std::domain_error("Bloch norm " + std::to_string(norm2) +
                                " exceeds 1 beyond tolerance");
    }
    double value = 1.0 - norm2;
    if (value < 0.0) {
        value = 0.0;  // within -1e-10 of zero by the check above
    }
    if (value > 1.0) {
        value = 1.0;
    }
    return value;
}

EDReport ed_engine(const CircuitSpec& spec, std::uint32_t qubit) {
    const Bloch b = bloch_vector(spec, qubit);
    return EDReport{qubit, spec.layers(), b, ed_from_bloch(b.x, b.y, b.z),
                    EdMethod::Engine};
}

double ed_two_qubit_identity(const CircuitSpec& spec) {
    if (spec.topology().kind != TopologyKind::Pair) {
        throw std::invalid_argument(
            "the <Y0 Y1>^2 identity holds only for the pair topology");
    }
    const double yy = expectation(
        spec, PauliString{{0, Pauli::Y}, {1, Pauli::Y}});
    return yy * yy;
}

double ed_pair_depth1(double t0_1, double t1_1) {
    return squared(std::sin(t0_1)) * squared(std::sin(t1_1));
}

double ed_pair_depth2(double t0_1, double t1_1, double t0_2, double t1_2) {
    const double c0_1 = std::cos(t0_1), s0_1 = std::sin(t0_1);
    const double c1_1 = std::cos(t1_1), s1_1 = std::sin(t1_1);
    const double c0_2 = std::cos(t0_2), s0_2 = std::sin(t0_2);
    const double c1_2 = std::cos(t1_2), s1_2 = std::sin(t1_2);
    return squared(s0_1 * c0_2 * s1_2 + c0_1 * c1_1 * s0_2 * s1_2 +
                   s1_1 * s0_2 * c1_2);
}

double ed_chain_depth1(double t_a, double t_prev, double t_next) {
    return squared(std::sin(t_a)) *
           (1.0 - squared(std::cos(t_prev)) * squared(std::cos(t_next)));
}

double ed_chain_depth2(const ChainDepth2Angles& angles) {
    const ChainBloch b = chain_depth2_bloch(angles);
    return 1.0 - b.x * b.x - b.z * b.z;
}

double closed_form(ClosedFormKind kind, std::span<const double> angles) {
    const auto expect_arity = [&](std::size_t n) {
        if (angles.size() != n) {
            throw std::invalid_argument(
                "closed form expects " + std::to_string(n) + " angles, got " +
                std::to_string(angles.size()));
        }
    };
    switch (kind) {
        case ClosedFormKind::PairDepth1:
            expect_arity(2);
            return ed_pair_depth1(angles[0], angles[1]);
        case ClosedFormKind::PairDepth2:
            expect_arity(4);
            return ed_pair_depth2(angles[0], angles[1], angles[2], angles[3]);
        case ClosedFormKind::ChainDepth1:
            expect_arity(3);
            return ed_chain_depth1(angles[0], angles[1], angles[2]);
        case ClosedFormKind::ChainDepth2: {
            expect_arity(10);
            ChainDepth2Angles a{};
            for (int i = 0; i < 5; ++i) {
                a.layer1[i] = angles[i];
                a.layer2[i] = angles[5 + i];
            }
            return ed_chain_depth2(a);
        }
    }
    throw std::invalid_argument("invalid ClosedFormKind");
}

std::optional<ClosedFormKind> applicable_closed_form(const CircuitSpec& spec) {
    if (spec.topology().kind == TopologyKind::Pair) {
        if (spec.layers() == 1) {
            return ClosedFormKind::PairDepth1;
        }
        if (spec.layers() == 2) {
            return ClosedFormKind::PairDepth2;
        }
        return std::nullopt;
    }
    if (spec.layers() == 1) {
        return ClosedFormKind::ChainDepth1;
    }
    // The depth-2 ring expression treats the window a-2..a+2 as five
    // distinct sites, so it is only offered for N >= 5.
    if (spec.layers() == 2 && spec.num_qubits() >= 5) {
        return ClosedFormKind::ChainDepth2;
    }
    return std::nullopt;
}

EDReport closed_form_ed(const CircuitSpec& spec, std::uint32_t qubit) {
    if (qubit >= spec.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) +
                                " out of range");
    }
    const auto kind = applicable_closed_form(spec);
    if (!kind) {
        throw std::invalid_argument(
            "no closed-form expression applies to this topology/depth "
            "combination");
    }
    const std::uint32_t n = spec.num_qubits();
    const auto ring = [&](std::int64_t offset) {
        return static_cast<std::uint32_t>(
            ((static_cast<std::int64_t>(qubit) + offset) % n + n) % n);
    };

    // The Bloch components come from the same family of transcribed
    // expressions, so the report stays consistent with its value without
    // touching the engine.
    double value = 0.0;
    Bloch bloch{};
    switch (*kind) {
        case ClosedFormKind::PairDepth1: {
            value = ed_pair_depth1(spec.angle(1, 0), spec.angle(1, 1));
            const two_qubit::SingleMoments m = two_qubit::depth1_single(
                {spec.angle(1, 0), spec.angle(1, 1)});
            bloch = qubit == 0 ? Bloch{m.x0, m.y0, m.z0}
                               : Bloch{m.x1, m.y1, m.z1};
            break;
        }
        case ClosedFormKind::PairDepth2: {
            value = ed_pair_depth2(spec.angle(1, 0), spec.angle(1, 1),
                                   spec.angle(2, 0), spec.angle(2, 1));
            const two_qubit::SingleMoments m = two_qubit::depth2_single(
                {spec.angle(1, 0), spec.angle(1, 1)},
                {spec.angle(2, 0), spec.angle(2, 1)});
            bloch = qubit == 0 ? Bloch{m.x0, m.y0, m.z0}
                               : Bloch{m.x1, m.y1, m.z1};
            break;
        }
        case ClosedFormKind::ChainDepth1: {
            const double t_a = spec.angle(1, qubit);
            const double t_prev = spec.angle(1, ring(-1));
            const double t_next = spec.angle(1, ring(+1));
            value = ed_chain_depth1(t_a, t_prev, t_next);
            bloch = Bloch{std::sin(t_a) * std::cos(t_prev) * std::cos(t_next),
                          0.0, std::cos(t_a)};
            break;
        }
        case ClosedFormKind::ChainDepth2: {
            ChainDepth2Angles a{};
            for (int i = 0; i < 5; ++i) {
                const std::uint32_t site = ring(i - 2);
                a.layer1[i] = spec.angle(1, site);
                a.layer2[i] = spec.angle(2, site);
            }
            value = ed_chain_depth2(a);
            const ChainBloch b = chain_depth2_bloch(a);
            bloch = Bloch{b.x, 0.0, b.z};
            break;
        }
    }
    if (value < 0.0 && value >= -1e-12) {
        value = 0.0;  // float dust from the 1 - x^2 - z^2 arrangement
    }
    return EDReport{qubit, spec.layers(), bloch, value, EdMethod::ClosedForm};
}

SurfacePreset surface_preset_from_name(const std::string& name) {
    if (name == "fig2") return SurfacePreset::Fig2;
    if (name == "fig3") return SurfacePreset::Fig3;
    if (name == "fig4") return SurfacePreset::Fig4;
    if (name == "fig6") return SurfacePreset::Fig6;
    if (name == "fig7") return SurfacePreset::Fig7;
    throw std::invalid_argument("unknown surface preset '" + name +
                                "' (expected fig2, fig3, fig4, fig6 or fig7)");
}

std::string to_string(SurfacePreset preset) {
    switch (preset) {
        case SurfacePreset::Fig2: return "fig2";
        case SurfacePreset::Fig3: return "fig3";
        case SurfacePreset::Fig4: return "fig4";
        case SurfacePreset::Fig6: return "fig6";
        case SurfacePreset::Fig7: return "fig7";
    }
    throw std::invalid_argument("invalid SurfacePreset");
}

double surface_formula(SurfacePreset preset, double a, double b) {
    switch (preset) {
        case SurfacePreset::Fig2: {
            // Pair, three layers, layer 1 pinned at pi/2; a = layer-2 angle,
            // b = layer-3 angle, both qubits sharing each layer's angle.
            const double c2 = std::cos(a), s2 = std::sin(a);
            const double c3 = std::cos(b), s3 = std::sin(b);
            return squared(c3 * c3 - (c2 * s2 + s2 * c2) * s3 * s3);
        }
        case SurfacePreset::Fig3: {
            // Layer 2 pinned at pi/2; a = layer-1 angle, b = layer-3 angle.
            const double c1 = std::cos(a), s1 = std::sin(a);
            const double c3 = std::cos(b), s3 = std::sin(b);
            return squared(s1 * s1 * c3 * c3 + c1 * c3 * s3 + c1 * s3 * c3);
        }
        case SurfacePreset::Fig4: {
            // Layer 3 pinned at pi/2; a = layer-1 angle, b = layer-2 angle.
            const double c1 = std::cos(a), s1 = std::sin(a);
            const double c2 = std::cos(b), s2 = std::sin(b);
            return squared(c1 * c1 * c2 * c2 - s1 * c2 * s2 - s1 * s2 * c2);
        }
        case SurfacePreset::Fig6: {
            // 5-qubit ring at depth 2, uniform angle per layer: a = layer 1,
            // b = layer 2.
            const double c1 = std::cos(a), s1 = std::sin(a);
            const double c2 = std::cos(b), s2 = std::sin(b);
            const double x =
                s1 * c2 * c2 * c2 +
                s2 * (c1 * c1 * c1 * c2 * c2 - 2.0 * s1 * c1 * c1 * s2 * c2 +
                      s1 * s1 * c1 * c1 * c1 * s2 * s2);
            const double z = c1 * c2 - s1 * c1 * c1 * s2;
            return 1.0 - x * x - z * z;
        }
        case SurfacePreset::Fig7: {
            // 5-qubit ring at depth 2; a = target qubit's angle in both
            // layers, b = uniform environment angle in both layers.
            const double ca = std::cos(a), sa = std::sin(a);
            const double c = std::cos(b), s = std::sin(b);
            const double x =
                sa * ca * c * c +
                sa * (ca * c * c * c * c - 2.0 * s * s * c * c * c +
                      s * s * s * s * ca * c * c);
            const double z = ca * ca - sa * sa * c * c;
            return 1.0 - x * x - z * z;
        }
    }
    throw std::invalid_argument("invalid SurfacePreset");
}

}  // namespace edsim
