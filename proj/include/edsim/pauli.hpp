#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edsim {

/// Single-qubit Pauli factor. The underlying encoding puts the X component
/// in bit 0 and the Z component in bit 1, so Y carries both bits and I
/// carries neither.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Result of conjugating a two-qubit factor pair (a on the first qubit,
/// b on the second) by CZ. The sign is -1 exactly for the {X,Y} and {Y,X}
/// pairs, +1 otherwise.
struct CzPairAction {
    Pauli first;
    Pauli second;
    int sign;
};

/// Factor-pair conjugation rule for CZ, precomputed over all 16 pairs.
constexpr CzPairAction cz_pair_action(Pauli a, Pauli b);

/// Signed tensor product of single-qubit Pauli factors over at most 64
/// qubits. Factors are held as X/Z bit masks (qubit q <-> bit q), which
/// makes the sparse canonical form ("identity factors are not stored")
/// hold by construction and string equality plain member comparison.
class PauliString {
public:
    static constexpr std::uint32_t kMaxQubits = 64;

    /// The identity operator: no factors, sign +1.
    PauliString() = default;

    PauliString(std::initializer_list<std::pair<std::uint32_t, Pauli>> factors,
                int sign = +1);

    static PauliString single(Pauli p, std::uint32_t qubit);

    /// Parses whitespace-separated factor tokens, e.g. "X0 Y1" or "Z12".
    /// "I" alone denotes the identity string. A leading '-' negates the
    /// sign. Duplicate qubit indices are rejected.
    static PauliString parse(std::string_view text);

    Pauli factor(std::uint32_t qubit) const;
    void set_factor(std::uint32_t qubit, Pauli p);

    int sign() const { return sign_; }
    void set_sign(int sign);
    void flip_sign() { sign_ = static_cast<std::int8_t>(-sign_); }

    bool is_identity() const { return x_ == 0 && z_ == 0 && sign_ == 1; }
    /// Number of non-identity factors.
    int weight() const;
    /// Bit q set iff a non-identity factor acts on qubit q.
    std::uint64_t support_mask() const { return x_ | z_; }
    /// Largest qubit with a non-identity factor; requires weight() > 0.
    std::uint32_t max_qubit() const;

    /// (qubit, factor) pairs in ascending qubit order.
    std::vector<std::pair<std::uint32_t, Pauli>> factors() const;
    std::string str() const;

    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }

    friend bool operator==(const PauliString&, const PauliString&) = default;

    struct Hash {
        std::size_t operator()(const PauliString& s) const noexcept;
    };

private:
    friend class PauliSum;
    PauliString(std::uint64_t x, std::uint64_t z, std::int8_t sign)
        : x_(x), z_(z), sign_(sign) {}

    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    std::int8_t sign_ = 1;
};

/// CZ^dagger s CZ for the edge (control, target). CZ is symmetric in its
/// two qubits and self-inverse.
PauliString conjugate_cz(const PauliString& s, std::uint32_t control,
                         std::uint32_t target);

/// Real-weighted sum of Pauli strings. Keys are unsigned strings; the sign
/// of an inserted string is folded into its coefficient. Terms whose
/// coefficient falls below kPruneEpsilon in magnitude are dropped during
/// merging.
class PauliSum {
public:
    static constexpr double kPruneEpsilon = 1e-15;

    PauliSum() = default;
    explicit PauliSum(const PauliString& s, double coeff = 1.0);

    void add(const PauliString& s, double coeff);
    /// Coefficient of the given string (sign-aware); 0 if absent.
    double coefficient(const PauliString& s) const;

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Copy without the terms whose |coefficient| < epsilon.
    PauliSum pruned(double epsilon) const;

    /// Union of the supports of all terms.
    std::uint64_t support_mask() const;

    /// Terms as (unsigned string, coefficient) pairs in a deterministic
    /// order (sorted by bit masks).
    std::vector<std::pair<PauliString, double>> terms() const;

    friend PauliSum conjugate_cz(const PauliSum& sum, std::uint32_t control,
                                 std::uint32_t target);
    friend PauliSum conjugate_cz_layer(
        const PauliSum& sum,
        std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
    friend PauliSum conjugate_ry(const PauliSum& sum, std::uint32_t qubit,
                                 double theta);
    friend double vacuum_expectation(const PauliSum& sum);

private:
    struct Key {
        std::uint64_t x;
        std::uint64_t z;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    void add_raw(Key k, double coeff);

    std::unordered_map<Key, double, KeyHash> terms_;
};

/// Applies conjugate_cz(s, control, target) to every term.
PauliSum conjugate_cz(const PauliSum& sum, std::uint32_t control,
                      std::uint32_t target);

/// Conjugates every term by a full layer of (mutually commuting) CZ edges
/// in a single pass.
PauliSum conjugate_cz_layer(
    const PauliSum& sum,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

/// RY^dagger(theta) . RY(theta) on one qubit: X -> cos X + sin Z,
/// Z -> cos Z - sin X, Y and I unchanged. Term count at most doubles;
/// like terms are merged.
PauliSum conjugate_ry(const PauliSum& sum, std::uint32_t qubit, double theta);

/// <0...0| sum |0...0>: a string contributes its coefficient iff every
/// stored factor is Z (any X or Y factor annihilates the term).
double vacuum_expectation(const PauliSum& sum);

/// Expectation triple (<X>, <Y>, <Z>) of a single qubit's reduced state.
struct Bloch {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    friend bool operator==(const Bloch&, const Bloch&) = default;
};

// -- inline definitions -----------------------------------------------------

namespace detail {

// CZ factor-pair table, row = factor on the first edge qubit, column =
// factor on the second, index order {I, X, Z, Y}.
inline constexpr CzPairAction kCzPairTable[4][4] = {
    /* I */ {{Pauli::I, Pauli::I, +1},
             {Pauli::Z, Pauli::X, +1},
             {Pauli::I, Pauli::Z, +1},
             {Pauli::Z, Pauli::Y, +1}},
    /* X */ {{Pauli::X, Pauli::Z, +1},
             {Pauli::Y, Pauli::Y, +1},
             {Pauli::X, Pauli::I, +1},
             {Pauli::Y, Pauli::X, -1}},
    /* Z */ {{Pauli::Z, Pauli::I, +1},
             {Pauli::I, Pauli::X, +1},
             {Pauli::Z, Pauli::Z, +1},
             {Pauli::I, Pauli::Y, +1}},
    /* Y */ {{Pauli::Y, Pauli::Z, +1},
             {Pauli::X, Pauli::Y, -1},
             {Pauli::Y, Pauli::I, +1},
             {Pauli::X, Pauli::X, +1}},
};

// The bit-mask rule used on the hot path: z_a ^= x_b, z_b ^= x_a, and the
// sign flips iff x_a & x_b & (z_a ^ z_b).
constexpr CzPairAction cz_pair_action_bits(Pauli a, Pauli b) {
    const auto av = static_cast<std::uint8_t>(a);
    const auto bv = static_cast<std::uint8_t>(b);
    const std::uint8_t xa = av & 1u, za = (av >> 1) & 1u;
    const std::uint8_t xb = bv & 1u, zb = (bv >> 1) & 1u;
    const bool flip = (xa & xb & (za ^ zb)) != 0;
    const std::uint8_t na = static_cast<std::uint8_t>(xa | (((za ^ xb) & 1u) << 1));
    const std::uint8_t nb = static_cast<std::uint8_t>(xb | (((zb ^ xa) & 1u) << 1));
    return {static_cast<Pauli>(na), static_cast<Pauli>(nb), flip ? -1 : +1};
}

constexpr bool cz_table_matches_bit_rule() {
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const CzPairAction lhs = kCzPairTable[a][b];
            const CzPairAction rhs =
                cz_pair_action_bits(static_cast<Pauli>(a), static_cast<Pauli>(b));
            if (lhs.first != rhs.first || lhs.second != rhs.second ||
                lhs.sign != rhs.sign) {
                return false;
            }
        }
    }
    return true;
}

static_assert(cz_table_matches_bit_rule());

}  // namespace detail

constexpr CzPairAction cz_pair_action(Pauli a, Pauli b) {
    return detail::kCzPairTable[static_cast<std::uint8_t>(a)]
                               [static_cast<std::uint8_t>(b)];
}

}  // namespace edsim
