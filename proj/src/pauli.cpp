#include "edsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace edsim {

namespace {

void check_qubit(std::uint32_t qubit) {
    if (qubit >= PauliString::kMaxQubits) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " exceeds the supported maximum of " +
                                std::to_string(PauliString::kMaxQubits - 1));
    }
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

char to_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    throw std::invalid_argument("invalid Pauli factor");
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                        c + "'");
    }
}

PauliString::PauliString(
    std::initializer_list<std::pair<std::uint32_t, Pauli>> factors, int sign) {
    set_sign(sign);
    for (const auto& [qubit, p] : factors) {
        if (factor(qubit) != Pauli::I && p != Pauli::I) {
            throw std::invalid_argument("duplicate factor on qubit " +
                                        std::to_string(qubit));
        }
        set_factor(qubit, p);
    }
}

PauliString PauliString::single(Pauli p, std::uint32_t qubit) {
    PauliString s;
    s.set_factor(qubit, p);
    return s;
}

PauliString PauliString::parse(std::string_view text) {
    PauliString out;
    std::size_t i = 0;
    bool saw_token = false;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (!saw_token && text[i] == '-') {
            out.flip_sign();
            ++i;
            continue;
        }
        const Pauli p = pauli_from_char(text[i]);
        ++i;
        saw_token = true;
        std::size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (start == i) {
            if (p == Pauli::I) {
                continue;  // bare "I" is the identity token
            }
            throw std::invalid_argument(
                "Pauli factor is missing its qubit index in '" +
                std::string(text) + "'");
        }
        const unsigned long qubit = std::stoul(std::string(text.substr(start, i - start)));
        check_qubit(static_cast<std::uint32_t>(qubit));
        if (out.factor(static_cast<std::uint32_t>(qubit)) != Pauli::I) {
            throw std::invalid_argument("duplicate qubit " +
                                        std::to_string(qubit) +
                                        " in observable string");
        }
        out.set_factor(static_cast<std::uint32_t>(qubit), p);
    }
    if (!saw_token) {
        throw std::invalid_argument("empty observable string");
    }
    return out;
}

Pauli PauliString::factor(std::uint32_t qubit) const {
    check_qubit(qubit);
    const std::uint8_t x = (x_ >> qubit) & 1u;
    const std::uint8_t z = (z_ >> qubit) & 1u;
    return static_cast<Pauli>(x | (z << 1));
}

void PauliString::set_factor(std::uint32_t qubit, Pauli p) {
    check_qubit(qubit);
    const auto v = static_cast<std::uint8_t>(p);
    const std::uint64_t bit = 1ULL << qubit;
    x_ = (v & 1u) ? (x_ | bit) : (x_ & ~bit);
    z_ = (v & 2u) ? (z_ | bit) : (z_ & ~bit);
}

void PauliString::set_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("PauliString sign must be +1 or -1");
    }
    sign_ = static_cast<std::int8_t>(sign);
}

int PauliString::weight() const {
    return std::popcount(support_mask());
}

std::uint32_t PauliString::max_qubit() const {
    const std::uint64_t mask = support_mask();
    if (mask == 0) {
        throw std::logic_error("identity string has no support");
    }
    return 63u - static_cast<std::uint32_t>(std::countl_zero(mask));
}

std::vector<std::pair<std::uint32_t, Pauli>> PauliString::factors() const {
    std::vector<std::pair<std::uint32_t, Pauli>> out;
    std::uint64_t mask = support_mask();
    while (mask != 0) {
        const auto q = static_cast<std::uint32_t>(std::countr_zero(mask));
        out.emplace_back(q, factor(q));
        mask &= mask - 1;
    }
    return out;
}

std::string PauliString::str() const {
    std::string out;
    if (sign_ < 0) {
        out += '-';
    }
    const auto fs = factors();
    if (fs.empty()) {
        out += 'I';
        return out;
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += to_char(fs[i].second);
        out += std::to_string(fs[i].first);
    }
    return out;
}

std::size_t PauliString::Hash::operator()(const PauliString& s) const noexcept {
    std::uint64_t h = mix64(s.x_mask() ^ mix64(s.z_mask()));
    if (s.sign() < 0) {
        h = mix64(h ^ 0x5851f42d4c957f2dULL);
    }
    return static_cast<std::size_t>(h);
}

PauliString conjugate_cz(const PauliString& s, std::uint32_t control,
                         std::uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CZ control and target must differ");
    }
    const CzPairAction act =
        cz_pair_action(s.factor(control), s.factor(target));
    PauliString out = s;
    out.set_factor(control, act.first);
    out.set_factor(target, act.second);
    if (act.sign < 0) {
        out.flip_sign();
    }
    return out;
}

std::size_t PauliSum::KeyHash::operator()(const Key& k) const noexcept {
    return static_cast<std::size_t>(mix64(k.x ^ mix64(k.z)));
}

PauliSum::PauliSum(const PauliString& s, double coeff) {
    add(s, coeff);
}

void PauliSum::add(const PauliString& s, double coeff) {
    add_raw({s.x_mask(), s.z_mask()}, s.sign() * coeff);
}

void PauliSum::add_raw(Key k, double coeff) {
    if (!std::isfinite(coeff)) {
        throw std::invalid_argument("non-finite coefficient");
    }
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
    }
    if (std::abs(it->second) < kPruneEpsilon) {
        terms_.erase(it);
    }
}

double PauliSum::coefficient(const PauliString& s) const {
    const auto it = terms_.find({s.x_mask(), s.z_mask()});
    if (it == terms_.end()) {
        return 0.0;
    }
    return s.sign() * it->second;
}

PauliSum PauliSum::pruned(double epsilon) const {
    PauliSum out;
    out.terms_.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) {
        if (std::abs(coeff) >= epsilon) {
            out.terms_.emplace(key, coeff);
        }
    }
    return out;
}

std::uint64_t PauliSum::support_mask() const {
    std::uint64_t mask = 0;
    for (const auto& [key, coeff] : terms_) {
        mask |= key.x | key.z;
    }
    return mask;
}

std::vector<std::pair<PauliString, double>> PauliSum::terms() const {
    std::vector<std::pair<PauliString, double>> out;
    out.reserve(terms_.size());
    for (const auto& [key, coeff] : terms_) {
        out.emplace_back(PauliString(key.x, key.z, 1), coeff);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.x_mask() != b.first.x_mask()) {
            return a.first.x_mask() < b.first.x_mask();
        }
        return a.first.z_mask() < b.first.z_mask();
    });
    return out;
}

PauliSum conjugate_cz(const PauliSum& sum, std::uint32_t control,
                      std::uint32_t target) {
    const std::pair<std::uint32_t, std::uint32_t> edge{control, target};
    return conjugate_cz_layer(sum, std::span(&edge, 1));
}

PauliSum conjugate_cz_layer(
    const PauliSum& sum,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
    for (const auto& [a, b] : edges) {
        check_qubit(a);
        check_qubit(b);
        if (a == b) {
            throw std::invalid_argument("CZ control and target must differ");
        }
    }
    PauliSum out;
    out.terms_.reserve(sum.terms_.size());
    for (const auto& [key, coeff] : sum.terms_) {
        std::uint64_t x = key.x;
        std::uint64_t z = key.z;
        double c = coeff;
        for (const auto& [a, b] : edges) {
            const std::uint64_t xa = (x >> a) & 1u;
            const std::uint64_t xb = (x >> b) & 1u;
            const std::uint64_t za = (z >> a) & 1u;
            const std::uint64_t zb = (z >> b) & 1u;
            if ((xa & xb & (za ^ zb)) != 0) {
                c = -c;
            }
            z ^= xb << a;
            z ^= xa << b;
        }
        out.add_raw({x, z}, c);
    }
    return out;
}

PauliSum conjugate_ry(const PauliSum& sum, std::uint32_t qubit, double theta) {
    check_qubit(qubit);
    if (theta == 0.0) {
        return sum;
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::uint64_t bit = 1ULL << qubit;
    PauliSum out;
    out.terms_.reserve(sum.terms_.size() * 2);
    for (const auto& [key, coeff] : sum.terms_) {
        const bool has_x = (key.x & bit) != 0;
        const bool has_z = (key.z & bit) != 0;
        if (has_x == has_z) {
            // I or Y on this qubit: unchanged.
            out.add_raw(key, coeff);
        } else if (has_x) {
            // X -> cos X + sin Z
            out.add_raw(key, c * coeff);
            out.add_raw({key.x ^ bit, key.z ^ bit}, s * coeff);
        } else {
            // Z -> cos Z - sin X
            out.add_raw(key, c * coeff);
            out.add_raw({key.x ^ bit, key.z ^ bit}, -s * coeff);
        }
    }
    return out;
}

double vacuum_expectation(const PauliSum& sum) {
    double total = 0.0;
    for (const auto& [key, coeff] : sum.terms_) {
        if (key.x == 0) {
            total += coeff;
        }
    }
    return total;
}

}  // namespace edsim
