#pragma once

// The symmetric character ring of SL(2) and the GL(2) <-> SL(2) weight dictionary.

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modarith.hpp"

namespace lietilt {

/// Weight-multiplicity function on SL(2) weights, symmetric under m -> -m.
///
/// Only non-negative weights are stored; the negative half is implied.
/// Zero multiplicities are never stored, so the zero character has empty
/// support. Multiplicities may be negative (virtual characters). All weights
/// in the support share one parity.
class SymCharacter {
public:
    using Map = std::map<int, std::int64_t>;

    SymCharacter() = default;

    /// Builds from multiplicities on non-negative weights.
    explicit SymCharacter(const Map& half) {
        for (auto [w, c] : half) {
            if (w < 0) throw std::invalid_argument("SymCharacter: weights must be given as non-negative");
            set(w, c);
        }
        check_parity();
    }

    SymCharacter(std::initializer_list<std::pair<const int, std::int64_t>> init) : SymCharacter(Map(init)) {}

    static SymCharacter trivial() { return SymCharacter({{0, 1}}); }

    std::int64_t multiplicity(int weight) const {
        auto it = half_.find(std::abs(weight));
        return it == half_.end() ? 0 : it->second;
    }
    std::int64_t operator[](int weight) const { return multiplicity(weight); }

    bool is_zero() const noexcept { return half_.empty(); }

    /// 0 or 1, or nullopt for the zero character.
    std::optional<int> parity() const {
        if (half_.empty()) return std::nullopt;
        return half_.begin()->first % 2;
    }

    /// Largest weight in the support, or -1 for the zero character.
    int top_weight() const noexcept { return half_.empty() ? -1 : half_.rbegin()->first; }

    std::int64_t dimension() const {
        std::int64_t d = 0;
        for (auto [w, c] : half_) d = detail::checked_add(d, w == 0 ? c : detail::checked_mul(2, c));
        return d;
    }

    bool is_nonnegative() const {
        for (auto [w, c] : half_)
            if (c < 0) return false;
        return true;
    }

    const Map& half() const noexcept { return half_; }

    /// Adds c to the multiplicity at +-weight.
    void accumulate(int weight, std::int64_t c) {
        weight = std::abs(weight);
        if (c == 0) return;
        if (auto par = parity(); par && *par != weight % 2)
            throw std::invalid_argument("SymCharacter: mixed parity at weight " + std::to_string(weight));
        auto& slot = half_[weight];
        slot = detail::checked_add(slot, c);
        if (slot == 0) half_.erase(weight);
    }

    friend bool operator==(const SymCharacter&, const SymCharacter&) = default;

private:
    void set(int w, std::int64_t c) {
        if (c != 0) half_[w] = c;
    }

    void check_parity() const {
        if (half_.empty()) return;
        const int par = half_.begin()->first % 2;
        for (auto [w, c] : half_)
            if (w % 2 != par) throw std::invalid_argument("SymCharacter: mixed parity support");
    }

    Map half_;
};

inline std::ostream& operator<<(std::ostream& os, const SymCharacter& a) {
    os << '{';
    bool first = true;
    for (auto it = a.half().rbegin(); it != a.half().rend(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << (it->first == 0 ? "" : "+-") << it->first << ':' << it->second;
    }
    return os << '}';
}

inline SymCharacter char_add(const SymCharacter& a, const SymCharacter& b) {
    if (a.parity() && b.parity() && *a.parity() != *b.parity())
        throw std::invalid_argument("char_add: operands have different parity");
    SymCharacter out = a;
    for (auto [w, c] : b.half()) out.accumulate(w, c);
    return out;
}

inline SymCharacter char_scale(const SymCharacter& a, std::int64_t c) {
    SymCharacter out;
    if (c == 0) return out;
    for (auto [w, m] : a.half()) out.accumulate(w, detail::checked_mul(m, c));
    return out;
}

inline SymCharacter char_sub(const SymCharacter& a, const SymCharacter& b) { return char_add(a, char_scale(b, -1)); }

/// Character of a tensor product: convolution of weight multiplicities.
inline SymCharacter char_mul(const SymCharacter& a, const SymCharacter& b) {
    SymCharacter out;
    if (a.is_zero() || b.is_zero()) return out;
    // Expand b to both signs; only non-negative sums need to be recorded.
    std::vector<std::pair<int, std::int64_t>> full_b;
    for (auto [w, c] : b.half()) {
        full_b.emplace_back(w, c);
        if (w != 0) full_b.emplace_back(-w, c);
    }
    for (auto [wa, ca] : a.half()) {
        for (int sign : {1, -1}) {
            if (wa == 0 && sign == -1) continue;
            for (auto [wb, cb] : full_b) {
                const int w = sign * wa + wb;
                if (w >= 0) out.accumulate(w, detail::checked_mul(ca, cb));
            }
        }
    }
    return out;
}

inline SymCharacter char_pow(const SymCharacter& a, unsigned n) {
    SymCharacter out = SymCharacter::trivial();
    for (unsigned i = 0; i < n; ++i) out = char_mul(out, a);
    return out;
}

/// Relabels every weight m as factor * m. With a prime factor this is the Frobenius twist;
/// with an arbitrary factor it is the Adams operation.
inline SymCharacter adams(const SymCharacter& a, int factor) {
    if (factor < 1) throw std::invalid_argument("adams: factor must be positive");
    SymCharacter out;
    for (auto [w, c] : a.half()) out.accumulate(w * factor, c);
    return out;
}

inline SymCharacter frobenius_twist(const SymCharacter& a, PrimeChar p) { return adams(a, p.value()); }

inline SymCharacter operator+(const SymCharacter& a, const SymCharacter& b) { return char_add(a, b); }
inline SymCharacter operator-(const SymCharacter& a, const SymCharacter& b) { return char_sub(a, b); }
inline SymCharacter operator*(const SymCharacter& a, const SymCharacter& b) { return char_mul(a, b); }
inline SymCharacter operator*(std::int64_t c, const SymCharacter& a) { return char_scale(a, c); }

/// A partition (first, second) of first + second into at most two parts.
struct Partition2 {
    int first = 0;
    int second = 0;

    Partition2() = default;
    Partition2(int l1, int l2) : first(l1), second(l2) {
        if (l2 < 0 || l1 < l2) throw std::invalid_argument("Partition2: need l1 >= l2 >= 0");
    }

    int degree() const noexcept { return first + second; }

    /// No p parts are equal; for two rows this only excludes (k, k), k > 0, when p = 2.
    bool is_p_regular(PrimeChar p) const noexcept { return !(p.value() == 2 && first == second && first > 0); }

    friend bool operator==(const Partition2&, const Partition2&) = default;
    friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Partition2& l) {
    return os << '(' << l.first << ',' << l.second << ')';
}

/// The partition of r whose SL(2) restriction has highest weight m.
inline Partition2 lambda_of(int m, int r) {
    if (r < 0 || m < 0 || m > r || (r - m) % 2 != 0)
        throw std::invalid_argument("lambda_of: need 0 <= m <= r with m = r mod 2");
    return Partition2((r + m) / 2, (r - m) / 2);
}

inline int weight_of(const Partition2& l) noexcept { return l.first - l.second; }

/// Lambda^+(r), ordered by decreasing first part.
inline std::vector<Partition2> partitions2(int r) {
    std::vector<Partition2> out;
    for (int l2 = 0; 2 * l2 <= r; ++l2) out.emplace_back(r - l2, l2);
    return out;
}

/// Lambda^+_p(r).
inline std::vector<Partition2> regular_partitions2(int r, PrimeChar p) {
    std::vector<Partition2> out;
    for (const auto& l : partitions2(r))
        if (l.is_p_regular(p)) out.push_back(l);
    return out;
}

/// A_r = { k : 0 < k <= r, k = r mod 2 }.
struct WeightSet {
    int r = 0;
    std::vector<int> elements;

    explicit WeightSet(int degree) : r(degree) {
        if (degree < 1) throw std::invalid_argument("WeightSet: r must be positive");
        for (int k = r; k > 0; k -= 2) elements.push_back(k);
    }

    bool contains(int k) const noexcept { return k > 0 && k <= r && (r - k) % 2 == 0; }
    std::size_t size() const noexcept { return elements.size(); }
};

}  // namespace lietilt
