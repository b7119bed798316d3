#pragma once

// Weyl, simple and tilting characters of SL(2) in characteristic p, and the
// unitriangular basis changes between them.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "charring.hpp"
#include "modarith.hpp"

namespace lietilt {

/// Delta(m): multiplicity one on m, m-2, ..., -m.
inline SymCharacter char_weyl(int m) {
    if (m < 0) throw std::invalid_argument("char_weyl: m must be non-negative");
    SymCharacter out;
    for (int w = m; w >= 0; w -= 2) out.accumulate(w, 1);
    return out;
}

/// Base-p digits of m, least significant first. Empty for m = 0.
inline std::vector<int> base_p_digits(std::int64_t m, int p) {
    std::vector<int> digits;
    for (; m > 0; m /= p) digits.push_back(static_cast<int>(m % p));
    return digits;
}

/// L(m) by Steinberg's tensor product theorem.
inline SymCharacter char_simple(int m, PrimeChar p) {
    if (m < 0) throw std::invalid_argument("char_simple: m must be non-negative");
    SymCharacter out = SymCharacter::trivial();
    int scale = 1;
    for (int digit : base_p_digits(m, p)) {
        out = char_mul(out, adams(char_weyl(digit), scale));
        scale *= p.value();
    }
    return out;
}

/// m = 0 or m = a p^k - 1 with 2 <= a <= p, k >= 0; exactly when T(m) = Delta(m) = L(m).
inline bool is_weyl_simple(int m, PrimeChar p) {
    if (m < 0) throw std::invalid_argument("is_weyl_simple: m must be non-negative");
    if (m == 0) return true;
    const std::int64_t n = static_cast<std::int64_t>(m) + 1;
    for (std::int64_t pk = 1; pk <= n; pk *= p.value()) {
        if (n % pk != 0) break;
        const std::int64_t a = n / pk;
        if (a >= 2 && a <= p.value()) return true;
    }
    return false;
}

namespace detail {

class TiltingMemo {
public:
    static TiltingMemo& instance() {
        static TiltingMemo memo;
        return memo;
    }

    bool lookup(int m, int p, SymCharacter& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key(m, p));
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(int m, int p, const SymCharacter& c) {
        std::unique_lock lock(mutex_);
        table_.emplace(key(m, p), c);
    }

    /// Snapshot of every memoized T(m) for one characteristic.
    std::map<int, SymCharacter> entries(int p) const {
        std::shared_lock lock(mutex_);
        std::map<int, SymCharacter> out;
        for (const auto& [k, c] : table_)
            if (static_cast<int>(k & 0xffffffffu) == p) out.emplace(static_cast<int>(k >> 32), c);
        return out;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    static std::uint64_t key(int m, int p) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(m)) << 32) | static_cast<std::uint32_t>(p);
    }

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, SymCharacter> table_;
};

}  // namespace detail

/// Character of the indecomposable tilting module T(m). Memoized per (m, p).
inline SymCharacter char_tilting(int m, PrimeChar p) {
    if (m < 0) throw std::invalid_argument("char_tilting: m must be non-negative");
    auto& memo = detail::TiltingMemo::instance();
    SymCharacter out;
    if (memo.lookup(m, p, out)) return out;

    const int q = p.value();
    if (m <= q - 1) {
        out = char_weyl(m);
    } else {
        const int k = m / q, i = m % q;
        if (i == q - 1) {
            // T(kp + p - 1) = T(k)^F (x) T(p - 1)
            out = char_mul(frobenius_twist(char_tilting(k, p), p), char_weyl(q - 1));
        } else if (k == 1) {
            // 0 -> Delta(p + i) -> T(p + i) -> Delta(p - 2 - i) -> 0
            out = char_add(char_weyl(q + i), char_weyl(q - 2 - i));
        } else {
            // T(kp + i) = T(k - 1)^F (x) T(p + i)
            out = char_mul(frobenius_twist(char_tilting(k - 1, p), p), char_tilting(q + i, p));
        }
    }
    memo.store(m, p, out);
    return out;
}

enum class Basis { Delta, Simple, Tilting };

inline std::string_view to_string(Basis b) {
    switch (b) {
        case Basis::Delta: return "delta";
        case Basis::Simple: return "simple";
        case Basis::Tilting: return "tilting";
    }
    return "?";
}

inline SymCharacter basis_character(Basis b, int m, PrimeChar p) {
    switch (b) {
        case Basis::Delta: return char_weyl(m);
        case Basis::Simple: return char_simple(m, p);
        case Basis::Tilting: return char_tilting(m, p);
    }
    throw std::invalid_argument("unknown basis");
}

/// Signed multiplicities of basis characters, keyed by highest weight (largest first).
struct Decomposition {
    Basis basis = Basis::Tilting;
    int degree = 0;
    PrimeChar p{2};
    std::map<int, std::int64_t, std::greater<>> entries;

    std::int64_t at(int m) const {
        auto it = entries.find(m);
        return it == entries.end() ? 0 : it->second;
    }

    bool has_negative() const {
        for (auto [m, c] : entries)
            if (c < 0) return true;
        return false;
    }

    bool operator==(const Decomposition&) const = default;
};

/// Writes chi in the given basis by peeling off the top weight repeatedly.
inline Decomposition decompose(const SymCharacter& chi, Basis basis, int r, PrimeChar p) {
    if (r < 1) throw std::invalid_argument("decompose: r must be positive");
    if (auto par = chi.parity(); par && *par != r % 2)
        throw std::invalid_argument("decompose: character parity differs from degree parity");
    if (chi.top_weight() > r) throw std::invalid_argument("decompose: support exceeds degree");

    Decomposition out{basis, r, p, {}};
    SymCharacter residual = chi;
    while (!residual.is_zero()) {
        const int top = residual.top_weight();
        const std::int64_t c = residual.multiplicity(top);
        out.entries.emplace(top, c);
        residual = char_sub(residual, char_scale(basis_character(basis, top, p), c));
        if (residual.top_weight() >= top)
            throw consistency_error("decompose: residual support did not drop below weight " + std::to_string(top));
    }
    return out;
}

inline SymCharacter reconstruct(const Decomposition& d) {
    SymCharacter out;
    for (auto [m, c] : d.entries) out = char_add(out, char_scale(basis_character(d.basis, m, d.p), c));
    return out;
}

inline SymCharacter char_natural() { return char_weyl(1); }

/// E^{(x) r} in the tilting basis; the entry at m is g(m, r) = d_{lambda(m)}.
inline Decomposition tensor_power_decomp(int r, PrimeChar p) {
    if (r < 1) throw std::invalid_argument("tensor_power_decomp: r must be positive");
    Decomposition d = decompose(char_pow(char_natural(), static_cast<unsigned>(r)), Basis::Tilting, r, p);
    // Every p-regular two-part partition labels a summand, and nothing else does.
    for (const auto& l : partitions2(r)) {
        const bool regular = l.is_p_regular(p);
        if (regular != (d.at(weight_of(l)) > 0))
            throw consistency_error("tensor_power_decomp: summand pattern mismatch at weight " +
                                    std::to_string(weight_of(l)));
    }
    for (auto [m, c] : d.entries)
        if (c <= 0) throw consistency_error("tensor_power_decomp: non-positive multiplicity");
    return d;
}

/// Character form of the sequence
/// 0 -> Delta(n-1)^F (x) L(j) -> Delta(pn+i) -> Delta(n)^F (x) L(i) -> 0 with i + j = p - 2.
inline bool check_weyl_twist_sequence(int n, int i, PrimeChar p) {
    if (n < 1) throw std::invalid_argument("check_weyl_twist_sequence: n must be positive");
    if (i < 0 || i > p.value() - 2) throw std::invalid_argument("check_weyl_twist_sequence: need 0 <= i <= p-2");
    const int j = p.value() - 2 - i;
    const SymCharacter lhs = char_weyl(p.value() * n + i);
    const SymCharacter rhs = char_mul(frobenius_twist(char_weyl(n - 1), p), char_simple(j, p)) +
                             char_mul(frobenius_twist(char_weyl(n), p), char_simple(i, p));
    return lhs == rhs;
}

}  // namespace lietilt
