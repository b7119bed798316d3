#pragma once

// The submodule G.zeta of L^r(E) generated by the left-normed bracket
// zeta = [...[[y,x],x],...,x], for p | r.
//
// Applying g to zeta and expanding (y)(ad(x + ty))^{r-1} in the tensor algebra
// gives sum_k c_k (x+ty)^k y (x+ty)^{r-1-k} with c_k = (-1)^k C(r-1, k). A word
// with y in the positions P (|P| = v) then carries coefficient
// t^{v-1} sum_{q in P} c_q, and G.zeta has one basis vector per v whose
// coefficient of t^{v-1} is non-zero. Everything below works on the c_k alone.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modarith.hpp"
#include "tiltchar.hpp"

namespace lietilt {

struct GZetaProfile {
    int r = 0;
    PrimeChar p{2};
    std::vector<int> coeffs;  // c_0 .. c_{r-1} reduced into [0, p)
    std::vector<bool> nonzero;  // index v - 1 for v = 1 .. r: weight (r - v, v) space non-zero
    int dim = 0;
};

inline void require_divides(int r, PrimeChar p, const char* who) {
    if (r < 1 || r % p.value() != 0)
        throw std::invalid_argument(std::string(who) + ": requires p | r (r = " + std::to_string(r) +
                                    ", p = " + std::to_string(p.value()) + ")");
}

inline std::vector<int> c_sequence(int r, PrimeChar p) {
    require_divides(r, p, "c_sequence");
    const int q = p.value();
    std::vector<int> c(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        const int b = binom_mod(static_cast<std::uint64_t>(r - 1), static_cast<std::uint64_t>(j), p);
        c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : (q - b) % q;
    }
    return c;
}

namespace detail {

/// Some v-subset of coeffs has a sum not divisible by p.
///
/// If the c_j are not all equal and v < r, any vanishing subset sum can be
/// repaired by swapping one member for an unequal non-member. Otherwise every
/// v-subset sum is v c_0 (all equal) or the full sum (v = r).
inline bool some_subset_sum_nonzero(const std::vector<int>& coeffs, int v, int p) {
    const int r = static_cast<int>(coeffs.size());
    bool all_equal = true;
    long long total = 0;
    for (int c : coeffs) {
        all_equal = all_equal && c == coeffs.front();
        total += c;
    }
    if (v == r) return total % p != 0;
    if (all_equal) return (static_cast<long long>(v) * coeffs.front()) % p != 0;
    return true;
}

}  // namespace detail

inline bool weight_nonzero(int r, PrimeChar p, int v) {
    require_divides(r, p, "weight_nonzero");
    if (v < 1 || v > r) throw std::invalid_argument("weight_nonzero: v must lie in [1, r]");
    return detail::some_subset_sum_nonzero(c_sequence(r, p), v, p.value());
}

inline GZetaProfile gzeta_profile(int r, PrimeChar p) {
    GZetaProfile prof{r, p, c_sequence(r, p), {}, 0};
    prof.nonzero.reserve(static_cast<std::size_t>(r));
    for (int v = 1; v <= r; ++v) {
        const bool nz = detail::some_subset_sum_nonzero(prof.coeffs, v, p.value());
        prof.nonzero.push_back(nz);
        prof.dim += nz ? 1 : 0;
    }
    return prof;
}

inline int gzeta_dim(int r, PrimeChar p) { return gzeta_profile(r, p).dim; }

/// T(r-1, 1) is a summand of L^r(E) iff r = p or r is not a power of p.
inline bool theorem_b_closed_form(int r, PrimeChar p) { return r == p.value() || !is_power_of(r, p.value()); }

/// T(r-1, 1) | L^r(E), decided through dim G.zeta and checked against the closed form.
inline bool theorem_b_predicate(int r, PrimeChar p) {
    if (r < 2) throw std::invalid_argument("theorem_b_predicate: r must be at least 2");
    const bool computed = (r % p.value() != 0) || r == p.value() || gzeta_dim(r, p) == r - 1;
    if (computed != theorem_b_closed_form(r, p))
        throw consistency_error("theorem_b_predicate: G.zeta dimension disagrees with closed form at r = " +
                                std::to_string(r) + ", p = " + std::to_string(p.value()));
    return computed;
}

/// Whether M^r(E) = nabla(r-1, 1) is a summand of L^r(E).
///
/// For r not a power of p this holds iff Delta(r-1, 1) is simple, i.e.
/// r = 2 or r - 2 = a p^k - 1. For r = p it holds as well. For r = p^m with
/// m >= 2 only r = 4 (true) and r = 8 (false) in characteristic 2 are known;
/// every other p-power is rejected.
inline bool metabelian_summand(int r, PrimeChar p) {
    if (r < 2) throw std::invalid_argument("metabelian_summand: r must exceed 1");
    if (is_power_of(r, p.value()) && r != p.value()) {
        if (p.value() == 2 && r == 4) return true;
        if (p.value() == 2 && r == 8) return false;
        throw std::invalid_argument("metabelian_summand: undecided for r = " + std::to_string(r) +
                                    ", a higher power of p = " + std::to_string(p.value()));
    }
    return r == 2 || is_weyl_simple(r - 2, p);
}

}  // namespace lietilt
