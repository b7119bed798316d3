#pragma once

// Characters of Lie powers of the natural module, the characteristic-2
// Stoehr summands D_{s,t}, and tilting-level analysis of both.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "charring.hpp"
#include "modarith.hpp"
#include "tiltchar.hpp"

namespace lietilt {

/// Character of L^r(E): weight r - 2i carries the Lyndon count with i copies of y.
inline SymCharacter char_lie_power(int r) {
    if (r < 1) throw std::invalid_argument("char_lie_power: r must be positive");
    SymCharacter out;
    for (int i = 0; 2 * i <= r; ++i)
        out.accumulate(r - 2 * i, detail::to_int64(witt_weight_count(static_cast<unsigned>(r), static_cast<unsigned>(i))));
    return out;
}

/// Character of L^n(V) for any module V, by the necklace formula
/// (1/n) sum_{d | n} mu(d) psi^d(V)^{n/d} with psi^d the Adams operation.
inline SymCharacter lie_power_character(const SymCharacter& v, int n) {
    if (n < 1) throw std::invalid_argument("lie_power_character: n must be positive");
    SymCharacter sum;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        sum = char_add(sum, char_scale(char_pow(adams(v, d), static_cast<unsigned>(n / d)), mu));
    }
    SymCharacter out;
    for (auto [w, c] : sum.half()) {
        if (c % n != 0) throw consistency_error("lie_power_character: inexact division at weight " + std::to_string(w));
        out.accumulate(w, c / n);
    }
    return out;
}

/// One d = 1 term m_{s,t} D_{s,t} of the characteristic-2 Stoehr decomposition of L^{2s+3t}(E).
struct StohrSummand {
    int s = 0;
    int t = 0;
    std::int64_t mult = 0;
    SymCharacter character;  // Delta(2)^s (x) Delta(1)^t

    int degree() const noexcept { return 2 * s + 3 * t; }
};

inline StohrSummand make_stohr_summand(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("make_stohr_summand: need s, t >= 1");
    return {s, t, detail::to_int64(witt_bidegree(static_cast<unsigned>(s), static_cast<unsigned>(t))),
            char_mul(char_pow(char_weyl(2), static_cast<unsigned>(s)), char_pow(char_weyl(1), static_cast<unsigned>(t)))};
}

/// All (s, t) with s, t >= 1 and 2s + 3t = r, by increasing t.
inline std::vector<StohrSummand> stohr_pairs(int r) {
    if (r <= 3) throw std::invalid_argument("stohr_pairs: r must exceed 3");
    std::vector<StohrSummand> out;
    for (int t = 1; 3 * t + 2 <= r; ++t) {
        if ((r - 3 * t) % 2 != 0) continue;
        out.push_back(make_stohr_summand((r - 3 * t) / 2, t));
    }
    return out;
}

/// Tilting decomposition of Delta_{s,t} in characteristic 2. Its positive support
/// must be exactly A_{2s+t}.
inline Decomposition stohr_tilting_decomp(const StohrSummand& x) {
    const PrimeChar two{2};
    Decomposition d = decompose(x.character, Basis::Tilting, x.degree(), two);
    if (d.has_negative())
        throw consistency_error("stohr_tilting_decomp: negative coefficient for (s,t) = (" + std::to_string(x.s) + "," +
                                std::to_string(x.t) + ")");
    const WeightSet expected(2 * x.s + x.t);
    for (int m = 0; m <= x.degree(); ++m) {
        if (expected.contains(m) != (d.at(m) > 0))
            throw consistency_error("stohr_tilting_decomp: support differs from A_{2s+t} at weight " + std::to_string(m));
    }
    return d;
}

/// Lower bound for the multiplicity of T(lambda) in L^r(E), p = 2, from the
/// summands E^{(x) t_i} of Delta_{s_i,t_i}.
inline std::int64_t stohr_multiplicity_bound(const Partition2& lambda, int r) {
    if (lambda.degree() != r) throw std::invalid_argument("stohr_multiplicity_bound: lambda is not a partition of r");
    const PrimeChar two{2};
    if (!lambda.is_p_regular(two)) throw std::invalid_argument("stohr_multiplicity_bound: lambda must be 2-regular");
    if (r <= 3) return 0;
    const int m = weight_of(lambda);
    std::int64_t bound = 0;
    for (const auto& x : stohr_pairs(r)) {
        if (m <= 0 || m > x.t) continue;
        bound = detail::checked_add(bound, detail::checked_mul(x.mult, tensor_power_decomp(x.t, two).at(m)));
    }
    return bound;
}

enum class Verdict { Tilting, NotTiltingCertified, Inconclusive };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Tilting: return "tilting";
        case Verdict::NotTiltingCertified: return "not-tilting-certified";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct LieDecompReport {
    int r = 0;
    PrimeChar p{2};
    SymCharacter character;
    Decomposition decomposition;
    Verdict verdict = Verdict::Inconclusive;
};

/// L^r(E) in the tilting basis. For p not dividing r the module is a summand of
/// E^{(x) r}, so a negative coefficient there is a consistency failure.
inline LieDecompReport lie_tilting_decomp(int r, PrimeChar p) {
    LieDecompReport rep{r, p, char_lie_power(r), {}, Verdict::Inconclusive};
    rep.decomposition = decompose(rep.character, Basis::Tilting, r, p);
    if (r % p.value() != 0) {
        if (rep.decomposition.has_negative())
            throw consistency_error("lie_tilting_decomp: negative tilting coefficient with p not dividing r = " +
                                    std::to_string(r));
        rep.verdict = Verdict::Tilting;
    } else {
        rep.verdict = rep.decomposition.has_negative() ? Verdict::NotTiltingCertified : Verdict::Inconclusive;
    }
    return rep;
}

/// Composition factors of L^4(Delta(2)) in characteristic 2, from the necklace
/// character of the weight alphabet {2, 0, -2}.
inline Decomposition l4_delta2_comp_factors() {
    const PrimeChar two{2};
    const SymCharacter chi = lie_power_character(char_weyl(2), 4);
    Decomposition d = decompose(chi, Basis::Simple, 8, two);
    const Decomposition expected{Basis::Simple, 8, two, {{6, 1}, {4, 2}, {2, 3}, {0, 4}}};
    if (d != expected) throw consistency_error("l4_delta2_comp_factors: composition factors differ from L(6)+2L(4)+3L(2)+4L(0)");
    if (chi.dimension() != 18) throw consistency_error("l4_delta2_comp_factors: dimension is not 18");
    return d;
}

}  // namespace lietilt
