#include <gtest/gtest.h>

#include <lietilt/liechar.hpp>

#include "oracles.hpp"

using namespace lietilt;

namespace {

const PrimeChar P2{2};

using Entries = decltype(Decomposition::entries);

/// Character of L^n over an alphabet whose letters carry the given SL(2) weights.
SymCharacter lyndon_character(const std::vector<int>& letter_weights, int n) {
    std::map<int, long long> full;
    oracle::for_each_lyndon(n, static_cast<int>(letter_weights.size()), [&](const std::vector<int>& w) {
        int wt = 0;
        for (int c : w) wt += letter_weights[static_cast<std::size_t>(c)];
        ++full[wt];
    });
    SymCharacter::Map half;
    for (auto [w, c] : full) {
        EXPECT_EQ(full[-w], c);
        if (w >= 0) half[w] = c;
    }
    return SymCharacter(half);
}

}  // namespace

TEST(CharLiePower, Examples) {
    EXPECT_EQ(char_lie_power(2), (SymCharacter{{0, 1}}));
    EXPECT_EQ(char_lie_power(6), (SymCharacter{{4, 1}, {2, 2}, {0, 3}}));
    EXPECT_EQ(char_lie_power(6).dimension(), 9);
    EXPECT_EQ(char_lie_power(8), (SymCharacter{{6, 1}, {4, 3}, {2, 7}, {0, 8}}));
    EXPECT_EQ(char_lie_power(8).dimension(), 30);
    EXPECT_THROW(char_lie_power(0), std::invalid_argument);
}

TEST(CharLiePower, MatchesLyndonEnumeration) {
    for (int r = 1; r <= 16; ++r) {
        EXPECT_EQ(char_lie_power(r), lyndon_character({1, -1}, r)) << r;
        EXPECT_EQ(BigInt(char_lie_power(r).dimension()), necklace_count(2, static_cast<unsigned>(r)));
    }
}

TEST(LiePowerCharacter, NecklaceFormulaAgreesWithLyndonWords) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(lie_power_character(char_weyl(2), n), lyndon_character({2, 0, -2}, n)) << n;
        EXPECT_EQ(lie_power_character(char_natural(), n), char_lie_power(n)) << n;
    }
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(lie_power_character(char_weyl(3), n), lyndon_character({3, 1, -1, -3}, n));
}

TEST(StohrPairs, Examples) {
    auto five = stohr_pairs(5);
    ASSERT_EQ(five.size(), 1u);
    EXPECT_EQ(std::tie(five[0].s, five[0].t, five[0].mult), std::make_tuple(1, 1, std::int64_t{1}));
    auto seven = stohr_pairs(7);
    ASSERT_EQ(seven.size(), 1u);
    EXPECT_EQ(std::tie(seven[0].s, seven[0].t, seven[0].mult), std::make_tuple(2, 1, std::int64_t{1}));
    auto eight = stohr_pairs(8);
    ASSERT_EQ(eight.size(), 1u);
    EXPECT_EQ(std::tie(eight[0].s, eight[0].t, eight[0].mult), std::make_tuple(1, 2, std::int64_t{1}));
    EXPECT_TRUE(stohr_pairs(4).empty());
    EXPECT_TRUE(stohr_pairs(6).empty());
    EXPECT_THROW(stohr_pairs(3), std::invalid_argument);
}

TEST(StohrPairs, SummandInvariants) {
    for (int r = 4; r <= 40; ++r)
        for (const auto& x : stohr_pairs(r)) {
            EXPECT_EQ(2 * x.s + 3 * x.t, r);
            EXPECT_EQ(BigInt(x.mult), witt_bidegree(static_cast<unsigned>(x.s), static_cast<unsigned>(x.t)));
            std::int64_t dim = 1;
            for (int i = 0; i < x.s; ++i) dim *= 3;
            dim <<= x.t;
            EXPECT_EQ(x.character.dimension(), dim);
        }
}

TEST(StohrTilting, Examples) {
    EXPECT_EQ(stohr_tilting_decomp(make_stohr_summand(1, 1)).entries, (Entries{{3, 1}, {1, 1}}));
    EXPECT_EQ(stohr_tilting_decomp(make_stohr_summand(1, 2)).entries, (Entries{{4, 1}, {2, 1}}));
    for (int s = 1; s <= 10; ++s) EXPECT_GE(stohr_tilting_decomp(make_stohr_summand(s, 1)).at(1), 1) << s;
}

TEST(StohrTilting, PositiveSupportIsLambdaWithSecondPartAtLeastT) {
    for (int s = 1; 2 * s + 3 <= 24; ++s)
        for (int t = 1; 2 * s + 3 * t <= 24; ++t) {
            const int r = 2 * s + 3 * t;
            const Decomposition d = stohr_tilting_decomp(make_stohr_summand(s, t));
            std::vector<Partition2> got, expect;
            for (auto [m, c] : d.entries)
                if (c > 0) got.push_back(lambda_of(m, r));
            for (const auto& l : partitions2(r))
                if (l.first > l.second && l.second >= t) expect.push_back(l);
            std::sort(got.begin(), got.end());
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(got, expect) << "s=" << s << " t=" << t;
        }
}

TEST(StohrTilting, EverySummandTiltingOfLargeDegreeIsCovered) {
    for (int r = 7; r <= 24; ++r) {
        const int min_second = r % 2 == 1 ? 1 : 2;
        for (const auto& l : regular_partitions2(r, P2)) {
            if (l.second < min_second) continue;
            bool covered = false;
            for (const auto& x : stohr_pairs(r)) covered = covered || stohr_tilting_decomp(x).at(weight_of(l)) > 0;
            EXPECT_TRUE(covered) << "r=" << r << " lambda=" << l;
        }
    }
}

TEST(StohrDimensionIdentity, FullDecompositionAccountsForLiePower) {
    // dim L^r(E) = sum_{s+t >= 1, (2s+3t) | r} m_{s,t} dim L^{r/(2s+3t)}(D_{s,t}), dim D_{s,t} = 3^s 2^t.
    for (unsigned r = 4; r <= 20; ++r) {
        BigInt rhs = 0;
        for (unsigned s = 0; 2 * s <= r; ++s)
            for (unsigned t = 0; 2 * s + 3 * t <= r; ++t) {
                if (s + t == 0 || r % (2 * s + 3 * t) != 0) continue;
                const BigInt dim = boost::multiprecision::pow(BigInt(3), s) * boost::multiprecision::pow(BigInt(2), t);
                rhs += witt_bidegree(s, t) * necklace_count(dim, r / (2 * s + 3 * t));
            }
        EXPECT_EQ(rhs, necklace_count(2, r)) << r;
    }
}

TEST(StohrBound, Examples) {
    EXPECT_EQ(stohr_multiplicity_bound(Partition2(6, 5), 11), 3);
    EXPECT_EQ(stohr_multiplicity_bound(Partition2(7, 4), 11), 1);
    EXPECT_EQ(stohr_multiplicity_bound(Partition2(11, 0), 11), 0);  // weight 11 exceeds every t_i
    EXPECT_THROW(stohr_multiplicity_bound(Partition2(3, 3), 6), std::invalid_argument);
}

TEST(StohrBound, NeverExceedsTrueMultiplicityForOddDegree) {
    for (int r = 5; r <= 23; r += 2) {
        const LieDecompReport rep = lie_tilting_decomp(r, P2);
        for (const auto& l : regular_partitions2(r, P2))
            EXPECT_LE(stohr_multiplicity_bound(l, r), rep.decomposition.at(weight_of(l))) << r << ' ' << l;
    }
}

TEST(LieTilting, Examples) {
    const auto six = lie_tilting_decomp(6, P2);
    EXPECT_EQ(six.decomposition.entries, (Entries{{4, 1}, {0, 1}}));
    EXPECT_EQ(lambda_of(4, 6), Partition2(5, 1));
    EXPECT_EQ(lambda_of(0, 6), Partition2(3, 3));

    const auto four = lie_tilting_decomp(4, P2);
    EXPECT_EQ(four.decomposition.at(0), -1);
    EXPECT_EQ(four.verdict, Verdict::NotTiltingCertified);

    const auto three = lie_tilting_decomp(3, P2);
    EXPECT_EQ(three.character, (SymCharacter{{1, 1}}));
    EXPECT_EQ(three.decomposition.entries, (Entries{{1, 1}}));
    EXPECT_EQ(three.verdict, Verdict::Tilting);

    EXPECT_EQ(lie_tilting_decomp(8, P2).verdict, Verdict::NotTiltingCertified);
}

TEST(LieTilting, CoprimeDegreesAreTiltingAndConserveDimension) {
    for (int p : {2, 3, 5, 7})
        for (int r = 1; r <= 20; ++r) {
            if (r % p == 0) continue;
            const auto rep = lie_tilting_decomp(r, PrimeChar{p});
            ASSERT_EQ(rep.verdict, Verdict::Tilting);
            std::int64_t total = 0;
            for (auto [m, c] : rep.decomposition.entries) {
                ASSERT_GE(c, 0);
                total += c * char_tilting(m, PrimeChar{p}).dimension();
            }
            ASSERT_EQ(total, rep.character.dimension()) << r << ' ' << p;
            // l_lambda <= d_lambda
            const Decomposition tensor = tensor_power_decomp(r, PrimeChar{p});
            for (auto [m, c] : rep.decomposition.entries) ASSERT_LE(c, tensor.at(m));
        }
}

TEST(L4Delta2, CompositionFactors) {
    const Decomposition d = l4_delta2_comp_factors();
    EXPECT_EQ(d.entries, (Entries{{6, 1}, {4, 2}, {2, 3}, {0, 4}}));
    EXPECT_EQ(lie_power_character(char_weyl(2), 4).dimension(), 18);
    EXPECT_EQ(necklace_count(3, 4), 18);
    std::int64_t dim = 0;
    for (auto [m, c] : d.entries) dim += c * char_simple(m, P2).dimension();
    EXPECT_EQ(dim, 18);
}
