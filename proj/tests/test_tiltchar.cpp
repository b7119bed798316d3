#include <gtest/gtest.h>

#include <random>
#include <thread>

#include <lietilt/tiltchar.hpp>

#include "oracles.hpp"

using namespace lietilt;

namespace {

const PrimeChar P2{2}, P3{3}, P5{5}, P7{7};

std::map<int, long long> as_map(const SymCharacter& a) { return {a.half().begin(), a.half().end()}; }

}  // namespace

TEST(CharWeyl, Examples) {
    EXPECT_EQ(char_weyl(0), SymCharacter::trivial());
    EXPECT_EQ(char_weyl(1), (SymCharacter{{1, 1}}));
    EXPECT_EQ(char_weyl(4), (SymCharacter{{4, 1}, {2, 1}, {0, 1}}));
    for (int m = 0; m < 40; ++m) EXPECT_EQ(char_weyl(m).dimension(), m + 1);
}

TEST(CharSimple, Examples) {
    for (PrimeChar p : {P2, P3, P5, P7}) EXPECT_EQ(char_simple(p - 1, p), char_weyl(p - 1));
    EXPECT_EQ(char_simple(6, P2), (SymCharacter{{6, 1}, {2, 1}}));
    for (PrimeChar p : {P2, P3, P5}) {
        for (int pm = p * p, k = 1; pm <= 1000; pm *= p, ++k)
            EXPECT_EQ(char_simple(pm - 2, p).dimension(), (p - 1) * (pm / p)) << "p=" << p << " r=" << pm;
    }
}

TEST(CharSimple, MatchesTwistedDigitConvolution) {
    for (int p : {2, 3, 5}) {
        for (int m = 0; m <= 120; ++m) {
            oracle::Laurent prod = oracle::weyl(0);
            int scale = 1;
            for (int n = m; n > 0; n /= p, scale *= p) {
                std::map<int, long long> twisted;
                for (int k = -(n % p); k <= n % p; k += 2) twisted[k * scale] = 1;
                prod = oracle::multiply(prod, oracle::Laurent::from_weights(twisted));
            }
            ASSERT_EQ(as_map(char_simple(m, PrimeChar{p})), prod.nonneg()) << "m=" << m << " p=" << p;
        }
    }
}

TEST(IsWeylSimple, Examples) {
    for (PrimeChar p : {P2, P3, P5}) EXPECT_TRUE(is_weyl_simple(0, p));
    EXPECT_TRUE(is_weyl_simple(3, P2));
    EXPECT_FALSE(is_weyl_simple(4, P2));
    EXPECT_EQ(char_simple(4, P2).dimension(), 2);
}

TEST(IsWeylSimple, AgreesWithSimpleDimension) {
    for (PrimeChar p : {P2, P3, P5, P7})
        for (int m = 0; m <= 200; ++m)
            ASSERT_EQ(is_weyl_simple(m, p), char_simple(m, p).dimension() == m + 1) << "m=" << m << " p=" << p;
}

TEST(CharTilting, Examples) {
    EXPECT_EQ(char_tilting(2, P2), (SymCharacter{{2, 1}, {0, 2}}));
    EXPECT_EQ(char_tilting(2, P2).dimension(), 4);
    EXPECT_EQ(char_tilting(3, P2), char_weyl(3));
    EXPECT_EQ(char_tilting(6, P2), (SymCharacter{{6, 1}, {4, 2}, {2, 3}, {0, 4}}));
}

TEST(CharTilting, DimensionBoundAndEquality) {
    for (PrimeChar p : {P2, P3, P5, P7}) {
        for (int m = 0; m <= 200; ++m) {
            const auto d = char_tilting(m, p).dimension();
            ASSERT_GE(d, m + 1);
            ASSERT_EQ(d == m + 1, is_weyl_simple(m, p)) << "m=" << m << " p=" << p;
        }
    }
}

TEST(CharTilting, HasWeylFiltrationWithTopSection) {
    for (PrimeChar p : {P2, P3, P5})
        for (int m = 0; m <= 80; ++m) {
            const Decomposition d = decompose(char_tilting(m, p), Basis::Delta, m == 0 ? 2 : m, p);
            ASSERT_EQ(d.at(m), 1);
            ASSERT_FALSE(d.has_negative());
        }
}

TEST(CharTilting, MemoIsSafeUnderConcurrency) {
    std::vector<std::map<int, long long>> seen(4);
    std::vector<std::thread> pool;
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&, w] {
            std::map<int, long long> dims;
            for (int m = 150; m >= 0; --m) dims[m] = char_tilting(m, PrimeChar{11}).dimension();
            seen[static_cast<std::size_t>(w)] = dims;
        });
    for (auto& t : pool) t.join();
    for (int w = 1; w < 4; ++w) EXPECT_EQ(seen[0], seen[static_cast<std::size_t>(w)]);
}

TEST(Decompose, Examples) {
    const SymCharacter e3 = char_pow(char_natural(), 3);
    const Decomposition t = decompose(e3, Basis::Tilting, 3, P2);
    EXPECT_EQ(t.entries, (decltype(t.entries){{3, 1}, {1, 2}}));

    const Decomposition s = decompose(char_tilting(2, P2), Basis::Simple, 2, P2);
    EXPECT_EQ(s.entries, (decltype(s.entries){{2, 1}, {0, 2}}));

    for (int m = 1; m <= 20; ++m)
        EXPECT_EQ(decompose(char_weyl(m), Basis::Delta, m, P3).entries, (decltype(t.entries){{m, 1}}));
}

TEST(Decompose, RejectsMalformedInput) {
    EXPECT_THROW(decompose(char_weyl(3), Basis::Tilting, 4, P2), std::invalid_argument);
    EXPECT_THROW(decompose(char_weyl(6), Basis::Tilting, 4, P2), std::invalid_argument);
    EXPECT_THROW(decompose(char_weyl(2), Basis::Tilting, 0, P2), std::invalid_argument);
    EXPECT_TRUE(decompose(SymCharacter{}, Basis::Simple, 4, P2).entries.empty());
}

TEST(Decompose, ReconstructionIsIdentity) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(0, 4), degree(1, 40), prime_idx(0, 3);
    const PrimeChar primes[] = {P2, P3, P5, P7};
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeChar p = primes[prime_idx(rng)];
        const int r = degree(rng);
        for (Basis b : {Basis::Delta, Basis::Simple, Basis::Tilting}) {
            SymCharacter chi;
            for (int m = r; m >= 0; m -= 2) chi = chi + char_scale(basis_character(b, m, p), coeff(rng));
            const Decomposition d = decompose(chi, b, r, p);
            ASSERT_EQ(reconstruct(d), chi);
            for (auto [m, c] : d.entries) ASSERT_GE(c, 0);
        }
    }
}

TEST(TensorPower, Examples) {
    EXPECT_EQ(tensor_power_decomp(2, P2).entries, (decltype(Decomposition::entries){{2, 1}}));
    EXPECT_EQ(tensor_power_decomp(3, P2).entries, (decltype(Decomposition::entries){{3, 1}, {1, 2}}));
    for (PrimeChar p : {P2, P3, P5}) EXPECT_EQ(tensor_power_decomp(1, p).entries, (decltype(Decomposition::entries){{1, 1}}));
}

TEST(TensorPower, DimensionConservation) {
    for (PrimeChar p : {P2, P3, P5}) {
        for (int r = 1; r <= 20; ++r) {
            const Decomposition d = tensor_power_decomp(r, p);
            std::int64_t total = 0;
            for (auto [m, c] : d.entries) total += c * char_tilting(m, p).dimension();
            ASSERT_EQ(total, std::int64_t{1} << r) << "r=" << r << " p=" << p;
        }
    }
}

TEST(TensorPower, PositiveExactlyOnRegularWeights) {
    for (int r = 1; r <= 20; ++r) {
        const Decomposition d2 = tensor_power_decomp(r, P2);
        const WeightSet a(r);
        for (int m = 0; m <= r; ++m) ASSERT_EQ(d2.at(m) > 0, a.contains(m)) << r << ' ' << m;
        const Decomposition d3 = tensor_power_decomp(r, P3);
        for (int m = r % 2; m <= r; m += 2) ASSERT_GT(d3.at(m), 0);
    }
}

TEST(TensorPower, MultiplicitiesGrowInStepsOfTwo) {
    for (PrimeChar p : {P2, P3, P5})
        for (int a = 1; a <= 20; ++a) {
            const Decomposition lo = tensor_power_decomp(a, p), hi = tensor_power_decomp(a + 2, p);
            for (int m = 0; m <= a; ++m) ASSERT_LE(lo.at(m), hi.at(m)) << "a=" << a << " m=" << m << " p=" << p;
        }
}

TEST(StructuralIdentities, ClebschGordanWeylFiltration) {
    for (int n = 0; n <= 15; ++n)
        for (int m = n; m <= 15; ++m) {
            const Decomposition d = decompose(char_weyl(m) * char_weyl(n), Basis::Delta, m + n == 0 ? 2 : m + n, P2);
            decltype(d.entries) expect;
            for (int k = m + n; k >= m - n; k -= 2) expect[k] = 1;
            ASSERT_EQ(d.entries, expect) << m << ' ' << n;
        }
}

TEST(StructuralIdentities, TopTiltingSummandOfProduct) {
    for (PrimeChar p : {P2, P3, P5})
        for (int n = 0; n <= 30; ++n)
            for (int m = 0; m <= 30; ++m) {
                if (n + m == 0) continue;
                const Decomposition d = decompose(char_tilting(n, p) * char_tilting(m, p), Basis::Tilting, n + m, p);
                ASSERT_GE(d.at(n + m), 1);
                ASSERT_FALSE(d.has_negative());
            }
}

TEST(StructuralIdentities, WeylTwistSequence) {
    EXPECT_TRUE(check_weyl_twist_sequence(1, 0, P2));
    EXPECT_TRUE(check_weyl_twist_sequence(2, 1, P3));
    for (PrimeChar p : {P2, P3, P5})
        for (int n = 1; n <= 12; ++n)
            for (int i = 0; i <= p - 2; ++i) ASSERT_TRUE(check_weyl_twist_sequence(n, i, p)) << n << ' ' << i << ' ' << p;
    EXPECT_THROW(check_weyl_twist_sequence(1, 1, P2), std::invalid_argument);
}
