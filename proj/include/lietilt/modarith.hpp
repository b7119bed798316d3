#pragma once

// Exact modular and combinatorial arithmetic: prime characteristic, Lucas
// binomials, the Moebius function and the two-letter Witt formulas.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lietilt {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a computed quantity contradicts an identity that must hold.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in addition");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in multiplication");
    return out;
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("value does not fit in int64: " + v.str());
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The characteristic of the ground field. Always a prime.
class PrimeChar {
public:
    explicit PrimeChar(int p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    }

    int value() const noexcept { return p_; }
    operator int() const noexcept { return p_; }

    friend bool operator==(PrimeChar, PrimeChar) = default;

private:
    int p_;
};

/// True iff n = p^k for some k >= 1.
inline bool is_power_of(std::int64_t n, int p) {
    if (n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

/// C(n, k) mod p by Lucas' theorem.
inline int binom_mod(std::uint64_t n, std::uint64_t k, PrimeChar pc) {
    const std::uint64_t p = static_cast<std::uint64_t>(pc.value());
    if (k > n) return 0;
    std::uint64_t result = 1;
    while (n > 0 || k > 0) {
        const std::uint64_t ni = n % p, ki = k % p;
        if (ki > ni) return 0;
        // C(ni, ki) for digits below p, computed mod p via the multiplicative formula.
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t j = 0; j < ki; ++j) {
            num = num * ((ni - j) % p) % p;
            den = den * ((j + 1) % p) % p;
        }
        // den is a unit mod p; invert by Fermat.
        std::uint64_t inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * (num * inv % p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(result);
}

inline int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int sign = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt b = 1;
    for (unsigned i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

/// m_{s,t}: dimension of the multidegree-(s,t) part of the free Lie algebra on two generators.
inline BigInt witt_bidegree(unsigned s, unsigned t) {
    if (s + t == 0) throw std::invalid_argument("witt_bidegree: s + t must be positive");
    const unsigned g = std::gcd(s, t);
    BigInt sum = 0;
    for (unsigned d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        const BigInt term = factorial((s + t) / d) / (factorial(s / d) * factorial(t / d));
        sum += mu * term;
    }
    if (sum % (s + t) != 0) throw consistency_error("witt_bidegree: inexact division");
    return sum / (s + t);
}

/// Number of Lyndon words of length r over {x, y} with exactly i copies of y.
inline BigInt witt_weight_count(unsigned r, unsigned i) {
    if (r == 0) throw std::invalid_argument("witt_weight_count: r must be positive");
    if (i > r) throw std::invalid_argument("witt_weight_count: i must lie in [0, r]");
    const unsigned g = std::gcd(r, i);  // std::gcd(r, 0) == r
    BigInt sum = 0;
    for (unsigned d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        const int mu = mobius(d);
        if (mu != 0) sum += mu * binomial(r / d, i / d);
    }
    if (sum % r != 0) throw consistency_error("witt_weight_count: inexact division");
    return sum / r;
}

/// (1/n) sum_{d | n} mu(d) q^{n/d}: the dimension of L^n(V) for dim V = q.
inline BigInt necklace_count(const BigInt& q, unsigned n) {
    if (n == 0) throw std::invalid_argument("necklace_count: n must be positive");
    BigInt sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = mobius(d);
        if (mu != 0) sum += mu * boost::multiprecision::pow(q, n / d);
    }
    if (sum % n != 0) throw consistency_error("necklace_count: inexact division");
    return sum / n;
}

}  // namespace lietilt
