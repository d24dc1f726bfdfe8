#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integer and rational arithmetic.
 *
 * Integers are GMP integers; rationals are always kept in lowest terms
 * with a positive denominator, so two equal values have identical
 * representations and `==` is structural.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace concyclic {

using Integer = mpz_class;

/// Raised for arguments outside an operation's domain (bad user input).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bounded search gave up before finding what it was looking for.
class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The computation contradicted a proven statement or an internal invariant.
/// Carries the evidence in its message; never expected to fire.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num/den" or "num".
    static Rational parse(const std::string& text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Canonical "num/den" form; integers still carry "/1".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Largest integer <= value.
    Integer floor() const;
    /// Smallest integer >= value.
    Integer ceil() const;

private:
    mpq_class v_{0};
};

/// Prime factorization as prime -> exponent, primes ascending.
using Factorization = std::map<Integer, unsigned>;

namespace num {

/// ⌊√N⌋; throws DomainError for N < 0.
Integer isqrt(const Integer& n);

/// r >= 0 with r² = N, or nothing (negative N is never a square).
std::optional<Integer> perfect_square_root(const Integer& n);

/// Exact square root of a rational whose numerator and denominator are squares.
std::optional<Rational> rational_square_root(const Rational& q);

/// Deterministic for N < 2^64 (fixed Miller-Rabin witness set).
/// Larger inputs fall back to GMP's test with many rounds.
bool is_prime(const Integer& n);

/// Kronecker symbol (a/m); equals the Legendre symbol for odd prime m.
int kronecker(const Integer& a, const Integer& m);

/// m = d·s² with d squarefree, by trial division; m must be >= 1.
std::pair<Integer, Integer> squarefree_decompose(const Integer& m);

Integer pow(const Integer& base, unsigned long exp);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least non-negative residue.
Integer mod(const Integer& a, const Integer& m);

/// Full factorization of |n| (n != 0): trial division, perfect-power
/// detection, then Pollard-Brent rho for stubborn cofactors.
Factorization factorize(const Integer& n);

/// All t in [0, p^e) with t² ≡ D (mod p^e), sorted.
std::vector<Integer> sqrt_mod_prime_power(const Integer& d, const Integer& p, unsigned e);

/// Combines x ≡ r1 (mod m1), x ≡ r2 (mod m2) for coprime moduli.
Integer crt(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2);

/// Small helper for tests and loops over native ranges.
inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace num
}  // namespace concyclic
