#include "oracles.hpp"

#include "concyclic/exactnum.hpp"

#include <doctest.h>

#include <random>

using namespace concyclic;

TEST_CASE("isqrt") {
    CHECK(num::isqrt(Integer("1000000000000000000")) == Integer(1000000000));
    CHECK(num::isqrt(0) == 0);
    CHECK(num::isqrt(15) == 3);
    CHECK_THROWS_AS(num::isqrt(-1), DomainError);
    for (long n = 0; n < 5000; ++n) {
        Integer r = num::isqrt(n);
        CHECK((r * r <= n && (r + 1) * (r + 1) > n));
    }
}

TEST_CASE("perfect_square_root") {
    CHECK(num::perfect_square_root(25) == Integer(5));
    CHECK_FALSE(num::perfect_square_root(61).has_value());
    CHECK_FALSE(num::perfect_square_root(-4).has_value());
    CHECK(num::rational_square_root(Rational(9, 16)) == Rational(3, 4));
    CHECK_FALSE(num::rational_square_root(Rational(2, 9)).has_value());
}

TEST_CASE("is_prime agrees with trial division") {
    CHECK(num::is_prime(73));
    CHECK(num::is_prime(769));
    CHECK_FALSE(num::is_prime(1));
    CHECK_FALSE(num::is_prime(0));
    CHECK_FALSE(num::is_prime(-7));
    for (unsigned long n = 0; n < 200000; ++n) REQUIRE(num::is_prime(Integer(n)) == oracle::trial_division_prime(n));
    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(num::is_prime(Integer("3215031751")));
    CHECK_FALSE(num::is_prime(Integer("3825123056546413051")));
    CHECK(num::is_prime(Integer("18446744073709551557")));
}

TEST_CASE("kronecker") {
    CHECK(num::kronecker(-3, 7) == 1);
    CHECK(num::kronecker(-4, 89) == 1);
    CHECK(num::kronecker(-3, 3) == 0);
    // Euler's criterion against odd primes.
    for (long p = 3; p < 300; p += 2) {
        if (!oracle::trial_division_prime(p)) continue;
        for (long a = -40; a <= 40; ++a) {
            Integer e, base = num::mod(a, p), exp = (p - 1) / 2, mod = p;
            mpz_powm(e.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
            int expect = base == 0 ? 0 : (e == 1 ? 1 : -1);
            REQUIRE(num::kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("squarefree_decompose") {
    using P = std::pair<Integer, Integer>;
    CHECK(num::squarefree_decompose(12) == P{3, 2});
    CHECK(num::squarefree_decompose(4) == P{1, 2});
    CHECK(num::squarefree_decompose(7) == P{7, 1});
    CHECK(num::squarefree_decompose(1) == P{1, 1});
    CHECK_THROWS_AS(num::squarefree_decompose(0), DomainError);
    CHECK_THROWS_AS(num::squarefree_decompose(-5), DomainError);
    for (long m = 1; m < 3000; ++m) {
        auto [d, s] = num::squarefree_decompose(m);
        REQUIRE(d * s * s == m);
        for (long q = 2; q * q <= d; ++q) REQUIRE(d % (q * q) != 0);
    }
}

TEST_CASE("factorize reproduces n") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Integer n = Integer(static_cast<unsigned long>(rng() >> 4)) * Integer(static_cast<unsigned long>(rng() >> 40)) + 1;
        auto f = num::factorize(n);
        Integer prod = 1;
        for (const auto& [p, e] : f) {
            REQUIRE(num::is_prime(p));
            prod *= num::pow(p, e);
        }
        REQUIRE(prod == n);
    }
    auto f = num::factorize(num::pow(Integer(8089), 7) * 12);
    CHECK(f.size() == 3);
    CHECK(f[Integer(8089)] == 7);
    CHECK(f[Integer(2)] == 2);
    CHECK_THROWS_AS(num::factorize(0), DomainError);
}

TEST_CASE("square roots modulo prime powers") {
    for (long p : {2L, 3L, 5L, 7L, 13L}) {
        for (unsigned e = 1; e <= 4; ++e) {
            long pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            for (long d = -30; d <= 30; ++d) {
                std::vector<Integer> expect;
                for (long t = 0; t < pe; ++t)
                    if (((t * t - d) % pe + pe) % pe == 0) expect.push_back(t);
                REQUIRE(num::sqrt_mod_prime_power(d, p, e) == expect);
            }
        }
    }
}

TEST_CASE("crt") {
    CHECK(num::crt(2, 3, 3, 5) == 8);
    CHECK(num::crt(4, 7, 0, 1) == 4);
    CHECK_THROWS_AS(num::crt(1, 4, 1, 6), DomainError);
}

TEST_CASE("rational canonical form") {
    Rational q(6, -8);
    CHECK(q.num() == -3);
    CHECK(q.den() == 4);
    CHECK(q.str() == "-3/4");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("x/2"), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}
