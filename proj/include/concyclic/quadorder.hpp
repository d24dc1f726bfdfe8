#pragma once

// Arithmetic of the order ℤ[√-n] inside K = ℚ(√-d): discriminant and
// conductor bookkeeping, splitting of rational primes, and the elements of
// norm p^k.

#include "concyclic/exactnum.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace concyclic::quadorder {

enum class WKind { Sqrt, Half };  // w_K = √-d  or  (-1 + √-d)/2

struct OrderParams {
    Integer n, d, dk, f;
    WKind wk_kind;
};

/// Decomposes ℤ[√-n] as the order of conductor f in ℚ(√-d), -4n = f²·d_K.
OrderParams order_params(const Integer& n);

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

/// How the prime p decomposes in the maximal order of discriminant d_K.
Splitting splitting_type(const Integer& dk, const Integer& p);

/// x + y√-n.
struct OrderElement {
    Integer x, y, n;

    Integer norm() const { return x * x + n * y * y; }
    OrderElement conj() const { return {x, -y, n}; }
    OrderElement operator-() const { return {-x, -y, n}; }
    OrderElement operator*(const OrderElement& o) const;

    /// Representative of {z, -z}: x > 0, or x = 0 and y >= 0.
    OrderElement canonical() const;

    friend bool operator==(const OrderElement&, const OrderElement&) = default;
    friend auto operator<=>(const OrderElement& a, const OrderElement& b) {
        if (auto c = cmp(a.x, b.x); c != 0) return c <=> 0;
        return cmp(a.y, b.y) <=> 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const OrderElement& z) {
        return os << z.x << (z.y < 0 ? " - " : " + ") << abs(z.y) << "√-" << z.n;
    }
};

/// #{(x, y) : x² + n·y² = p^k} by exhaustive scan over y.
Integer brute_count_reps(const Integer& n, const Integer& p, unsigned k);

/// The same solution set as (x, y) pairs, sorted; exhaustive scan.
std::vector<OrderElement> brute_norm_elements(const Integer& n, const Integer& p, unsigned k);

/// All elements of norm p^k, found through the binary-form solver with the
/// known factorization p^k (no scan). p must be prime.
std::vector<OrderElement> norm_elements(const Integer& n, const Integer& p, unsigned k);

/// ±q^i·q̄^(k-i) for 0 <= i <= k, sorted and deduplicated.
std::vector<OrderElement> generate_norm_elements(const OrderElement& q, unsigned k);

/// Some z = x + y√-n with |z|² = p, by scan; empty if p has no such form.
std::optional<OrderElement> find_prime_element(const Integer& n, const Integer& p);

struct Main1Report {
    enum class Status { Pass, Fail, HypothesesNotMet };
    Status status;
    OrderParams params;
    std::optional<OrderElement> witness;  // z with |z|² = p
    int kronecker = 0;
    Integer gcd_pf;
    std::vector<Integer> counts;  // brute-force count for k = 0..k_max
    std::vector<std::string> failures;
    std::string reason;  // set when hypotheses are not met
};

/// Checks the hypotheses for (n, p), then for each k <= k_max compares the
/// brute-force solution set with the generated one and with 2(k+1).
Main1Report theorem_main1_check(const Integer& n, const Integer& p, unsigned k_max);

}  // namespace concyclic::quadorder
