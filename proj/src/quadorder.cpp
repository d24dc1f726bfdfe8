#include "concyclic/quadorder.hpp"

#include "concyclic/binary_form.hpp"

#include <algorithm>
#include <set>

namespace concyclic::quadorder {

OrderParams order_params(const Integer& n) {
    if (n <= 0) throw DomainError("order_params needs n >= 1, got " + n.get_str());
    auto [d, s] = num::squarefree_decompose(n);
    // -d ≡ 1 (mod 4) exactly when d ≡ 3 (mod 4).
    if (num::mod(d, 4) == 3) return {n, d, -d, 2 * s, WKind::Half};
    return {n, d, -4 * d, s, WKind::Sqrt};
}

std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::Split: return "split";
        case Splitting::Inert: return "inert";
        case Splitting::Ramified: return "ramified";
    }
    return "?";
}

Splitting splitting_type(const Integer& dk, const Integer& p) {
    if (!num::is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    Integer r4 = num::mod(dk, 4);
    if (dk >= 0 || (r4 != 0 && r4 != 1)) throw DomainError(dk.get_str() + " is not a negative discriminant");
    if (p == 2) {
        if (mpz_even_p(dk.get_mpz_t())) return Splitting::Ramified;
        return num::mod(dk, 8) == 1 ? Splitting::Split : Splitting::Inert;
    }
    switch (num::kronecker(dk, p)) {
        case 1: return Splitting::Split;
        case -1: return Splitting::Inert;
        default: return Splitting::Ramified;
    }
}

OrderElement OrderElement::operator*(const OrderElement& o) const {
    if (n != o.n) throw DomainError("multiplying elements of different orders");
    return {x * o.x - n * y * o.y, x * o.y + y * o.x, n};
}

OrderElement OrderElement::canonical() const {
    if (x > 0 || (x == 0 && y >= 0)) return *this;
    return -*this;
}

std::vector<OrderElement> brute_norm_elements(const Integer& n, const Integer& p, unsigned k) {
    if (n < 1 || p < 2) throw DomainError("brute_norm_elements needs n >= 1 and p >= 2");
    const Integer target = num::pow(p, k);
    const Integer ymax = num::isqrt(target / n);
    std::vector<OrderElement> out;
    for (Integer y = -ymax; y <= ymax; ++y) {
        auto x = num::perfect_square_root(target - n * y * y);
        if (!x) continue;
        out.push_back({*x, y, n});
        if (*x != 0) out.push_back({-*x, y, n});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer brute_count_reps(const Integer& n, const Integer& p, unsigned k) {
    if (n < 1 || p < 2) throw DomainError("brute_count_reps needs n >= 1 and p >= 2");
    const Integer target = num::pow(p, k);
    const Integer ymax = num::isqrt(target / n);
    Integer count = 0;
    for (Integer y = -ymax; y <= ymax; ++y) {
        auto x = num::perfect_square_root(target - n * y * y);
        if (x) count += (*x == 0) ? 1 : 2;
    }
    return count;
}

std::vector<OrderElement> norm_elements(const Integer& n, const Integer& p, unsigned k) {
    if (n < 1) throw DomainError("norm_elements needs n >= 1");
    if (!num::is_prime(p)) throw DomainError(p.get_str() + " is not prime");
    Factorization fac;
    if (k > 0) fac[p] = k;
    std::vector<OrderElement> out;
    for (const auto& v : lattice::represent({Integer(1), Integer(0), n}, num::pow(p, k), fac))
        out.push_back({v[0], v[1], n});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderElement> generate_norm_elements(const OrderElement& q, unsigned k) {
    const Integer p = q.norm();
    if (!num::is_prime(p)) throw DomainError("generator norm " + p.get_str() + " is not prime");
    // powers[i] = q^i, conj_powers[i] = q̄^i
    std::vector<OrderElement> powers{{Integer(1), Integer(0), q.n}}, conj_powers = powers;
    for (unsigned i = 1; i <= k; ++i) {
        powers.push_back(powers.back() * q);
        conj_powers.push_back(conj_powers.back() * q.conj());
    }
    std::vector<OrderElement> out;
    for (unsigned i = 0; i <= k; ++i) {
        auto z = powers[i] * conj_powers[k - i];
        out.push_back(z);
        out.push_back(-z);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<OrderElement> find_prime_element(const Integer& n, const Integer& p) {
    if (n < 1) throw DomainError("find_prime_element needs n >= 1");
    for (Integer y = 0; n * y * y <= p; ++y) {
        if (auto x = num::perfect_square_root(p - n * y * y)) return OrderElement{*x, y, n};
    }
    return std::nullopt;
}

namespace {

std::set<OrderElement> canonical_set(const std::vector<OrderElement>& zs) {
    std::set<OrderElement> out;
    for (const auto& z : zs) out.insert(z.canonical());
    return out;
}

}  // namespace

Main1Report theorem_main1_check(const Integer& n, const Integer& p, unsigned k_max) {
    // n = 1 is excluded: ℤ[i] has four units.
    if (n < 3) throw DomainError("theorem check needs n >= 3, got " + n.get_str());
    if (!num::is_prime(p)) throw DomainError(p.get_str() + " is not prime");

    Main1Report rep{Main1Report::Status::Pass, order_params(n), find_prime_element(n, p), 0, 0, {}, {}, {}};
    rep.kronecker = num::kronecker(rep.params.dk, p);
    rep.gcd_pf = num::gcd(p, rep.params.f);

    if (!rep.witness) rep.reason = p.get_str() + " is not of the form x^2 + " + n.get_str() + "y^2";
    else if (rep.kronecker != 1) rep.reason = "kronecker(d_K, p) = " + std::to_string(rep.kronecker);
    else if (rep.gcd_pf != 1) rep.reason = "gcd(p, f) = " + rep.gcd_pf.get_str();
    if (!rep.reason.empty()) {
        rep.status = Main1Report::Status::HypothesesNotMet;
        return rep;
    }

    for (unsigned k = 0; k <= k_max; ++k) {
        auto brute = brute_norm_elements(n, p, k);
        rep.counts.push_back(Integer(static_cast<unsigned long>(brute.size())));
        auto generated = generate_norm_elements(*rep.witness, k);
        if (brute.size() != 2 * (k + 1))
            rep.failures.push_back("k=" + std::to_string(k) + ": brute-force count " +
                                   std::to_string(brute.size()) + " != " + std::to_string(2 * (k + 1)));
        if (canonical_set(brute) != canonical_set(generated))
            rep.failures.push_back("k=" + std::to_string(k) + ": generated elements differ from brute force");
    }
    if (!rep.failures.empty()) rep.status = Main1Report::Status::Fail;
    return rep;
}

}  // namespace concyclic::quadorder
