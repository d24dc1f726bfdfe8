#include "concyclic/binary_form.hpp"

#include <algorithm>

namespace concyclic::lattice {

QuadForm make_form(const Integer& a, const Integer& b, const Integer& c) {
    QuadForm f{a, b, c};
    if (!f.positive_definite())
        throw DomainError("form (" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() +
                          ") is not positive definite");
    return f;
}

QuadForm transform(const QuadForm& f, const Mat2& u) {
    return {f(u.m00, u.m10),
            2 * f.a * u.m00 * u.m01 + f.b * (u.m00 * u.m11 + u.m01 * u.m10) + 2 * f.c * u.m10 * u.m11,
            f(u.m01, u.m11)};
}

Reduction reduce(const QuadForm& f) {
    if (!f.positive_definite()) throw DomainError("reduce needs a positive definite form");
    QuadForm cur = f;
    Mat2 basis;
    const Mat2 swap{0, -1, 1, 0};
    for (;;) {
        // k = ⌊(a - b) / 2a⌋ moves b into (-a, a].
        Integer k;
        Integer numer = cur.a - cur.b, denom = 2 * cur.a;
        mpz_fdiv_q(k.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        if (k != 0) {
            Mat2 shear{1, k, 0, 1};
            cur = transform(cur, shear);
            basis = basis * shear;
        }
        if (cur.a > cur.c) {
            cur = transform(cur, swap);
            basis = basis * swap;
            continue;
        }
        break;
    }
    if (cur.a == cur.c && cur.b < 0) {
        cur = transform(cur, swap);
        basis = basis * swap;
    }
    return {cur, f.content(), basis};
}

std::vector<Mat2> automorphs(const QuadForm& f) {
    auto red = reduce(f);
    std::vector<Mat2> out;
    // Automorphs of a reduced form have entries in {-1, 0, 1}.
    for (int m00 = -1; m00 <= 1; ++m00)
        for (int m01 = -1; m01 <= 1; ++m01)
            for (int m10 = -1; m10 <= 1; ++m10)
                for (int m11 = -1; m11 <= 1; ++m11) {
                    Mat2 t{m00, m01, m10, m11};
                    if (t.det() != 1) continue;
                    if (!(transform(red.reduced, t) == red.reduced)) continue;
                    out.push_back(red.basis * t * red.basis.inverse_sl2());
                }
    return out;
}

namespace {

using Vec2 = std::array<Integer, 2>;

Factorization divide_out(Factorization fac, const Integer& g) {
    if (g == 1) return fac;
    for (const auto& [p, e] : num::factorize(g)) {
        auto it = fac.find(p);
        if (it == fac.end() || it->second < e) throw ConsistencyError("divide_out: factorization mismatch");
        it->second -= e;
        if (it->second == 0) fac.erase(it);
    }
    return fac;
}

// Roots t in [0, 2m) of t² ≡ D (mod 4m).
std::vector<Integer> discriminant_roots(const Integer& d, const Integer& m, const Factorization& m_factors) {
    Factorization modulus = m_factors;
    modulus[Integer(2)] += 2;
    std::vector<Integer> acc{Integer(0)};
    Integer acc_mod = 1;
    for (const auto& [p, e] : modulus) {
        auto local = num::sqrt_mod_prime_power(d, p, e);
        if (local.empty()) return {};
        Integer pe = num::pow(p, e);
        std::vector<Integer> next;
        next.reserve(acc.size() * local.size());
        for (const auto& r1 : acc)
            for (const auto& r2 : local) next.push_back(num::crt(r1, acc_mod, r2, pe));
        acc = std::move(next);
        acc_mod *= pe;
    }
    Integer two_m = 2 * m;
    for (auto& t : acc) t = num::mod(t, two_m);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

void primitive_reps(const QuadForm& f, const Reduction& f_red, const std::vector<Mat2>& autos,
                    const Integer& m, const Factorization& m_factors, const Integer& scale,
                    std::vector<Vec2>& out) {
    const Integer d = f.discriminant();
    for (const auto& t : discriminant_roots(d, m, m_factors)) {
        QuadForm g{m, t, (t * t - d) / (4 * m)};
        auto g_red = reduce(g);
        if (!(g_red.reduced == f_red.reduced)) continue;
        Mat2 sigma = f_red.basis * g_red.basis.inverse_sl2();
        for (const auto& tau : autos) {
            Mat2 s = tau * sigma;
            out.push_back({scale * s.m00, scale * s.m10});
        }
    }
}

}  // namespace

std::vector<Vec2> represent(const QuadForm& f, const Integer& m) {
    if (m <= 0) return represent(f, m, {});
    return represent(f, m, num::factorize(m));
}

std::vector<Vec2> represent(const QuadForm& f, const Integer& m, const Factorization& m_factors) {
    if (!f.positive_definite()) throw DomainError("represent needs a positive definite form");
    if (m < 0) return {};
    if (m == 0) return {Vec2{Integer(0), Integer(0)}};

    const Integer g = f.content();
    if (!mpz_divisible_p(m.get_mpz_t(), g.get_mpz_t())) return {};
    QuadForm prim{f.a / g, f.b / g, f.c / g};
    Integer m0 = m / g;
    Factorization fac0 = divide_out(m_factors, g);

    auto prim_red = reduce(prim);
    auto autos = automorphs(prim);

    std::vector<Vec2> out;
    // Walk square divisors s² | m0 through the exponent vectors.
    std::vector<std::pair<Integer, unsigned>> primes(fac0.begin(), fac0.end());
    std::vector<unsigned> half(primes.size(), 0);
    for (;;) {
        Integer s = 1;
        Factorization rest;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            s *= num::pow(primes[i].first, half[i]);
            unsigned left = primes[i].second - 2 * half[i];
            if (left) rest[primes[i].first] = left;
        }
        primitive_reps(prim, prim_red, autos, m0 / (s * s), rest, s, out);

        std::size_t i = 0;
        for (; i < primes.size(); ++i) {
            if (2 * (half[i] + 1) <= primes[i].second) {
                ++half[i];
                break;
            }
            half[i] = 0;
        }
        if (i == primes.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace concyclic::lattice
