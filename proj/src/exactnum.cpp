#include "concyclic/exactnum.hpp"

#include <algorithm>
#include <array>

namespace concyclic {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: '" + text + "'");
    }
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

namespace num {

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative integer " + n.get_str());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Integer> perfect_square_root(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

std::optional<Rational> rational_square_root(const Rational& q) {
    auto rn = perfect_square_root(q.num());
    if (!rn) return std::nullopt;
    auto rd = perfect_square_root(q.den());
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

namespace {

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, unsigned long base) {
    Integer a(base);
    if (mod(a, n) == 0) return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Integer nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1UL << 16;
        std::vector<bool> composite(limit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Integer two64 = Integer(1) << 64;
    if (n >= two64) return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;

    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven deterministic set below 3.3e24.
    for (unsigned long base : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (!miller_rabin_round(n, d, s, base)) return false;
    }
    return true;
}

int kronecker(const Integer& a, const Integer& m) {
    return mpz_kronecker(a.get_mpz_t(), m.get_mpz_t());
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& m) {
    if (m < 1) throw DomainError("squarefree_decompose needs m >= 1, got " + m.get_str());
    Integer rest = m, d = 1, s = 1;
    for (Integer p = 2; p * p <= rest; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e == 0) continue;
        s *= pow(p, e / 2);
        if (e % 2) d *= p;
    }
    d *= rest;
    return {d, s};
}

Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

// Brent's variant of Pollard rho; n must be odd composite and not a prime power.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_cofactor(const Integer& n, unsigned mult, Factorization& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                split_cofactor(root, mult * static_cast<unsigned>(e), out);
                return;
            }
        }
    }
    Integer g = pollard_brent(n);
    Integer h = n / g;
    split_cofactor(g, mult, out);
    split_cofactor(h, mult, out);
}

}  // namespace

Factorization factorize(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor zero");
    Factorization out;
    Integer rest = abs(n);
    for (unsigned long p : small_primes()) {
        if (Integer(p) * p > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        out[Integer(p)] = e;
    }
    split_cofactor(rest, 1, out);
    return out;
}

namespace {

// Tonelli-Shanks; p odd prime, a a nonzero quadratic residue mod p.
Integer tonelli_shanks(const Integer& a, const Integer& p) {
    Integer q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Integer z = 2;
    while (kronecker(z, p) != -1) ++z;
    Integer c, x, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

}  // namespace

std::vector<Integer> sqrt_mod_prime_power(const Integer& d, const Integer& p, unsigned e) {
    std::vector<Integer> roots;
    if (e == 0) return {Integer(0)};
    Integer pe = pow(p, e);
    Integer dp = mod(d, p);
    if (p != 2 && dp != 0) {
        if (kronecker(dp, p) != 1) return roots;
        Integer r = tonelli_shanks(dp, p);
        // Newton/Hensel: r <- r - (r² - D)/(2r), modulus doubling each pass.
        Integer modulus = p;
        while (modulus < pe) {
            modulus = std::min(Integer(modulus * modulus), pe);
            Integer inv, two_r = 2 * r;
            mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), modulus.get_mpz_t());
            r = mod(r - (r * r - d) * inv, modulus);
        }
        roots = {r, mod(-r, pe)};
    } else {
        // p = 2 or p | D: lift digit by digit, keeping every branch.
        Integer modulus = 1;
        roots = {Integer(0)};
        for (unsigned level = 0; level < e; ++level) {
            Integer next_mod = modulus * p;
            std::vector<Integer> next;
            for (const auto& r : roots) {
                for (Integer lam = 0; lam < p; ++lam) {
                    Integer cand = r + lam * modulus;
                    if (mod(cand * cand - d, next_mod) == 0) next.push_back(cand);
                }
            }
            roots = std::move(next);
            modulus = next_mod;
            if (roots.empty()) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Integer crt(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) && m2 != 1)
        throw DomainError("crt moduli not coprime");
    if (m2 == 1) return mod(r1, m1);
    Integer t = mod((r2 - r1) * inv, m2);
    return mod(r1 + m1 * t, m1 * m2);
}

}  // namespace num
}  // namespace concyclic
