#include "concyclic/concyclic2d.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

namespace concyclic::circle {

using quadorder::OrderElement;

namespace {

std::string describe(const AdmissiblePrime& ap) {
    std::ostringstream os;
    os << "p=" << ap.p << " x1=" << ap.x1 << " y1=" << ap.y1 << " n=" << ap.n << " a=" << ap.a;
    return os.str();
}

}  // namespace

void certify(const AdmissiblePrime& ap) {
    auto fail = [&](const std::string& what) {
        throw ConsistencyError("admissible prime invariant violated (" + what + "): " + describe(ap));
    };
    const Integer four_a = 4 * ap.a;
    auto params = quadorder::order_params(ap.n);
    if (!num::is_prime(ap.p)) fail("p prime");
    if (ap.p != ap.x1 * ap.x1 + ap.n * ap.y1 * ap.y1) fail("p = x1^2 + n*y1^2");
    if (ap.x1 < 1 || ap.y1 < four_a) fail("x1 >= 1, y1 >= 4a");
    if (num::mod(ap.y1, four_a) != 0) fail("y1 = 0 mod 4a");
    if (num::mod(ap.n, ap.p) == 0) fail("p does not divide n");
    if (mpz_even_p(ap.x1.get_mpz_t())) fail("x1 odd");
    if (num::gcd(ap.x1, four_a) != 1) fail("gcd(x1, 4a) = 1");
    if (num::kronecker(params.dk, ap.p) != 1) fail("kronecker(d_K, p) = 1");
    if (num::gcd(ap.p, params.f) != 1) fail("gcd(p, f) = 1");
}

AdmissiblePrime find_admissible_prime(const Integer& n, const Integer& a, const Integer& prime_bound) {
    if (n < 3) throw DomainError("find_admissible_prime needs n >= 3, got " + n.get_str());
    if (a < 1) throw DomainError("find_admissible_prime needs a >= 1, got " + a.get_str());
    const Integer step = 16 * a * a * n;  // n·(4a)²

    // Values x² + step·t² in ascending (value, t, x) order: one lazy stream
    // per t, streams opened as soon as step·t² could be next.
    using Entry = std::tuple<Integer, Integer, Integer>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    Integer next_t = 1;
    heap.emplace(step, next_t, Integer(0));
    for (;;) {
        auto [value, t, x] = heap.top();
        heap.pop();
        if (value > prime_bound)
            throw SearchBudgetExceeded("no admissible prime <= " + prime_bound.get_str() + " for n=" +
                                       n.get_str() + ", a=" + a.get_str());
        heap.emplace(value + 2 * x + 1, t, x + 1);
        if (t == next_t) {
            ++next_t;
            heap.emplace(step * next_t * next_t, next_t, Integer(0));
        }
        if (x == 0 || !num::is_prime(value)) continue;
        AdmissiblePrime ap{value, x, 4 * a * t, n, a, t};
        certify(ap);
        return ap;
    }
}

Integer compute_j(const Integer& x1, const Integer& a, unsigned k) {
    const Integer four_a = 4 * a;
    if (a < 1) throw DomainError("compute_j needs a >= 1");
    if (num::gcd(x1, four_a) != 1) throw DomainError("compute_j needs gcd(x1, 4a) = 1");
    Integer j;
    mpz_powm_ui(j.get_mpz_t(), x1.get_mpz_t(), k, four_a.get_mpz_t());
    if (j == 0) throw ConsistencyError("x1^k = 0 mod 4a with x1 = " + x1.get_str());
    return j;
}

CircleSpec build_circle(const QuadForm& form, unsigned n_points, const Integer& prime_bound) {
    if (!form.positive_definite()) throw DomainError("form is not positive definite");
    if (n_points < 1) throw DomainError("n_points must be >= 1");
    CircleSpec spec;
    spec.form = form;
    spec.n_points = n_points;
    spec.k = n_points - 1;
    spec.prime = find_admissible_prime(form.n(), form.a, prime_bound);
    spec.j = compute_j(spec.prime.x1, form.a, spec.k);
    spec.pk = num::pow(spec.prime.p, spec.k);
    spec.center = {Rational(spec.j, 4 * form.a), Rational(0)};
    spec.radius2 = Rational(spec.pk, 16 * form.a);
    return spec;
}

lattice::ShellResult solve_circle_equation(const CircleSpec& spec) {
    const auto& f = spec.form;
    const Integer four_a = 4 * f.a;
    Factorization fac;
    if (spec.k > 0) fac[spec.prime.p] = spec.k;
    lattice::ShellResult out;
    // X² + 4n·y² = p^k, then 4a·x = X + 2b·y + j.
    for (const auto& v : lattice::represent({Integer(1), Integer(0), 4 * f.n()}, spec.pk, fac)) {
        Integer numer = v[0] + 2 * f.b * v[1] + spec.j;
        if (!mpz_divisible_p(numer.get_mpz_t(), four_a.get_mpz_t())) continue;
        out.points.push_back({numer / four_a, v[1]});
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

lattice::ShellResult enumerate_circle_points(const CircleSpec& spec) {
    auto shell = solve_circle_equation(spec);
    if (shell.count() != spec.n_points) {
        std::ostringstream os;
        os << "circle for form " << spec.form << " with k=" << spec.k << ", p=" << spec.prime.p << ", j="
           << spec.j << " holds " << shell.count() << " lattice points, expected " << spec.n_points << ":";
        for (const auto& v : shell.points) os << " (" << v[0] << "," << v[1] << ")";
        throw ConsistencyError(os.str());
    }
    return shell;
}

RealizedShell realized_shell(const CircleSpec& spec) {
    const auto& f = spec.form;
    if (mpz_even_p(f.b.get_mpz_t()))
        return {lattice::GramMatrix({{f.a, -f.b / 2}, {-f.b / 2, f.c}}), spec.radius2, Integer(1)};
    return {lattice::GramMatrix({{2 * f.a, -f.b}, {-f.b, 2 * f.c}}), spec.radius2 * Rational(2), Integer(2)};
}

lattice::ShellResult gram_shell_points(const CircleSpec& spec) {
    auto rs = realized_shell(spec);
    return lattice::enumerate_shell(rs.gram, spec.center, rs.radius2);
}

OrderElement phi(const CircleSpec& spec, const lattice::Point& v) {
    const auto& f = spec.form;
    return {4 * f.a * v[0] - 2 * f.b * v[1] - spec.j, 2 * v[1], f.n()};
}

lattice::Point phi_inverse(const CircleSpec& spec, const OrderElement& z) {
    const auto& f = spec.form;
    const Integer four_a = 4 * f.a;
    Integer numer = z.x + f.b * z.y + spec.j;
    if (!mpz_divisible_p(numer.get_mpz_t(), four_a.get_mpz_t()) || mpz_odd_p(z.y.get_mpz_t())) {
        std::ostringstream os;
        os << "inverse map is not integral at " << z;
        throw ConsistencyError(os.str());
    }
    return {numer / four_a, z.y / 2};
}

BijectionReport bijection_check(const CircleSpec& spec) {
    const auto& f = spec.form;
    const Integer four_a = 4 * f.a;
    const Integer n = f.n();
    std::ostringstream problems;
    auto congruent = [&](const Integer& v, const Integer& target) { return num::mod(v - target, four_a) == 0; };

    BijectionReport rep;
    rep.points = enumerate_circle_points(spec).points;
    for (const auto& v : rep.points) {
        auto z = phi(spec, v);
        if (z.norm() != spec.pk) problems << " norm(phi(" << v[0] << "," << v[1] << "))=" << z.norm() << ";";
        if (!congruent(z.x + z.y, -spec.j)) problems << " phi image " << z << " has X+Y != -j mod 4a;";
        if (!congruent(z.y, 0)) problems << " phi image " << z << " has Y != 0 mod 4a;";
        rep.images.push_back(z);
    }

    OrderElement q{spec.prime.x1, spec.prime.y1, n};
    rep.a_set = quadorder::generate_norm_elements(q, spec.k);
    auto solved = quadorder::norm_elements(n, spec.prime.p, spec.k);
    if (solved != rep.a_set) problems << " generated norm-p^k set differs from the solved set;";
    if (rep.a_set.size() != 2 * (spec.k + 1))
        problems << " #A = " << rep.a_set.size() << " != " << 2 * (spec.k + 1) << ";";
    for (const auto& z : solved) {
        // Every element of norm p^k must have Y ≡ 0 and X + Y ≡ ±j (mod 4a).
        if (!congruent(z.y, 0)) problems << " element " << z << " of norm p^k has Y != 0 mod 4a;";
        if (!congruent(z.x + z.y, spec.j) && !congruent(z.x + z.y, -spec.j))
            problems << " element " << z << " has X+Y != +-j mod 4a;";
    }
    for (const auto& z : rep.a_set)
        if (congruent(z.x + z.y, -spec.j)) rep.ahat.push_back(z);
    if (rep.ahat.size() != spec.k + 1) problems << " #Ahat = " << rep.ahat.size() << " != " << spec.k + 1 << ";";

    auto images = rep.images;
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) problems << " phi is not injective;";
    if (images != rep.ahat) problems << " phi(C) != Ahat;";

    for (const auto& z : rep.ahat) {
        auto v = phi_inverse(spec, z);
        if (!std::binary_search(rep.points.begin(), rep.points.end(), v))
            problems << " inverse of " << z << " is (" << v[0] << "," << v[1] << "), not on the circle;";
        else if (!(phi(spec, v) == z))
            problems << " phi(inverse(" << z << ")) differs;";
    }

    if (auto text = problems.str(); !text.empty()) {
        std::ostringstream os;
        os << "bijection check failed for form " << f << ", k=" << spec.k << ", p=" << spec.prime.p << ":" << text;
        throw ConsistencyError(os.str());
    }
    return rep;
}

}  // namespace concyclic::circle
