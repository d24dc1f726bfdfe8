#include "concyclic/spherelift.hpp"

#include <algorithm>
#include <sstream>

namespace concyclic::sphere {

namespace {

// Solves A·x = rhs exactly; A square and nonsingular.
RationalVector solve(std::vector<RationalVector> a, RationalVector rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].sign() == 0) ++pivot;
        if (pivot == n) throw DomainError("singular Gram matrix");
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].sign() == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
    return rhs;
}

Point embed(const Point& v, std::size_t dim) {
    Point out = v;
    out.resize(dim, Integer(0));
    return out;
}

RationalVector truncate(const RationalVector& v, std::size_t dim) {
    return RationalVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
}

// 2-adic valuation of a nonzero integer.
unsigned long two_adic(const Integer& v) {
    return v == 0 ? 0 : mpz_scan1(v.get_mpz_t(), 0);
}

// Beyond this m no lattice point can sit on the sphere for s = 1/2^m: with
// c = u/q, L·(Q(v - c) - r²) is an integer for L = lcm(q², den r²), while
// 2sτ|w|²·L has 2-adic valuation below zero once 2^(m-1) outgrows τ.
unsigned long dyadic_cutoff(const RationalVector& center, const Rational& r2, const Rational& w_norm2) {
    Integer q = 1;
    for (const auto& x : center) q = num::lcm(q, x.den());
    Integer l = num::lcm(q * q, r2.den());
    Integer tau_bound = 2 + num::isqrt((r2 / w_norm2).ceil() + 1);
    unsigned long bits = mpz_sizeinbase(tau_bound.get_mpz_t(), 2);
    return bits + two_adic(l * w_norm2.num()) + 2;
}

std::string point_str(const Point& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

std::vector<OrthogonalComponent> gram_schmidt_data(const GramMatrix& g) {
    const std::size_t d = g.dim();
    std::vector<OrthogonalComponent> out;
    for (std::size_t i = 2; i < d; ++i) {
        // Projection coefficients π with G_{<i}·π = (G_{j,i})_{j<i}.
        std::vector<RationalVector> a(i, RationalVector(i));
        RationalVector rhs(i);
        for (std::size_t r = 0; r < i; ++r) {
            for (std::size_t c = 0; c < i; ++c) a[r][c] = g(r, c);
            rhs[r] = g(r, i);
        }
        RationalVector pi = solve(a, rhs);
        RationalVector w(d, Rational(0));
        for (std::size_t r = 0; r < i; ++r) w[r] = -pi[r];
        w[i] = 1;
        Rational norm2 = g.norm2(w);
        if (norm2.sign() <= 0) throw DomainError("Gram matrix is not positive definite");
        out.push_back({w, norm2});
    }
    return out;
}

std::optional<Rational> exclusion_value(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc,
                                        const Point& v) {
    const std::size_t stage = prev.center.size() + 1;
    const Integer& tau = v[stage - 1];
    if (tau == 0) return std::nullopt;
    GramMatrix gs = g.leading(stage);
    RationalVector c = prev.center;
    c.push_back(Rational(0));
    RationalVector diff = lattice::to_rational(v);
    for (std::size_t i = 0; i < stage; ++i) diff[i] -= c[i];
    return (gs.norm2(diff) - prev.radius2) / (Rational(2) * Rational(tau) * oc.w_norm2);
}

Rational candidate_ball_radius2(const Rational& r2, const Rational& w_norm2) {
    // (√(r² + W) + √W)² = r² + 2W + 2√(W(r² + W)), rounded up.
    Integer root_up = num::isqrt((w_norm2 * (r2 + w_norm2)).ceil()) + 1;
    return r2 + Rational(2) * w_norm2 + Rational(Integer(2 * root_up));
}

std::vector<Rational> exclusion_set(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc) {
    const std::size_t stage = prev.center.size() + 1;
    GramMatrix gs = g.leading(stage);
    RationalVector c = prev.center;
    c.push_back(Rational(0));
    std::vector<Rational> out;
    auto ball = lattice::enumerate_ball(gs, c, candidate_ball_radius2(prev.radius2, oc.w_norm2));
    for (const auto& v : ball.points) {
        auto s = exclusion_value(g, prev, oc, v);
        if (s && s->sign() > 0 && *s <= Rational(1)) out.push_back(*s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SphereSpec lift_once(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc) {
    const std::size_t stage = prev.center.size() + 1;
    if (stage > g.dim()) throw DomainError("nothing left to lift into");
    GramMatrix gs = g.leading(stage);
    RationalVector w = truncate(oc.w, stage);
    RationalVector c = prev.center;
    c.push_back(Rational(0));

    LiftStep step;
    step.stage = static_cast<unsigned>(stage);
    step.w = w;
    step.w_norm2 = oc.w_norm2;

    const unsigned long cutoff = dyadic_cutoff(c, prev.radius2, oc.w_norm2);
    RationalVector center;
    Rational radius2;
    for (unsigned long m = 1;; ++m) {
        if (m > cutoff)
            throw ConsistencyError("lift to stage " + std::to_string(stage) + " found no admissible s up to 1/2^" +
                                   std::to_string(cutoff));
        Rational s(Integer(1), num::pow(Integer(2), m));
        center = c;
        for (std::size_t i = 0; i < stage; ++i) center[i] += s * w[i];
        radius2 = prev.radius2 + s * s * oc.w_norm2;

        std::optional<Point> intruder;
        lattice::visit_shell(gs, center, radius2, [&](const Point& v) {
            if (v[stage - 1] == 0) return true;
            intruder = v;
            return false;
        });
        if (!intruder) {
            step.chosen_s = s;
            break;
        }
        auto s_check = exclusion_value(g, prev, oc, *intruder);
        if (!s_check || *s_check != s)
            throw ConsistencyError("intruder " + point_str(*intruder) + " does not reproduce s = " + s.str());
        step.excluded.push_back(s);
        step.excluded_by.push_back(*intruder);
    }

    SphereSpec next{gs, center, radius2, lattice::enumerate_shell(gs, center, radius2), prev.lift_trace, prev.base};
    next.lift_trace.push_back(step);

    lattice::ShellResult expected;
    for (const auto& v : prev.points.points) expected.points.push_back(embed(v, stage));
    std::sort(expected.points.begin(), expected.points.end());
    if (!(next.points == expected)) {
        std::ostringstream os;
        os << "lift to stage " << stage << " with s = " << step.chosen_s.str() << " changed the point set:";
        for (const auto& v : next.points.points) os << " " << point_str(v);
        throw ConsistencyError(os.str());
    }
    return next;
}

SphereSpec build_sphere(const GramMatrix& g, unsigned n_points, const Integer& prime_bound) {
    if (g.dim() < 2) throw DomainError("build_sphere needs dimension >= 2");
    // Circle on span(b1, b2); the construction realizes (a, -b, c), so pass
    // the mirrored form to land on G's own basis.
    const lattice::QuadForm mirrored{g(0, 0), -2 * g(0, 1), g(1, 1)};
    auto base = circle::build_circle(mirrored, n_points, prime_bound);
    auto circle_points = circle::enumerate_circle_points(base);

    GramMatrix g2 = g.leading(2);
    SphereSpec cur{g2, base.center, base.radius2, lattice::enumerate_shell(g2, base.center, base.radius2), {}, base};
    if (!(cur.points == circle_points))
        throw ConsistencyError("Gram-shell enumeration disagrees with the circle equation");

    auto ortho = gram_schmidt_data(g);
    for (const auto& oc : ortho) cur = lift_once(g, cur, oc);

    if (cur.points.count() != n_points)
        throw ConsistencyError("sphere holds " + std::to_string(cur.points.count()) + " points, expected " +
                               std::to_string(n_points));
    return cur;
}

RectangularModel rectangular_integral_model(const Rational& ratio) {
    if (ratio.sign() <= 0) throw DomainError("ratio must be positive, got " + ratio.str());
    const Integer a = ratio.den(), b = ratio.num();
    // Λ[(a,0),(0,√ab)] has squared axis ratio a/b, so it matches
    // Λ[(α,0),(0,β)] after exchanging the axes and scaling by β/a.
    return {GramMatrix({{a * a, Integer(0)}, {Integer(0), a * b}}), a, b,
            "scale by beta/" + a.get_str() + " after exchanging the two axes"};
}

std::vector<Point> sqrt2_offset_sphere_points(unsigned k) {
    // (4x-1)² + 16y² + 16z² + 2 - 8z·√2 = 17^k + 2, split into ℚ and √2 parts.
    const Integer rhs = num::pow(Integer(17), k) + 2;
    const Integer zmax = (num::isqrt(rhs) + 2) / 4 + 1;
    std::vector<Point> out;
    for (Integer z = -zmax; z <= zmax; ++z) {
        if (-8 * z != 0) continue;
        Integer rest = rhs - 16 * z * z - 2;
        for (Integer y = 0; 16 * y * y <= rest; ++y) {
            auto root = num::perfect_square_root(rest - 16 * y * y);
            if (!root) continue;
            for (const Integer& big_x : {*root, Integer(-*root)}) {
                Integer shifted = big_x + 1;
                if (!mpz_divisible_ui_p(shifted.get_mpz_t(), 4)) continue;
                for (const Integer& yy : {y, Integer(-y)}) out.push_back({shifted / 4, yy, z});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace concyclic::sphere
