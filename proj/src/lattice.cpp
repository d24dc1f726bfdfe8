#include "concyclic/lattice.hpp"

#include <algorithm>

namespace concyclic::lattice {

namespace {

// G = Uᵀ·diag(D)·U with U unit upper triangular, so that
// Q(v) = Σ_i D_i (v_i + Σ_{j>i} U_ij v_j)².
// shift[k] = G_{<k}⁻¹·G_{<k,k}: fixing coordinate k at offset y moves the
// center of the remaining leading block by -shift[k]·y.
struct Ldl {
    std::vector<Rational> diag;
    std::vector<std::vector<Rational>> upper;
    std::vector<std::vector<Rational>> shift;
};

Ldl ldl(const std::vector<std::vector<Integer>>& g) {
    const std::size_t d = g.size();
    Ldl out{std::vector<Rational>(d), std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)),
            std::vector<std::vector<Rational>>(d)};
    for (std::size_t i = 0; i < d; ++i) {
        Rational di = g[i][i];
        for (std::size_t k = 0; k < i; ++k) di -= out.diag[k] * out.upper[k][i] * out.upper[k][i];
        if (di.sign() <= 0) throw DomainError("Gram matrix is not positive definite");
        out.diag[i] = di;
        out.upper[i][i] = 1;
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational s = g[i][j];
            for (std::size_t k = 0; k < i; ++k) s -= out.diag[k] * out.upper[k][i] * out.upper[k][j];
            out.upper[i][j] = s / di;
        }
    }
    // Back substitution U_{<k}·shift = U_{<k,k}.
    for (std::size_t k = 0; k < d; ++k) {
        auto& sh = out.shift[k];
        sh.assign(k, Rational(0));
        for (std::size_t i = k; i-- > 0;) {
            Rational v = out.upper[i][k];
            for (std::size_t j = i + 1; j < k; ++j) v -= out.upper[i][j] * sh[j];
            sh[i] = v;
        }
    }
    return out;
}

// Scan width above which a 2-dimensional shell is solved through the
// binary form instead of by walking the outer coordinate.
constexpr long kBinarySolveWidth = 64;

class Enumerator {
public:
    Enumerator(const GramMatrix& g, bool shell, const PointVisitor& visit)
        : g_(g), ldl_(ldl(g.rows())), shell_(shell), visit_(visit), current_(g.dim()) {}

    bool run(const RationalVector& center, const Rational& rho) {
        if (center.size() != g_.dim())
            throw DomainError("center dimension does not match the lattice");
        return level(g_.dim(), center, rho);
    }

private:
    // Q_L(u - c) over integer u lies in Q_L(c) + (1/e)ℤ, e the common
    // denominator of 2·G_L·c.
    bool congruence_possible(std::size_t dim, const RationalVector& c, const Rational& rho) const {
        Integer e = 1;
        Rational qc = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < dim; ++j) row += Rational(g_(i, j)) * c[j];
            e = num::lcm(e, (row * 2).den());
            qc += row * c[i];
        }
        return ((rho - qc) * Rational(e)).is_integer();
    }

    // Integer range guaranteed to contain every u with D·(u - c)² <= rho.
    std::pair<Integer, Integer> coordinate_range(const Rational& c, const Rational& d, const Rational& rho) const {
        Integer bound = num::isqrt((rho / d).ceil()) + 1;
        return {(c - Rational(bound)).floor(), (c + Rational(bound)).ceil()};
    }

    bool emit() { return visit_(current_); }

    bool level(std::size_t dim, const RationalVector& c, const Rational& rho) {
        if (rho.sign() < 0) return true;
        if (shell_ && !congruence_possible(dim, c, rho)) return true;
        const std::size_t last = dim - 1;
        const Rational& d = ldl_.diag[last];

        if (dim == 1) return last_coordinate(c[0], d, rho);

        auto [lo, hi] = coordinate_range(c[last], d, rho);
        if (dim == 2 && shell_ && hi - lo > kBinarySolveWidth) return binary_shell(c, rho);

        RationalVector inner(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(last));
        for (Integer u = lo; u <= hi; ++u) {
            Rational y = Rational(u) - c[last];
            Rational rest = rho - d * y * y;
            if (rest.sign() < 0) continue;
            for (std::size_t i = 0; i < last; ++i) inner[i] = c[i] - ldl_.shift[last][i] * y;
            current_[last] = u;
            if (!level(last, inner, rest)) return false;
        }
        return true;
    }

    bool last_coordinate(const Rational& c, const Rational& d, const Rational& rho) {
        if (shell_) {
            auto r = num::rational_square_root(rho / d);
            if (!r) return true;
            for (const Rational& u : {c - *r, c + *r}) {
                if (!u.is_integer()) continue;
                current_[0] = u.num();
                if (!emit()) return false;
                if (r->sign() == 0) break;
            }
            return true;
        }
        auto [lo, hi] = coordinate_range(c, d, rho);
        for (Integer u = lo; u <= hi; ++u) {
            Rational y = Rational(u) - c;
            if (d * y * y > rho) continue;
            current_[0] = u;
            if (!emit()) return false;
        }
        return true;
    }

    // Clear denominators (c = u0/q) and solve F(w) = rho·q² with
    // w ≡ -u0 (mod q), then u = (w + u0)/q.
    bool binary_shell(const RationalVector& c, const Rational& rho) {
        Integer q = num::lcm(c[0].den(), c[1].den());
        Rational scaled = rho * Rational(Integer(q * q));
        if (!scaled.is_integer()) return true;
        Integer u0 = (c[0] * Rational(q)).num(), u1 = (c[1] * Rational(q)).num();
        QuadForm f{g_(0, 0), 2 * g_(0, 1), g_(1, 1)};
        for (const auto& w : represent(f, scaled.num())) {
            Integer x = w[0] + u0, y = w[1] + u1;
            if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()) || !mpz_divisible_p(y.get_mpz_t(), q.get_mpz_t()))
                continue;
            current_[0] = x / q;
            current_[1] = y / q;
            if (!emit()) return false;
        }
        return true;
    }

    const GramMatrix& g_;
    Ldl ldl_;
    bool shell_;
    const PointVisitor& visit_;
    Point current_;
};

ShellResult collect(const GramMatrix& g, const RationalVector& center, const Rational& r2, bool shell) {
    ShellResult out;
    PointVisitor push = [&out](const Point& p) {
        out.points.push_back(p);
        return true;
    };
    Enumerator(g, shell, push).run(center, r2);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace

GramMatrix::GramMatrix(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
    const std::size_t d = rows_.size();
    if (d == 0) throw DomainError("Gram matrix must have dimension >= 1");
    for (const auto& r : rows_)
        if (r.size() != d) throw DomainError("Gram matrix must be square");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rows_[i][j] != rows_[j][i]) throw DomainError("Gram matrix must be symmetric");
    // Positive pivots of the LDL factorization <=> positive leading minors.
    (void)ldl(rows_);
}

GramMatrix GramMatrix::identity(std::size_t dim) {
    std::vector<std::vector<Integer>> rows(dim, std::vector<Integer>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) rows[i][i] = 1;
    return GramMatrix(std::move(rows));
}

GramMatrix GramMatrix::from_form(const QuadForm& f) {
    if (!mpz_even_p(f.b.get_mpz_t()))
        throw DomainError("a form with odd middle coefficient has no integral Gram matrix");
    return GramMatrix({{f.a, f.b / 2}, {f.b / 2, f.c}});
}

GramMatrix GramMatrix::leading(std::size_t k) const {
    std::vector<std::vector<Integer>> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i].assign(rows_[i].begin(), rows_[i].begin() + static_cast<std::ptrdiff_t>(k));
    return GramMatrix(std::move(rows));
}

GramMatrix GramMatrix::scaled(const Integer& factor) const {
    auto rows = rows_;
    for (auto& r : rows)
        for (auto& x : r) x *= factor;
    return GramMatrix(std::move(rows));
}

Integer GramMatrix::determinant() const {
    auto f = ldl(rows_);
    Rational det = 1;
    for (const auto& d : f.diag) det *= d;
    return det.num();
}

Rational GramMatrix::bilinear(const RationalVector& x, const RationalVector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DomainError("vector dimension does not match the lattice");
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) s += x[i] * Rational(rows_[i][j]) * y[j];
    return s;
}

Integer GramMatrix::norm2(const Point& v) const {
    if (v.size() != dim()) throw DomainError("vector dimension does not match the lattice");
    Integer s = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) s += v[i] * rows_[i][j] * v[j];
    return s;
}

QuadForm form_from_gram(const GramMatrix& g) {
    if (g.dim() != 2) throw DomainError("form_from_gram needs a 2x2 Gram matrix");
    return {g(0, 0), 2 * g(0, 1), g(1, 1)};
}

std::pair<QuadForm, Integer> gauss_reduce(const QuadForm& f) {
    auto r = reduce(f);
    return {r.reduced, r.content};
}

RationalVector to_rational(const Point& v) {
    return RationalVector(v.begin(), v.end());
}

bool visit_shell(const GramMatrix& g, const RationalVector& center, const Rational& r2, const PointVisitor& visit) {
    return Enumerator(g, true, visit).run(center, r2);
}

bool visit_ball(const GramMatrix& g, const RationalVector& center, const Rational& r2_max, const PointVisitor& visit) {
    return Enumerator(g, false, visit).run(center, r2_max);
}

ShellResult enumerate_shell(const GramMatrix& g, const RationalVector& center, const Rational& r2) {
    return collect(g, center, r2, true);
}

ShellResult enumerate_ball(const GramMatrix& g, const RationalVector& center, const Rational& r2_max) {
    return collect(g, center, r2_max, false);
}

}  // namespace concyclic::lattice
