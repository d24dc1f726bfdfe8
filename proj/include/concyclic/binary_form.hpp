#pragma once

// Positive definite binary quadratic forms a·x² + b·x·y + c·y²: Gauss
// reduction and exact solution of F(x, y) = M.

#include "concyclic/exactnum.hpp"

#include <array>
#include <ostream>
#include <vector>

namespace concyclic::lattice {

struct QuadForm {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    /// n = 4ac - b², the positive counterpart of the discriminant.
    Integer n() const { return 4 * a * c - b * b; }
    Integer operator()(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }
    Integer content() const { return num::gcd(num::gcd(a, b), c); }
    bool positive_definite() const { return a > 0 && discriminant() < 0; }

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
    friend std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
        return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
    }
};

/// Throws DomainError unless a > 0 and b² - 4ac < 0.
QuadForm make_form(const Integer& a, const Integer& b, const Integer& c);

/// Integer 2×2 matrix acting on column vectors (x, y), row-major.
struct Mat2 {
    Integer m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Integer det() const { return m00 * m11 - m01 * m10; }
    /// Inverse of a determinant-one matrix.
    Mat2 inverse_sl2() const { return {m11, -m01, -m10, m00}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// The form F∘U, i.e. (x, y) ↦ F(U·(x, y)).
QuadForm transform(const QuadForm& f, const Mat2& u);

struct Reduction {
    QuadForm reduced;
    Integer content;
    /// Proper (det 1) change of basis with transform(input, basis) == reduced.
    Mat2 basis;
};

/// Gauss reduction to the unique reduced form |b| <= a <= c with b >= 0
/// when |b| = a or a = c. The reduced form keeps the input's content.
Reduction reduce(const QuadForm& f);

/// Proper automorphs of a positive definite form (2, 4 or 6 of them).
std::vector<Mat2> automorphs(const QuadForm& f);

/// All (x, y) with F(x, y) = M, sorted. F must be positive definite.
/// The optional factorization of M skips the factoring step.
std::vector<std::array<Integer, 2>> represent(const QuadForm& f, const Integer& m);
std::vector<std::array<Integer, 2>> represent(const QuadForm& f, const Integer& m,
                                              const Factorization& m_factors);

}  // namespace concyclic::lattice
