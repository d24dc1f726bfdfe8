#pragma once

/**
 * @file lattice.hpp
 * @brief Integral lattices given by Gram matrices, and exact enumeration of
 * lattice points on spheres and in balls with rational centers.
 *
 * All coordinates are with respect to the lattice basis, so the squared
 * length of a vector v is vᵀGv. Nothing here touches floating point.
 */

#include "concyclic/binary_form.hpp"
#include "concyclic/exactnum.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace concyclic::lattice {

using Point = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class GramMatrix {
public:
    /// Validates squareness, symmetry and positive definiteness (leading
    /// principal minors); throws DomainError otherwise.
    explicit GramMatrix(std::vector<std::vector<Integer>> rows);

    static GramMatrix identity(std::size_t dim);
    static GramMatrix from_form(const QuadForm& f);  // needs even b

    std::size_t dim() const { return rows_.size(); }
    const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<Integer>>& rows() const { return rows_; }

    /// Top-left k×k block (the Gram matrix of the first k basis vectors).
    GramMatrix leading(std::size_t k) const;
    GramMatrix scaled(const Integer& factor) const;

    Integer determinant() const;
    Rational bilinear(const RationalVector& x, const RationalVector& y) const;
    Rational norm2(const RationalVector& x) const { return bilinear(x, x); }
    Integer norm2(const Point& v) const;

    friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
    std::vector<std::vector<Integer>> rows_;
};

struct ShellResult {
    std::vector<Point> points;  // lexicographically sorted, no duplicates
    std::size_t count() const { return points.size(); }
    friend bool operator==(const ShellResult&, const ShellResult&) = default;
};

/// (G₁₁, 2·G₁₂, G₂₂); G must be 2×2.
QuadForm form_from_gram(const GramMatrix& g);

/// Reduced form equivalent to f, together with gcd(a, b, c).
std::pair<QuadForm, Integer> gauss_reduce(const QuadForm& f);

RationalVector to_rational(const Point& v);

/// Visitor for streaming enumeration; return false to stop early.
using PointVisitor = std::function<bool(const Point&)>;

/// Integer vectors v with Q(v - center) = r2 exactly. Points arrive in no
/// particular order. Returns false if the visitor stopped the walk.
bool visit_shell(const GramMatrix& g, const RationalVector& center, const Rational& r2,
                 const PointVisitor& visit);

/// Integer vectors v with Q(v - center) <= r2.
bool visit_ball(const GramMatrix& g, const RationalVector& center, const Rational& r2_max,
                const PointVisitor& visit);

/// Sorted shell: all v with Q(v - center) = r2.
ShellResult enumerate_shell(const GramMatrix& g, const RationalVector& center, const Rational& r2);

/// Sorted ball: all v with Q(v - center) <= r2_max.
ShellResult enumerate_ball(const GramMatrix& g, const RationalVector& center, const Rational& r2_max);

}  // namespace concyclic::lattice
