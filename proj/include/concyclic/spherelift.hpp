#pragma once

/**
 * @file spherelift.hpp
 * @brief Spheres through exactly n points of a d-dimensional integral lattice.
 *
 * A circle is built on the sublattice spanned by b1, b2 and then pushed up
 * one basis vector at a time. At stage i+1 the center moves along w, the
 * component of b_{i+1} orthogonal to span(b1..bi), by s·w, and the squared
 * radius grows by s²·|w|². Every old point stays on the sphere; a lattice
 * point v with last coordinate τ != 0 lands on it only for
 *
 *     s = (Q(v - c) - r²) / (2τ·|w|²),
 *
 * so all but finitely many s keep the point set unchanged. Candidates are
 * s = 1/2, 1/4, ... and the first one that admits no new point is taken.
 */

#include "concyclic/concyclic2d.hpp"
#include "concyclic/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concyclic::sphere {

using lattice::GramMatrix;
using lattice::Point;
using lattice::RationalVector;

struct OrthogonalComponent {
    RationalVector w;  // basis coordinates, full dimension
    Rational w_norm2;
};

/// For i = 3..d, the part of b_i orthogonal to span(b1..b_{i-1}).
std::vector<OrthogonalComponent> gram_schmidt_data(const GramMatrix& g);

struct LiftStep {
    unsigned stage = 0;  // dimension after the lift
    RationalVector w;
    Rational w_norm2;
    std::vector<Rational> excluded;      // rejected candidates, in trial order
    std::vector<Point> excluded_by;      // one witness point per rejected candidate
    Rational chosen_s;
};

struct SphereSpec {
    GramMatrix gram;
    RationalVector center;
    Rational radius2;
    lattice::ShellResult points;
    std::vector<LiftStep> lift_trace;
    std::optional<circle::CircleSpec> base;
};

/// Parameter value at which v would join the lifted sphere, or nothing when
/// v has no component along w (its last coordinate is zero).
std::optional<Rational> exclusion_value(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc,
                                        const Point& v);

/// Squared radius of a ball around the previous center that contains every
/// lattice point of any lifted sphere with 0 < s <= 1.
Rational candidate_ball_radius2(const Rational& r2, const Rational& w_norm2);

/// Every s in (0, 1] at which some point of stage i+1 joins the sphere,
/// found by ball enumeration. Sorted. Only practical for small radii.
std::vector<Rational> exclusion_set(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc);

/// Lifts prev (stage i) to stage i+1 of g. Throws ConsistencyError if the
/// lifted sphere does not hold exactly the previous points.
SphereSpec lift_once(const GramMatrix& g, const SphereSpec& prev, const OrthogonalComponent& oc);

SphereSpec build_sphere(const GramMatrix& g, unsigned n_points,
                        const Integer& prime_bound = circle::kDefaultPrimeBound);

struct RectangularModel {
    GramMatrix gram;  // diag(a², ab)
    Integer a, b;     // ratio = b/a in lowest terms
    std::string similarity;
};

/// Integral model of the rectangular lattice with (α/β)² = ratio.
RectangularModel rectangular_integral_model(const Rational& ratio);

/// ℤ³ points on (4x-1)² + (4y)² + (4z-√2)² = 17^k + 2, by exact arithmetic
/// in ℚ(√2): the √2-part forces z = 0.
std::vector<Point> sqrt2_offset_sphere_points(unsigned k);

}  // namespace concyclic::sphere
