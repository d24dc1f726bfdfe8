#pragma once

/**
 * @file concyclic2d.hpp
 * @brief Circles through exactly n points of a 2-dimensional lattice.
 *
 * For the form a·x² + b·x·y + c·y² (n = 4ac - b²) the construction picks a
 * prime p = x1² + n·y1² with y1 ≡ 0 (mod 4a), sets k = n_points - 1 and
 * j ≡ x1^k (mod 4a), and uses the circle |4√a·z - j|² = p^k where the
 * lattice is embedded as z = √a·x + α·y, α = (-b + √-n)/(2√a).
 *
 * In lattice coordinates a point (x, y) is on the circle iff
 *
 *     (4ax - 2by - j)² + 4n·y² = p^k,
 *
 * the center is (j/4a, 0) and the squared radius is p^k/16a, measured with
 * the realized form a·x² - b·x·y + c·y².
 */

#include "concyclic/binary_form.hpp"
#include "concyclic/lattice.hpp"
#include "concyclic/quadorder.hpp"

#include <string>
#include <vector>

namespace concyclic::circle {

using lattice::QuadForm;

/// Default upper limit for the prime search.
inline const Integer kDefaultPrimeBound = Integer("1000000000000");

struct AdmissiblePrime {
    Integer p, x1, y1;  // p = x1² + n·y1², y1 = 4a·t
    Integer n, a;
    Integer t;
};

/// Smallest prime p = x² + n·(4at)², t >= 1; ties broken by t, then x.
/// Throws SearchBudgetExceeded past prime_bound, ConsistencyError if the
/// result breaks any invariant.
AdmissiblePrime find_admissible_prime(const Integer& n, const Integer& a,
                                      const Integer& prime_bound = kDefaultPrimeBound);

/// Re-checks every invariant of an admissible prime; throws ConsistencyError.
void certify(const AdmissiblePrime& ap);

/// j in [1, 4a-1] with j ≡ x1^k (mod 4a).
Integer compute_j(const Integer& x1, const Integer& a, unsigned k);

struct CircleSpec {
    QuadForm form;
    unsigned n_points = 0;
    unsigned k = 0;
    AdmissiblePrime prime;
    Integer j;
    lattice::RationalVector center;  // (j/4a, 0)
    Rational radius2;                // p^k / 16a
    Integer pk;                      // p^k
};

CircleSpec build_circle(const QuadForm& form, unsigned n_points,
                        const Integer& prime_bound = kDefaultPrimeBound);

/// Points solving the circle equation, sorted; no count check.
lattice::ShellResult solve_circle_equation(const CircleSpec& spec);

/// Same, but throws ConsistencyError unless exactly n_points were found.
lattice::ShellResult enumerate_circle_points(const CircleSpec& spec);

/// Integral Gram matrix of the realized form (a, -b, c), doubled when b is
/// odd, together with the matching squared radius.
struct RealizedShell {
    lattice::GramMatrix gram;
    Rational radius2;
    Integer scale;  // 1 or 2
};
RealizedShell realized_shell(const CircleSpec& spec);

/// Recomputes the circle with the generic Gram-shell enumerator.
lattice::ShellResult gram_shell_points(const CircleSpec& spec);

/// φ(x, y) = (4ax - 2by - j) + 2y·√-n.
quadorder::OrderElement phi(const CircleSpec& spec, const lattice::Point& v);

/// The inverse (X + bY + j)/4a, Y/2; throws ConsistencyError when not integral.
lattice::Point phi_inverse(const CircleSpec& spec, const quadorder::OrderElement& z);

struct BijectionReport {
    std::vector<lattice::Point> points;
    std::vector<quadorder::OrderElement> images;  // φ(points[i])
    std::vector<quadorder::OrderElement> a_set;   // all elements of norm p^k
    std::vector<quadorder::OrderElement> ahat;    // those with X + Y ≡ -j (mod 4a)
};

/// Verifies that φ maps the circle points bijectively onto Ǎ, computed
/// independently from the generator, and that the inverse recovers each
/// point. Throws ConsistencyError carrying the witnesses on any mismatch.
BijectionReport bijection_check(const CircleSpec& spec);

}  // namespace concyclic::circle
