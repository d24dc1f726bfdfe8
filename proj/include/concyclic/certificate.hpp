#pragma once

// JSON certificates and SVG plots for constructed circles and spheres.
//
// Integers are JSON numbers when they fit in a signed 64-bit value and
// decimal strings otherwise; rationals are always "num/den" strings.
// Keys are emitted in a fixed order so equal inputs give identical bytes.

#include "concyclic/concyclic2d.hpp"
#include "concyclic/quadorder.hpp"
#include "concyclic/spherelift.hpp"

#include <json.hpp>

#include <string>

namespace concyclic::cert {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json circle_certificate(const circle::CircleSpec& spec, const lattice::ShellResult& points);
Json sphere_certificate(const sphere::SphereSpec& spec, const lattice::GramMatrix& input);

/// Recomputes the point set from the certificate's own metric, center and
/// radius2; true iff it matches "points" exactly.
bool reverify(const Json& certificate);

Json main1_report_json(const quadorder::Main1Report& rep);
Json admissible_prime_json(const circle::AdmissiblePrime& ap);

/// SVG 1.1 drawing of a 2-dimensional certificate. Floating point is used
/// here for pixel placement only. Throws DomainError for other dimensions.
std::string render_svg(const Json& certificate);

}  // namespace concyclic::cert
