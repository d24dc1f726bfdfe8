#include "concyclic/certificate.hpp"

#include <doctest.h>

using namespace concyclic;
using cert::Json;

TEST_CASE("integer JSON encoding") {
    CHECK(cert::integer_json(73) == Json(73));
    CHECK(cert::integer_json(Integer("-9223372036854775808")).is_number());
    CHECK(cert::integer_json(Integer("9223372036854775808")) == Json("9223372036854775808"));
    CHECK(cert::integer_from_json(Json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
    CHECK(cert::integer_from_json(Json(-5)) == -5);
    CHECK_THROWS_AS(cert::integer_from_json(Json(1.5)), DomainError);
    CHECK_THROWS_AS(cert::integer_from_json(Json("12a")), DomainError);
}

TEST_CASE("circle certificate") {
    auto spec = circle::build_circle({1, 0, 1}, 2);
    auto j = cert::circle_certificate(spec, circle::enumerate_circle_points(spec));
    CHECK(j["kind"] == "circle");
    CHECK(j["prime"]["p"] == 73);
    CHECK(j["j"] == 3);
    CHECK(j["center"] == Json::array({"3/4", "0/1"}));
    CHECK(j["radius2"] == "73/16");
    CHECK(j["points"] == Json::parse("[[0,-2],[0,2]]"));
    CHECK(j["verified"] == true);
    CHECK(cert::reverify(j));

    // Tampering with the points or the radius is caught.
    auto bad = j;
    bad["points"] = Json::parse("[[0,2]]");
    CHECK_FALSE(cert::reverify(bad));
    bad = j;
    bad["radius2"] = "81/16";
    CHECK_FALSE(cert::reverify(bad));
}

TEST_CASE("large values are serialized as strings") {
    auto spec = circle::build_circle({3, 2, 5}, 8);
    auto j = cert::circle_certificate(spec, circle::enumerate_circle_points(spec));
    CHECK(j["verified"] == true);
    CHECK(j["prime"]["p"] == 8089);
    CHECK(j["radius2"].get<std::string>() == Rational(spec.pk, 48).str());
    bool saw_string = false;
    for (const auto& p : j["points"])
        for (const auto& x : p) saw_string |= x.is_string();
    CHECK_FALSE(saw_string);
}

TEST_CASE("sphere certificate") {
    lattice::GramMatrix g = lattice::GramMatrix::identity(3);
    auto spec = sphere::build_sphere(g, 2);
    auto j = cert::sphere_certificate(spec, g);
    CHECK(j["kind"] == "sphere");
    CHECK(j["dim"] == 3);
    CHECK(j["center"] == Json::array({"3/4", "0/1", "1/16"}));
    CHECK(j["radius2"] == "1169/256");
    CHECK(j["lift_trace"][0]["chosen_s"] == "1/16");
    CHECK(j["verified"] == true);
}

TEST_CASE("main1 report JSON") {
    auto j = cert::main1_report_json(quadorder::theorem_main1_check(3, 7, 2));
    CHECK(j["status"] == "pass");
    CHECK(j["counts"] == Json::array({2, 4, 6}));
}

TEST_CASE("SVG rendering") {
    auto count_on_circle = [](const std::string& svg) {
        std::size_t n = 0;
        for (auto pos = svg.find("class=\"on-circle\""); pos != std::string::npos;
             pos = svg.find("class=\"on-circle\"", pos + 1))
            ++n;
        return n;
    };
    auto make = [](lattice::QuadForm f, unsigned n) {
        auto spec = circle::build_circle(f, n);
        return cert::circle_certificate(spec, circle::enumerate_circle_points(spec));
    };
    auto z2 = cert::render_svg(make({1, 0, 1}, 2));
    CHECK(z2.find("<svg") != std::string::npos);
    CHECK(count_on_circle(z2) == 2);
    CHECK(count_on_circle(cert::render_svg(make({1, 0, 1}, 1))) == 1);
    auto hex = cert::render_svg(make({1, 1, 1}, 2));
    CHECK(count_on_circle(hex) == 2);
    CHECK(hex != z2);

    lattice::GramMatrix g = lattice::GramMatrix::identity(3);
    CHECK_THROWS_AS(cert::render_svg(cert::sphere_certificate(sphere::build_sphere(g, 1), g)), DomainError);
}
