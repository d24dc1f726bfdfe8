#include "concyclic/certificate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace concyclic::cert {

namespace {

Json point_json(const lattice::Point& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(integer_json(x));
    return arr;
}

Json points_json(const lattice::ShellResult& shell) {
    Json arr = Json::array();
    for (const auto& v : shell.points) arr.push_back(point_json(v));
    return arr;
}

Json rational_vector_json(const lattice::RationalVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

Json gram_json(const lattice::GramMatrix& g) {
    Json rows = Json::array();
    for (const auto& r : g.rows()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(integer_json(x));
        rows.push_back(row);
    }
    return rows;
}

Json form_json(const lattice::QuadForm& f) {
    return Json::array({integer_json(f.a), integer_json(f.b), integer_json(f.c)});
}

// The metric against which a certificate's center and radius2 are measured.
struct Metric {
    lattice::GramMatrix gram;  // integral, possibly 2× the true metric
    Integer scale;
    std::vector<std::vector<Rational>> true_gram;
};

Metric metric_of(const Json& cert) {
    if (cert.at("kind") == "circle") {
        const auto& rf = cert.at("realized_form");
        lattice::QuadForm f{integer_from_json(rf[0]), integer_from_json(rf[1]), integer_from_json(rf[2])};
        Rational half_b(f.b, Integer(2));
        std::vector<std::vector<Rational>> tg{{Rational(f.a), half_b}, {half_b, Rational(f.c)}};
        if (mpz_even_p(f.b.get_mpz_t())) return {lattice::GramMatrix::from_form(f), Integer(1), tg};
        return {lattice::GramMatrix({{2 * f.a, f.b}, {f.b, 2 * f.c}}), Integer(2), tg};
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : cert.at("input").at("gram")) {
        std::vector<Integer> row;
        for (const auto& x : r) row.push_back(integer_from_json(x));
        rows.push_back(row);
    }
    lattice::GramMatrix g(rows);
    std::vector<std::vector<Rational>> tg;
    for (const auto& r : rows) tg.emplace_back(r.begin(), r.end());
    return {g, Integer(1), tg};
}

lattice::RationalVector center_of(const Json& cert) {
    lattice::RationalVector c;
    for (const auto& x : cert.at("center")) c.push_back(Rational::parse(x.get<std::string>()));
    return c;
}

std::vector<lattice::Point> points_of(const Json& cert) {
    std::vector<lattice::Point> out;
    for (const auto& p : cert.at("points")) {
        lattice::Point v;
        for (const auto& x : p) v.push_back(integer_from_json(x));
        out.push_back(v);
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

Json integer_json(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_string()) {
        Integer v;
        const auto& text = j.get_ref<const std::string&>();
        if (text.empty() || v.set_str(text, 10) != 0) throw DomainError("not an integer: \"" + text + "\"");
        return v;
    }
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    throw DomainError("expected an integer in JSON, got " + j.dump());
}

Json admissible_prime_json(const circle::AdmissiblePrime& ap) {
    Json j;
    j["p"] = integer_json(ap.p);
    j["x1"] = integer_json(ap.x1);
    j["y1"] = integer_json(ap.y1);
    return j;
}

Json circle_certificate(const circle::CircleSpec& spec, const lattice::ShellResult& points) {
    const lattice::QuadForm realized{spec.form.a, -spec.form.b, spec.form.c};
    Json j;
    j["kind"] = "circle";
    j["input"] = Json{{"form", form_json(spec.form)}};
    j["realized_form"] = form_json(realized);
    j["n_points"] = spec.n_points;
    j["k"] = spec.k;
    j["prime"] = admissible_prime_json(spec.prime);
    j["j"] = integer_json(spec.j);
    j["center"] = rational_vector_json(spec.center);
    j["radius2"] = spec.radius2.str();
    j["points"] = points_json(points);
    j["verified"] = false;
    j["verified"] = points.count() == spec.n_points && reverify(j);
    return j;
}

Json sphere_certificate(const sphere::SphereSpec& spec, const lattice::GramMatrix& input) {
    Json j;
    j["kind"] = "sphere";
    j["input"] = Json{{"gram", gram_json(input)}};
    j["dim"] = input.dim();
    const unsigned n_points = static_cast<unsigned>(spec.points.count());
    j["n_points"] = n_points;
    if (spec.base) {
        j["k"] = spec.base->k;
        j["prime"] = admissible_prime_json(spec.base->prime);
        j["j"] = integer_json(spec.base->j);
    }
    j["center"] = rational_vector_json(spec.center);
    j["radius2"] = spec.radius2.str();
    j["points"] = points_json(spec.points);
    Json trace = Json::array();
    for (const auto& step : spec.lift_trace) {
        Json s;
        s["stage"] = step.stage;
        s["w"] = rational_vector_json(step.w);
        s["w_norm2"] = step.w_norm2.str();
        Json excluded = Json::array();
        for (const auto& e : step.excluded) excluded.push_back(e.str());
        s["excluded"] = excluded;
        Json witnesses = Json::array();
        for (const auto& v : step.excluded_by) witnesses.push_back(point_json(v));
        s["excluded_by"] = witnesses;
        s["chosen_s"] = step.chosen_s.str();
        trace.push_back(s);
    }
    j["lift_trace"] = trace;
    j["verified"] = false;
    j["verified"] = (!spec.base || spec.base->n_points == n_points) && reverify(j);
    return j;
}

bool reverify(const Json& cert) {
    auto m = metric_of(cert);
    auto center = center_of(cert);
    Rational r2 = Rational::parse(cert.at("radius2").get<std::string>()) * Rational(m.scale);
    auto listed = points_of(cert);
    for (const auto& v : listed) {
        auto diff = lattice::to_rational(v);
        if (diff.size() != center.size()) return false;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= center[i];
        if (m.gram.norm2(diff) != r2) return false;
    }
    auto shell = lattice::enumerate_shell(m.gram, center, r2);
    return shell.points == listed;
}

Json main1_report_json(const quadorder::Main1Report& rep) {
    using Status = quadorder::Main1Report::Status;
    Json j;
    j["n"] = integer_json(rep.params.n);
    j["d"] = integer_json(rep.params.d);
    j["d_K"] = integer_json(rep.params.dk);
    j["f"] = integer_json(rep.params.f);
    j["status"] = rep.status == Status::Pass ? "pass" : rep.status == Status::Fail ? "fail" : "hypotheses not met";
    if (rep.witness) j["witness"] = Json::array({integer_json(rep.witness->x), integer_json(rep.witness->y)});
    j["kronecker"] = rep.kronecker;
    j["gcd_p_f"] = integer_json(rep.gcd_pf);
    Json counts = Json::array();
    for (const auto& c : rep.counts) counts.push_back(integer_json(c));
    j["counts"] = counts;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (!rep.failures.empty()) j["failures"] = rep.failures;
    return j;
}

std::string render_svg(const Json& cert) {
    auto m = metric_of(cert);
    if (m.gram.dim() != 2) throw DomainError("SVG output needs a 2-dimensional certificate");
    auto center = center_of(cert);
    Rational r2 = Rational::parse(cert.at("radius2").get<std::string>());
    auto on_circle = points_of(cert);

    // Cholesky embedding of the true metric: e1 = (√A, 0), e2 = (B/√A, √(C - B²/A)).
    const double ga = m.true_gram[0][0].raw().get_d();
    const double gb = m.true_gram[0][1].raw().get_d();
    const double gc = m.true_gram[1][1].raw().get_d();
    const double e1x = std::sqrt(ga), e2x = gb / e1x, e2y = std::sqrt(gc - e2x * e2x);
    auto embed = [&](double x, double y) { return std::pair{x * e1x + y * e2x, y * e2y}; };

    const double radius = std::sqrt(r2.raw().get_d());
    const auto [cx, cy] = embed(center[0].raw().get_d(), center[1].raw().get_d());
    const double half = 1.5 * std::max(radius, 0.5);
    constexpr double size = 512.0;
    const double scale = size / (2 * half);
    auto px = [&](double x) { return (x - cx + half) * scale; };
    auto py = [&](double y) { return (cy + half - y) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n";
    out += "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
    out += "<circle cx=\"" + fmt(px(cx)) + "\" cy=\"" + fmt(py(cy)) + "\" r=\"" + fmt(radius * scale) +
           "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.5\"/>\n";

    // Background lattice points, skipped when the window would hold too many.
    const double det = ga * gc - gb * gb;
    const double expected = (2 * half) * (2 * half) / std::sqrt(det);
    if (expected <= 20000) {
        Rational window2 = r2 * Rational(Integer(9), Integer(2));  // (1.5·√2)²·r²
        if (window2 < Rational(Integer(9), Integer(8))) window2 = Rational(Integer(9), Integer(8));
        auto ball = lattice::enumerate_ball(m.gram, center, window2 * Rational(m.scale));
        for (const auto& v : ball.points) {
            auto [x, y] = embed(v[0].get_d(), v[1].get_d());
            if (std::abs(x - cx) > half || std::abs(y - cy) > half) continue;
            out += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"1.5\" fill=\"#999999\"/>\n";
        }
    }
    for (const auto& v : on_circle) {
        auto [x, y] = embed(v[0].get_d(), v[1].get_d());
        out += "<circle class=\"on-circle\" cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
               "\" r=\"4\" fill=\"#d62728\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace concyclic::cert
