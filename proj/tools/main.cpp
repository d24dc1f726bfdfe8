// concyclic: build and verify circles/spheres through exactly n lattice points.
//
// Exit status: 0 verified success, 1 invalid input, 2 search budget
// exceeded, 3 internal-consistency or theorem violation.

#include "concyclic/certificate.hpp"
#include "concyclic/concyclic2d.hpp"
#include "concyclic/quadorder.hpp"
#include "concyclic/spherelift.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace concyclic;
using cert::Json;

enum Exit { kOk = 0, kInvalid = 1, kBudget = 2, kViolation = 3 };

Integer parse_integer(const std::string& text, const std::string& what) {
    Integer v;
    if (text.empty() || v.set_str(text, 10) != 0) throw DomainError("invalid integer for " + what + ": '" + text + "'");
    return v;
}

lattice::QuadForm parse_form(const std::string& text) {
    std::vector<Integer> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_integer(item, "--form"));
    if (parts.size() != 3) throw DomainError("--form expects a,b,c");
    return lattice::make_form(parts[0], parts[1], parts[2]);
}

lattice::GramMatrix read_gram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open Gram file " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw DomainError("Gram file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("dim") || !doc.contains("entries")) throw DomainError("Gram file needs 'dim' and 'entries'");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : doc["entries"]) {
        std::vector<Integer> row;
        for (const auto& x : r) row.push_back(cert::integer_from_json(x));
        rows.push_back(row);
    }
    lattice::GramMatrix g(rows);
    if (doc["dim"].get<std::size_t>() != g.dim()) throw DomainError("Gram file 'dim' does not match 'entries'");
    return g;
}

int emit(const Json& j) {
    std::cout << j.dump(2) << "\n";
    if (j.contains("verified") && !j["verified"].get<bool>()) {
        std::cerr << "certificate failed re-verification\n";
        return kViolation;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circles and spheres through exactly n points of an integral lattice"};
    app.require_subcommand(1);

    std::string form_text, gram_path, svg_path, prime_bound_text = circle::kDefaultPrimeBound.get_str();
    unsigned n_points = 0;

    auto* circle_cmd = app.add_subcommand("circle", "circle through exactly N points of a 2D lattice");
    auto* form_opt = circle_cmd->add_option("--form", form_text, "form coefficients a,b,c");
    auto* gram_opt = circle_cmd->add_option("--gram", gram_path, "JSON Gram matrix file {\"dim\":2,\"entries\":[[..]]}");
    form_opt->excludes(gram_opt);
    circle_cmd->add_option("--n-points", n_points, "number of lattice points on the circle")->required();
    circle_cmd->add_option("--svg", svg_path, "also write an SVG plot here");
    circle_cmd->add_option("--prime-bound", prime_bound_text, "give up searching past this prime");

    auto* sphere_cmd = app.add_subcommand("sphere", "sphere through exactly N points of a lattice");
    sphere_cmd->add_option("--gram", gram_path, "JSON Gram matrix file")->required();
    sphere_cmd->add_option("--n-points", n_points, "number of lattice points on the sphere")->required();
    sphere_cmd->add_option("--prime-bound", prime_bound_text, "give up searching past this prime");

    std::string n_text, p_text, a_text, dk_text;
    unsigned k = 0, kmax = 0;
    auto* count_cmd = app.add_subcommand("count-reps", "count (x,y) with x^2 + n y^2 = p^k by exhaustive scan");
    count_cmd->add_option("--n", n_text)->required();
    count_cmd->add_option("--p", p_text)->required();
    count_cmd->add_option("--k", k)->required();

    auto* prime_cmd = app.add_subcommand("prime-search", "smallest prime x^2 + n (4a t)^2");
    prime_cmd->add_option("--n", n_text)->required();
    prime_cmd->add_option("--a", a_text)->required();
    prime_cmd->add_option("--prime-bound", prime_bound_text);

    auto* split_cmd = app.add_subcommand("split", "splitting type of p in the field of discriminant d_K");
    split_cmd->add_option("--dk", dk_text)->required();
    split_cmd->add_option("--p", p_text)->required();

    auto* main1_cmd = app.add_subcommand("check-main1", "check the 2(k+1) count of norm-p^k elements of Z[sqrt(-n)]");
    main1_cmd->add_option("--n", n_text)->required();
    main1_cmd->add_option("--p", p_text)->required();
    main1_cmd->add_option("--kmax", kmax)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }

    try {
        const Integer prime_bound = parse_integer(prime_bound_text, "--prime-bound");
        if (circle_cmd->parsed()) {
            if (form_text.empty() && gram_path.empty()) throw DomainError("circle needs --form or --gram");
            circle::CircleSpec spec;
            Json input;
            if (!form_text.empty()) {
                auto form = parse_form(form_text);
                spec = circle::build_circle(form, n_points, prime_bound);
            } else {
                auto g = read_gram(gram_path);
                if (g.dim() != 2) throw DomainError("circle needs a 2x2 Gram matrix; use 'sphere' for higher dimensions");
                // Mirror b so that points come out in the Gram matrix's own basis.
                spec = circle::build_circle({g(0, 0), -2 * g(0, 1), g(1, 1)}, n_points, prime_bound);
                input = Json{{"gram", Json::array({Json::array({cert::integer_json(g(0, 0)), cert::integer_json(g(0, 1))}),
                                                   Json::array({cert::integer_json(g(1, 0)), cert::integer_json(g(1, 1))})})}};
            }
            auto points = circle::enumerate_circle_points(spec);
            circle::bijection_check(spec);
            auto j = cert::circle_certificate(spec, points);
            if (!input.is_null()) j["input"] = input;
            if (!svg_path.empty()) {
                std::ofstream svg(svg_path);
                if (!svg) throw DomainError("cannot write " + svg_path);
                svg << cert::render_svg(j);
            }
            return emit(j);
        }
        if (sphere_cmd->parsed()) {
            auto g = read_gram(gram_path);
            auto spec = sphere::build_sphere(g, n_points, prime_bound);
            return emit(cert::sphere_certificate(spec, g));
        }
        if (count_cmd->parsed()) {
            auto count = quadorder::brute_count_reps(parse_integer(n_text, "--n"), parse_integer(p_text, "--p"), k);
            return emit(Json{{"count", cert::integer_json(count)}});
        }
        if (prime_cmd->parsed()) {
            auto ap = circle::find_admissible_prime(parse_integer(n_text, "--n"), parse_integer(a_text, "--a"),
                                                    prime_bound);
            Json j;
            j["n"] = cert::integer_json(ap.n);
            j["a"] = cert::integer_json(ap.a);
            j["p"] = cert::integer_json(ap.p);
            j["x1"] = cert::integer_json(ap.x1);
            j["y1"] = cert::integer_json(ap.y1);
            j["t"] = cert::integer_json(ap.t);
            return emit(j);
        }
        if (split_cmd->parsed()) {
            auto type = quadorder::splitting_type(parse_integer(dk_text, "--dk"), parse_integer(p_text, "--p"));
            return emit(Json{{"type", quadorder::to_string(type)}});
        }
        if (main1_cmd->parsed()) {
            auto rep = quadorder::theorem_main1_check(parse_integer(n_text, "--n"), parse_integer(p_text, "--p"), kmax);
            emit(cert::main1_report_json(rep));
            switch (rep.status) {
                case quadorder::Main1Report::Status::Pass: return kOk;
                case quadorder::Main1Report::Status::HypothesesNotMet: return kInvalid;
                case quadorder::Main1Report::Status::Fail: return kViolation;
            }
        }
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "search budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency violation: " << e.what() << "\n";
        return kViolation;
    }
    return kInvalid;
}
