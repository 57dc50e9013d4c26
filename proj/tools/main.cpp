// Command line front end: builds symmetric superpairs, emits restricted root
// data, radial operators, and invariant bases, and runs the degree-by-degree
// restriction verification. Every invocation writes exactly one JSON document
// to standard output; byte output is deterministic.
//
// Exit codes: 0 success, 2 usage or invalid parameters, 3 failed precondition
// (unreadable or invalid pair file, pair not of even type, empty root list),
// 4 verification mismatch.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "sympair/invariants.hpp"
#include "sympair/io.hpp"
#include "sympair/pair.hpp"
#include "sympair/poly.hpp"
#include "sympair/radial.hpp"
#include "sympair/roots.hpp"

namespace {

using namespace sympair;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitMismatch = 4;

// Guard against absurd coefficient indices that would only burn memory.
constexpr std::size_t kMaxCoeffIndex = 512;

void emit(const Json& j) { std::cout << dump_document(j); }

// Small scalar results print compactly on one line.
void emit_value(const Json& j) { std::cout << j.dump() << "\n"; }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return Json::parse(in);
}

SymmetricSuperpair load_pair(const std::string& path) { return pair_from_json(load_json(path)); }

/// Parses "key=value" tokens into a family parameter list, rejecting
/// duplicates, unknown keys, and anything that is not a plain integer.
std::map<std::string, long> parse_params(const std::vector<std::string>& tokens,
                                         const std::vector<std::string>& keys) {
    std::map<std::string, long> out;
    for (const auto& tok : tokens) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
            throw Error("expected key=value, got \"" + tok + "\"");
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw Error("unknown parameter \"" + key + "\"");
        if (out.count(key)) throw Error("duplicate parameter \"" + key + "\"");
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(val, &used);
        } catch (const std::exception&) {
            throw Error("parameter \"" + key + "\" is not an integer");
        }
        if (used != val.size()) throw Error("parameter \"" + key + "\" is not an integer");
        if (v < 0) throw Error("parameter \"" + key + "\" must be non-negative");
        out[key] = v;
    }
    for (const auto& key : keys)
        if (!out.count(key)) throw Error("missing parameter \"" + key + "\"");
    return out;
}

struct BuildOptions {
    std::string family;
    std::vector<std::string> params;
    std::string out;
};

int run_build(const BuildOptions& opt) {
    SymmetricSuperpair sp;
    try {
        if (opt.family == "group-gl") {
            auto p = parse_params(opt.params, {"p", "q"});
            sp = group_gl_pair(p["p"], p["q"]);
        } else if (opt.family == "group-osp") {
            auto p = parse_params(opt.params, {"m", "n"});
            sp = group_osp_pair(p["m"], p["n"]);
        } else if (opt.family == "gl-block") {
            auto p = parse_params(opt.params, {"p", "q", "r", "s"});
            sp = gl_block_pair(p["p"], p["q"], p["r"], p["s"]);
        } else if (opt.family == "osp-block") {
            auto p = parse_params(opt.params, {"p", "q", "r", "s"});
            sp = osp_block_pair(p["p"], p["q"], p["r"], p["s"]);
        } else {
            auto p = parse_params(opt.params, {"q"});
            sp = c_special_pair(p["q"]);
        }
    } catch (const Error& e) {
        std::cerr << "error: invalid parameters for family " << opt.family << ": " << e.what()
                  << "\n";
        return kExitUsage;
    }

    const bool even_type = is_even_type(sp);
    if (!even_type) std::cerr << "warning: pair is not even type\n";

    std::ofstream out(opt.out);
    if (!out) {
        std::cerr << "error: cannot write file: " << opt.out << "\n";
        return kExitPrecondition;
    }
    out << dump_document(pair_to_json(sp));

    Json status;
    status["written"] = opt.out;
    status["pair"] = pair_label(sp);
    status["dim"] = sp.g.dim();
    status["even_type"] = even_type;
    emit(status);
    return 0;
}

int run_roots(const std::string& file) {
    SymmetricSuperpair sp = load_pair(file);
    emit(root_datum_to_json(restricted_roots(sp)));
    return 0;
}

struct InvariantOptions {
    std::string file;
    std::size_t degree = 2;
};

int run_invariants(const InvariantOptions& opt) {
    SymmetricSuperpair sp = load_pair(opt.file);
    if (!is_even_type(sp)) throw NotEvenType("pair is not even type");
    RootDatum rd = restricted_roots(sp);
    PolyFrame f = make_frame(sp, rd);

    auto basis = monomials_of_degree(f.even_n, f.odd_n, opt.degree);
    Subspace inv = invariants_degree(f, opt.degree);

    Json j;
    j["pair"] = pair_label(sp);
    j["degree"] = opt.degree;
    j["dim"] = inv.dim();
    Json polys = Json::array();
    for (std::size_t i = 0; i < inv.dim(); ++i)
        polys.push_back(
            poly_to_json(poly_from_coords(Side::duals, f.even_n, basis, inv.basis_vector(i))));
    j["basis"] = std::move(polys);
    emit(j);
    return 0;
}

struct VerifyOptions {
    std::string file;
    std::size_t max_degree = 6;
    std::size_t seed_points = 3;
};

/// Evaluation cross-check behind --seed-points: at deterministic super-regular
/// points z, pairing an invariant against a monomial directly must agree with
/// pairing it against the monomial's even projection. Checked for invariants
/// of degree <= 3 against all directions of degree <= 2.
bool crosscheck_projection(const PolyFrame& f, std::size_t max_degree, std::size_t points) {
    if (points == 0) return true;
    auto pts = super_regular_points(f.rd, points);
    auto monos = monomials_up_to(f.even_n, f.odd_n, 2);
    bool ok = true;
    for (std::size_t d = 1; d <= std::min<std::size_t>(3, max_degree); ++d) {
        auto basis = monomials_of_degree(f.even_n, f.odd_n, d);
        Subspace inv = invariants_degree(f, d);
        for (std::size_t i = 0; i < inv.dim(); ++i) {
            SuperPoly p = poly_from_coords(Side::duals, f.even_n, basis, inv.basis_vector(i));
            for (const auto& pt : pts) {
                std::vector<Rat> z = f.sp.cartan_lift(pt);
                for (const auto& m : monos) {
                    SuperPoly dir = poly_term(Side::vectors, f.even_n, m, Rat(1));
                    if (realize(f, p, dir, z) != realize(f, p, gamma_z(f, z, dir), z)) {
                        std::cerr << "error: projection cross-check failed in degree " << d
                                  << "\n";
                        ok = false;
                    }
                }
            }
        }
    }
    return ok;
}

int run_verify(const VerifyOptions& opt) {
    SymmetricSuperpair sp = load_pair(opt.file);
    if (!is_even_type(sp)) throw NotEvenType("pair is not even type");
    RootDatum rd = restricted_roots(sp);
    PolyFrame f = make_frame(sp, rd);

    ChevalleyReport rep = verify_chevalley(f, opt.max_degree);
    bool projections_ok = crosscheck_projection(f, opt.max_degree, opt.seed_points);
    emit(report_to_json(rep));
    if (!rep.ok) {
        std::cerr << "error: restriction image and predicted subspace differ\n";
        return kExitMismatch;
    }
    if (!projections_ok) return kExitMismatch;
    return 0;
}

struct CoeffOptions {
    std::vector<std::size_t> b, a;
    std::size_t bessel = 0;
    bool has_bessel = false;
};

int run_coeffs(const CoeffOptions& opt) {
    const int given = (opt.b.empty() ? 0 : 1) + (opt.a.empty() ? 0 : 1) + (opt.has_bessel ? 1 : 0);
    if (given != 1) {
        std::cerr << "error: pass exactly one of --b, --a, --bessel\n";
        return kExitUsage;
    }
    auto bounded = [](std::size_t v) { return v <= kMaxCoeffIndex; };
    if (!opt.b.empty()) {
        if (!bounded(opt.b[0]) || !bounded(opt.b[1])) {
            std::cerr << "error: coefficient index out of range\n";
            return kExitUsage;
        }
        emit_value(Json(rat_str(coeff_b(opt.b[0], opt.b[1]))));
    } else if (!opt.a.empty()) {
        if (!bounded(opt.a[0]) || !bounded(opt.a[1])) {
            std::cerr << "error: coefficient index out of range\n";
            return kExitUsage;
        }
        emit_value(Json(rat_str(coeff_a(opt.a[0], opt.a[1]))));
    } else {
        if (!bounded(opt.bessel)) {
            std::cerr << "error: coefficient index out of range\n";
            return kExitUsage;
        }
        Json arr = Json::array();
        for (const auto& c : bessel_polynomial(opt.bessel)) arr.push_back(rat_str(c));
        emit_value(arr);
    }
    return 0;
}

struct RadialOptions {
    std::string file;
    std::size_t order = 1;
    std::size_t root = 0;
};

int run_radial(const RadialOptions& opt) {
    SymmetricSuperpair sp = load_pair(opt.file);
    RootDatum rd = restricted_roots(sp);
    auto sigma = rd.sigma_bar_positive();
    if (sigma.empty()) throw Error("pair has no odd restricted roots outside the even system");
    if (opt.root >= sigma.size()) {
        std::cerr << "error: root index " << opt.root << " out of range (have " << sigma.size()
                  << ")\n";
        return kExitUsage;
    }
    if (opt.order == 0) {
        std::cerr << "error: --order must be at least 1\n";
        return kExitUsage;
    }
    emit(radial_to_json(radial_operator(*sigma[opt.root], opt.order)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic tools for reductive symmetric superpairs"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build = app.add_subcommand("build", "Construct a pair and write it as JSON");
    build->add_option("--family", build_opt.family, "Pair family")
        ->required()
        ->check(CLI::IsMember(
            {"group-gl", "group-osp", "gl-block", "osp-block", "c-special"}));
    build->add_option("--params", build_opt.params, "Family parameters as key=value")
        ->delimiter(',');
    build->add_option("--out", build_opt.out, "Output pair file")->required();

    std::string roots_file;
    auto* roots = app.add_subcommand("roots", "Emit the restricted root datum of a pair");
    roots->add_option("pairfile", roots_file, "Pair JSON file")->required();

    InvariantOptions inv_opt;
    auto* invariants = app.add_subcommand("invariants", "Emit a basis of invariants in one degree");
    invariants->add_option("pairfile", inv_opt.file, "Pair JSON file")->required();
    invariants->add_option("--degree", inv_opt.degree, "Polynomial degree")->required();

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Verify restriction images degree by degree");
    verify->add_option("pairfile", verify_opt.file, "Pair JSON file")->required();
    verify->add_option("--max-degree", verify_opt.max_degree, "Largest degree to check");
    verify->add_option("--seed-points", verify_opt.seed_points,
                       "Number of deterministic super-regular evaluation points");

    CoeffOptions coeff_opt;
    auto* coeffs = app.add_subcommand("coeffs", "Query coefficient tables");
    coeffs->add_option("--b", coeff_opt.b, "Triangle entry b(s, l)")->expected(2);
    coeffs->add_option("--a", coeff_opt.a, "Derived entry a(j, k)")->expected(2);
    auto* bes = coeffs->add_option("--bessel", coeff_opt.bessel,
                                   "Coefficients of the degree-n reverse Bessel polynomial");

    RadialOptions radial_opt;
    auto* radial = app.add_subcommand("radial", "Emit a radial operator for one restricted root");
    radial->add_option("pairfile", radial_opt.file, "Pair JSON file")->required();
    radial->add_option("--order", radial_opt.order, "Operator order k")->required();
    radial->add_option("--root", radial_opt.root, "Index into the positive odd root list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    coeff_opt.has_bessel = bes->count() > 0;

    try {
        if (app.got_subcommand(build)) return run_build(build_opt);
        if (app.got_subcommand(roots)) return run_roots(roots_file);
        if (app.got_subcommand(invariants)) return run_invariants(inv_opt);
        if (app.got_subcommand(verify)) return run_verify(verify_opt);
        if (app.got_subcommand(coeffs)) return run_coeffs(coeff_opt);
        if (app.got_subcommand(radial)) return run_radial(radial_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed pair file: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
