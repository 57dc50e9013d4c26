#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sympair/invariants.hpp"
#include "sympair/io.hpp"
#include "sympair/pair.hpp"
#include "sympair/radial.hpp"

using namespace sympair;

namespace {
Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::vector<SymmetricSuperpair> shipped_pairs() {
    std::vector<SymmetricSuperpair> out;
    out.push_back(group_gl_pair(1, 1));
    out.push_back(group_osp_pair(1, 2));
    out.push_back(gl_block_pair(1, 1, 1, 1));
    out.push_back(c_special_pair(1));
    out.push_back(c_special_pair(2));
    return out;
}
}  // namespace

TEST_CASE("scalar and matrix documents round trip") {
    for (const char* s : {"0", "5", "-7", "2/3", "-11/4"}) {
        Json j = rat_to_json(parse_rat(s));
        REQUIRE(j.get<std::string>() == s);
        REQUIRE(rat_from_json(j) == parse_rat(s));
    }
    REQUIRE_THROWS_AS(rat_from_json(Json(3)), ParseError);

    Mat m(2, 3);
    m.at(0, 0) = q(1);
    m.at(0, 2) = q(-1, 2);
    m.at(1, 1) = q(7, 3);
    Json j = matrix_to_json(m);
    Mat back = matrix_from_json(j);
    REQUIRE(back.rows == 2);
    REQUIRE(back.cols == 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 3; ++k) REQUIRE(back.at(i, k) == m.at(i, k));
    REQUIRE(matrix_to_json(back).dump() == j.dump());

    Json ragged = Json::array({Json::array({"1", "0"}), Json::array({"1"})});
    REQUIRE_THROWS_AS(matrix_from_json(ragged), ParseError);
}

TEST_CASE("algebra documents rebuild the same structure") {
    LieSuperalgebra g = c_special_pair(1).g;
    Json j = algebra_to_json(g);
    LieSuperalgebra back = algebra_from_json(j);

    REQUIRE(back.dim() == g.dim());
    REQUIRE(back.even_dim() == g.even_dim());
    REQUIRE(back.labels() == g.labels());
    REQUIRE(algebra_to_json(back).dump() == j.dump());

    // Brackets agree on every basis pair, not only on the sparse table order.
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t k = 0; k < g.dim(); ++k) {
            auto x = g.basis_vector(i);
            auto y = g.basis_vector(k);
            REQUIRE(back.bracket(x, y) == g.bracket(x, y));
            REQUIRE(back.form_value(x, y) == g.form_value(x, y));
        }
    }
}

TEST_CASE("pair documents round trip byte for byte") {
    for (const auto& sp : shipped_pairs()) {
        Json j = pair_to_json(sp);
        std::string first = dump_document(j);
        SymmetricSuperpair back = pair_from_json(j);
        REQUIRE(dump_document(pair_to_json(back)) == first);

        REQUIRE(back.family == sp.family);
        REQUIRE(back.params == sp.params);
        REQUIRE(back.cartan == sp.cartan);

        // The rebuilt pair carries the same restricted root data.
        Json roots = root_datum_to_json(restricted_roots(sp));
        REQUIRE(root_datum_to_json(restricted_roots(back)).dump() == roots.dump());
    }
}

TEST_CASE("corrupted documents are rejected") {
    Json j = pair_to_json(c_special_pair(1));

    Json missing = j;
    missing.erase("form");
    REQUIRE_THROWS_AS(pair_from_json(missing), ParseError);

    Json badindex = j;
    badindex["brackets"][0][2] = j["dim"].get<std::size_t>();
    REQUIRE_THROWS_AS(pair_from_json(badindex), ParseError);

    // A tampered structure constant breaks super skew symmetry or Jacobi.
    Json badconst = j;
    badconst["brackets"][0][3] = "17";
    REQUIRE_THROWS_AS(pair_from_json(badconst), Error);

    // theta must stay an involution.
    Json badtheta = j;
    badtheta["theta"][0][0] = "2";
    REQUIRE_THROWS_AS(pair_from_json(badtheta), BadInvolution);
}

TEST_CASE("polynomial documents round trip") {
    SymmetricSuperpair sp = c_special_pair(1);
    RootDatum rd = restricted_roots(sp);
    PolyFrame f = make_frame(sp, rd);

    SuperPoly p2 = c_special_generator(f, 2);
    Json j = poly_to_json(p2);
    REQUIRE(j["space"].get<std::string>() == "p*");
    SuperPoly back = poly_from_json(j);
    REQUIRE(back == p2);
    REQUIRE(poly_to_json(back).dump() == j.dump());

    // Vector-side polynomials carry the other space tag.
    SuperPoly z = f.var(Side::vectors, 0);
    REQUIRE(poly_to_json(z)["space"].get<std::string>() == "p");
    REQUIRE(poly_from_json(poly_to_json(z)) == z);

    // Duplicate monomials in a document merge; cancelling terms vanish.
    Json dup;
    dup["space"] = "p*";
    dup["terms"] = Json::array();
    Json t;
    t["even"] = Json::array({1});
    t["odd"] = Json::array();
    t["coeff"] = "2/3";
    dup["terms"].push_back(t);
    t["coeff"] = "-2/3";
    dup["terms"].push_back(t);
    REQUIRE(poly_from_json(dup).is_zero());
}

TEST_CASE("operator and report documents") {
    SymmetricSuperpair sp = c_special_pair(1);
    RootDatum rd = restricted_roots(sp);
    PolyFrame f = make_frame(sp, rd);

    const RestrictedRoot* lam = nullptr;
    for (const auto& r : rd.roots)
        if (r.in_sigma_bar && r.positive) lam = &r;
    REQUIRE(lam != nullptr);

    Json j1 = radial_to_json(radial_operator(*lam, 1));
    REQUIRE(j1["root"].dump() == vec_to_json(lam->weight).dump());
    REQUIRE(j1["terms"].size() == 1);
    REQUIRE(j1["terms"][0]["lambda_pow"].get<long>() == -1);
    REQUIRE(j1["terms"][0]["d_pow"].get<std::size_t>() == 1);
    REQUIRE(j1["terms"][0]["coeff"].get<std::string>() == "-1");

    Json rep = report_to_json(verify_chevalley(f, 3));
    REQUIRE(rep["pair"].get<std::string>() == "c-special(q=1)");
    REQUIRE(rep["max_degree"].get<std::size_t>() == 3);
    REQUIRE(rep["degrees"].size() == 4);
    REQUIRE(rep["degrees"][2]["dim_inv"].get<std::size_t>() == 1);
    REQUIRE(rep["degrees"][2]["equal"].get<bool>());
    REQUIRE(rep["ok"].get<bool>());

    // Emission is deterministic: serializing twice gives identical bytes.
    REQUIRE(report_to_json(verify_chevalley(f, 3)).dump(2) == rep.dump(2));
}
