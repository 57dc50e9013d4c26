#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sympair/algebra.hpp"
#include "sympair/error.hpp"
#include "sympair/invariants.hpp"
#include "sympair/matrix.hpp"
#include "sympair/pair.hpp"
#include "sympair/poly.hpp"
#include "sympair/radial.hpp"
#include "sympair/rational.hpp"
#include "sympair/roots.hpp"

namespace sympair {

/// JSON serialization for the library types. Insertion-ordered documents and
/// canonical rational strings keep every emission byte-deterministic, so a
/// parse/serialize round trip reproduces the input exactly.
using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long long>() < 0))
        throw ParseError(std::string(what) + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

inline std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

inline const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    return j;
}

}  // namespace detail

inline Json rat_to_json(const Rat& x) { return Json(rat_str(x)); }

inline Rat rat_from_json(const Json& j) {
    return parse_rat(detail::as_string(j, "rational"));
}

inline Json vec_to_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

inline std::vector<Rat> vec_from_json(const Json& j) {
    const Json& a = detail::as_array(j, "vector");
    std::vector<Rat> v;
    v.reserve(a.size());
    for (const auto& e : a) v.push_back(rat_from_json(e));
    return v;
}

/// Matrices are emitted as nested row arrays.
inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat matrix_from_json(const Json& j) {
    const Json& rows = detail::as_array(j, "matrix");
    const std::size_t r = rows.size();
    std::size_t c = 0;
    if (r > 0) c = detail::as_array(rows[0], "matrix row").size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = detail::as_array(rows[i], "matrix row");
        if (row.size() != c) throw ParseError("matrix: ragged rows");
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = rat_from_json(row[k]);
    }
    return m;
}

/// Structure constants go out as sparse quadruples [i, j, k, c] meaning
/// [x_i, x_j] has coefficient c on x_k; the form goes out row-major.
inline Json algebra_to_json(const LieSuperalgebra& g) {
    const std::size_t d = g.dim();
    Json j;
    j["dim"] = d;
    j["even_dim"] = g.even_dim();
    j["labels"] = g.labels();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& [m, c] : g.table(i, k))
                brackets.push_back(Json::array({i, k, m, rat_str(c)}));
    j["brackets"] = std::move(brackets);
    Json form = Json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) form.push_back(rat_str(g.form().at(i, k)));
    j["form"] = std::move(form);
    return j;
}

/// Rebuild an algebra from its serialized structure constants. With validate
/// set, re-checks super skew symmetry, the Jacobi identity, and the form
/// axioms, so a tampered file fails loudly.
inline LieSuperalgebra algebra_from_json(const Json& j, bool validate = true) {
    const std::size_t d = detail::as_index(detail::need(j, "dim"), "dim");
    const std::size_t even = detail::as_index(detail::need(j, "even_dim"), "even_dim");
    if (even > d) throw ParseError("even_dim exceeds dim");
    const Json& ljson = detail::as_array(detail::need(j, "labels"), "labels");
    std::vector<std::string> labels;
    labels.reserve(ljson.size());
    for (const auto& e : ljson) labels.push_back(detail::as_string(e, "label"));
    if (labels.size() != d) throw ParseError("labels: wrong count");

    std::vector<std::vector<std::pair<std::size_t, Rat>>> table(d * d);
    for (const auto& quad : detail::as_array(detail::need(j, "brackets"), "brackets")) {
        const Json& qa = detail::as_array(quad, "bracket entry");
        if (qa.size() != 4) throw ParseError("bracket entry: expected [i, j, k, c]");
        const std::size_t i = detail::as_index(qa[0], "bracket index");
        const std::size_t k = detail::as_index(qa[1], "bracket index");
        const std::size_t m = detail::as_index(qa[2], "bracket index");
        if (i >= d || k >= d || m >= d) throw ParseError("bracket entry: index out of range");
        table[i * d + k].emplace_back(m, rat_from_json(qa[3]));
    }

    const Json& fjson = detail::as_array(detail::need(j, "form"), "form");
    if (fjson.size() != d * d) throw ParseError("form: wrong entry count");
    Mat form(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) form.at(i, k) = rat_from_json(fjson[i * d + k]);

    auto g = LieSuperalgebra::from_structure(even, d - even, std::move(labels),
                                             std::move(table), std::move(form));
    if (validate) {
        g.check_super_skew();
        g.check_jacobi();
        g.check_form();
    }
    return g;
}

/// A pair document is the algebra document plus the involution matrix, the
/// ordered Cartan basis, and the family tag with its parameters.
inline Json pair_to_json(const SymmetricSuperpair& sp) {
    Json j = algebra_to_json(sp.g);
    j["theta"] = matrix_to_json(sp.theta);
    Json cartan = Json::array();
    for (const auto& v : sp.cartan) cartan.push_back(vec_to_json(v));
    j["cartan"] = std::move(cartan);
    j["family"] = sp.family;
    Json params = Json::object();
    for (const auto& [key, value] : sp.params) params[key] = value;
    j["params"] = std::move(params);
    return j;
}

/// Rebuilds the pair through the same constructor as the builders, so the
/// involution and Cartan basis are re-validated on every load.
inline SymmetricSuperpair pair_from_json(const Json& j) {
    LieSuperalgebra g = algebra_from_json(j);
    Mat theta = matrix_from_json(detail::need(j, "theta"));
    std::vector<std::vector<Rat>> cartan;
    for (const auto& v : detail::as_array(detail::need(j, "cartan"), "cartan"))
        cartan.push_back(vec_from_json(v));
    std::string family = detail::as_string(detail::need(j, "family"), "family");
    std::vector<std::pair<std::string, long>> params;
    const Json& pjson = detail::need(j, "params");
    if (!pjson.is_object()) throw ParseError("params: expected an object");
    for (auto it = pjson.begin(); it != pjson.end(); ++it) {
        if (!it.value().is_number_integer()) throw ParseError("params: expected integer values");
        params.emplace_back(it.key(), it.value().get<long>());
    }
    return build_pair(std::move(g), std::move(theta), std::move(cartan), std::move(family),
                      std::move(params));
}

inline Json root_to_json(const RestrictedRoot& r) {
    Json j;
    j["weight"] = vec_to_json(r.weight);
    j["parity"] = r.odd ? "odd" : "even";
    j["multiplicity"] = r.multiplicity;
    j["coroot"] = vec_to_json(r.coroot);
    j["anisotropic"] = r.anisotropic;
    j["positive"] = r.positive;
    j["in_sigma_bar"] = r.in_sigma_bar;
    return j;
}

inline Json root_datum_to_json(const RootDatum& rd) {
    Json j;
    Json roots = Json::array();
    for (const auto& r : rd.roots) roots.push_back(root_to_json(r));
    j["roots"] = std::move(roots);
    j["weyl_order"] = rd.weyl_order();
    return j;
}

/// Polynomials record which side they live on ("p*" for functions on p, "p"
/// for the symmetric algebra of p itself) plus exponent/index/coefficient
/// triples per monomial, in the canonical monomial order.
inline Json poly_to_json(const SuperPoly& p) {
    Json j;
    j["space"] = p.side == Side::duals ? "p*" : "p";
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms) {
        Json t;
        Json even = Json::array();
        for (auto e : mono.ev) even.push_back(e);
        Json odd = Json::array();
        for (auto i : mono.od) odd.push_back(i);
        t["even"] = std::move(even);
        t["odd"] = std::move(odd);
        t["coeff"] = rat_str(coeff);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

/// The generator counts are taken from the first term; an empty polynomial
/// parses as the zero polynomial on zero generators.
inline SuperPoly poly_from_json(const Json& j) {
    const std::string space = detail::as_string(detail::need(j, "space"), "space");
    if (space != "p*" && space != "p") throw ParseError("space: expected \"p*\" or \"p\"");
    SuperPoly p;
    p.side = space == "p*" ? Side::duals : Side::vectors;
    p.even_n = 0;
    bool first = true;
    for (const auto& t : detail::as_array(detail::need(j, "terms"), "terms")) {
        SuperMono m;
        const Json& even = detail::as_array(detail::need(t, "even"), "even");
        for (const auto& e : even)
            m.ev.push_back(static_cast<unsigned>(detail::as_index(e, "exponent")));
        for (const auto& e : detail::as_array(detail::need(t, "odd"), "odd"))
            m.od.push_back(detail::as_index(e, "odd index"));
        if (first) {
            p.even_n = m.ev.size();
            first = false;
        } else if (m.ev.size() != p.even_n) {
            throw ParseError("terms: inconsistent even exponent counts");
        }
        p.add_term(m, rat_from_json(detail::need(t, "coeff")));
    }
    return p;
}

inline Json radial_to_json(const RadialOperator& op) {
    Json j;
    j["root"] = vec_to_json(op.weight);
    Json terms = Json::array();
    for (const auto& t : op.terms) {
        Json tj;
        tj["lambda_pow"] = t.lambda_pow;
        tj["d_pow"] = t.d_pow;
        tj["coeff"] = rat_str(t.coeff);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json report_to_json(const ChevalleyReport& rep) {
    Json j;
    j["pair"] = rep.pair;
    j["max_degree"] = rep.max_degree;
    Json degrees = Json::array();
    for (const auto& row : rep.degrees) {
        Json dj;
        dj["d"] = row.d;
        dj["dim_inv"] = row.dim_inv;
        dj["dim_image"] = row.dim_image;
        dj["dim_theoremB"] = row.dim_theoremB;
        dj["equal"] = row.equal;
        dj["injective"] = row.injective;
        degrees.push_back(std::move(dj));
    }
    j["degrees"] = std::move(degrees);
    j["ok"] = rep.ok;
    return j;
}

/// Canonical text rendering: two-space indent and a trailing newline.
inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sympair
