#pragma once

/// Degreewise invariants of the dual action on S(p*), their restriction to
/// the Cartan subspace, and the candidate description of the restricted
/// image by Weyl invariance plus derivative conditions along the
/// distinguished odd roots.

#include <cstddef>
#include <string>
#include <vector>

#include "sympair/error.hpp"
#include "sympair/matrix.hpp"
#include "sympair/pair.hpp"
#include "sympair/poly.hpp"
#include "sympair/roots.hpp"
#include "sympair/subspace.hpp"

namespace sympair {

/// Monomials of degree d in the Cartan variables only, padded to the frame.
inline std::vector<SuperMono> cartan_monomials(const PolyFrame& f, std::size_t d) {
    std::vector<SuperMono> out;
    for (const auto& m : monomials_of_degree(f.rank, 0, d)) {
        SuperMono m2{std::vector<unsigned>(f.even_n, 0), {}};
        for (std::size_t i = 0; i < f.rank; ++i) m2.ev[i] = m.ev[i];
        out.push_back(m2);
    }
    return out;
}

/// Matrix of the dual derivation of x on the degree-d monomial basis.
inline Mat dual_action_matrix(const PolyFrame& f, const std::vector<Rat>& x,
                              const std::vector<SuperMono>& basis) {
    Mat M(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        SuperPoly img =
            f.ad_star_vec(x, poly_term(Side::duals, f.even_n, basis[j], Rat(1)));
        auto c = poly_coords(img, basis);
        for (std::size_t i = 0; i < basis.size(); ++i) M.at(i, j) = c[i];
    }
    return M;
}

/// Joint kernel of the dual k-action in degree d, over the degree-d monomials.
inline Subspace invariants_degree(const PolyFrame& f, std::size_t d) {
    auto basis = monomials_of_degree(f.even_n, f.odd_n, d);
    Subspace inv = Subspace::full(basis.size());
    for (std::size_t i = 0; i < f.sp.k.dim() && inv.dim() > 0; ++i)
        inv = kernel_in(dual_action_matrix(f, f.sp.k.basis_vector(i), basis), inv);
    return inv;
}

/// Invariants of one degree together with their Cartan restrictions.
struct DegreeSlice {
    std::size_t d = 0;
    Subspace invariants;  // over the degree-d monomials of S(p*)
    Subspace image;       // over the degree-d Cartan monomials
    bool injective = false;
};

inline DegreeSlice restriction_slice(const PolyFrame& f, std::size_t d) {
    auto basis = monomials_of_degree(f.even_n, f.odd_n, d);
    auto cbasis = cartan_monomials(f, d);
    Subspace inv = invariants_degree(f, d);
    std::vector<std::vector<Rat>> img;
    for (std::size_t i = 0; i < inv.dim(); ++i) {
        SuperPoly p = poly_from_coords(Side::duals, f.even_n, basis, inv.basis_vector(i));
        img.push_back(poly_coords(f.restrict_to_cartan(p), cbasis));
    }
    Subspace image = Subspace::span(cbasis.size(), img);
    return {d, inv, image, image.dim() == inv.dim()};
}

/// Rows cutting out "lambda^jdiv divides the k-th coroot derivative" on the
/// degree-d Cartan monomials: rewrite in coordinates where the pivot
/// variable is the form lambda itself and require the low pivot powers of
/// the derivative to vanish.
inline Mat divisibility_matrix(const PolyFrame& f, const std::vector<SuperMono>& cbasis,
                               std::size_t d, const RestrictedRoot& r, std::size_t k,
                               std::size_t jdiv) {
    std::vector<Rat> cvec(f.gens(), Rat(0));
    for (std::size_t i = 0; i < f.rank; ++i) cvec[i] = r.coroot[i];
    std::size_t piv = f.rank;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (r.coroot[i] != 0) {
            piv = i;
            break;
        }
    if (piv == f.rank) throw DimensionMismatch("coroot is zero");
    Mat T = Mat::identity(f.even_n);
    T.at(piv, piv) = Rat(1) / r.coroot[piv];
    for (std::size_t j = 0; j < f.rank; ++j)
        if (j != piv) T.at(j, piv) = -r.coroot[j] / r.coroot[piv];
    auto target = cartan_monomials(f, d - k);
    std::vector<std::size_t> low;
    for (std::size_t t = 0; t < target.size(); ++t)
        if (target[t].ev[piv] < jdiv) low.push_back(t);
    Mat M(low.size(), cbasis.size());
    for (std::size_t j = 0; j < cbasis.size(); ++j) {
        SuperPoly p = poly_term(Side::duals, f.even_n, cbasis[j], Rat(1));
        for (std::size_t s = 0; s < k; ++s) p = f.contract(cvec, p);
        p = substitute_even(p, T);
        auto c = poly_coords(p, target);
        for (std::size_t ri = 0; ri < low.size(); ++ri) M.at(ri, j) = c[low[ri]];
    }
    return M;
}

/// The candidate cut of the restricted image in degree d: Weyl-invariant
/// polynomials whose coroot derivatives along each distinguished odd root
/// satisfy the divisibility (isotropic) or hyperplane-vanishing
/// (anisotropic) conditions.
inline Subspace theoremB_subspace(const PolyFrame& f, std::size_t d) {
    auto cbasis = cartan_monomials(f, d);
    const std::size_t n = cbasis.size();
    Subspace cut = Subspace::full(n);
    Mat id = Mat::identity(f.rank);
    for (const Mat& w : f.rd.weyl) {
        if (w == id) continue;
        Mat T = Mat::identity(f.even_n);
        for (std::size_t i = 0; i < f.rank; ++i)
            for (std::size_t j = 0; j < f.rank; ++j) T.at(i, j) = w.at(i, j);
        Mat M(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            SuperPoly sub =
                substitute_even(poly_term(Side::duals, f.even_n, cbasis[j], Rat(1)), T);
            auto c = poly_coords(sub, cbasis);
            for (std::size_t i = 0; i < n; ++i)
                M.at(i, j) = c[i] - (i == j ? Rat(1) : Rat(0));
        }
        cut = kernel_in(M, cut);
        if (cut.dim() == 0) return cut;
    }
    for (const auto* r : f.rd.sigma_bar_positive()) {
        const std::size_t m = r->multiplicity;
        if (r->anisotropic) {
            for (std::size_t k = 1; k + 1 <= m; k += 2) {
                if (k > d) break;
                cut = kernel_in(divisibility_matrix(f, cbasis, d, *r, k, 1), cut);
                if (cut.dim() == 0) return cut;
            }
        } else {
            for (std::size_t j = 1; 2 * j <= m; ++j) {
                if (j > d) break;
                cut = kernel_in(divisibility_matrix(f, cbasis, d, *r, j, j), cut);
                if (cut.dim() == 0) return cut;
            }
        }
    }
    return cut;
}

/// One row of the degreewise comparison.
struct DegreeReport {
    std::size_t d = 0;
    std::size_t dim_inv = 0;
    std::size_t dim_image = 0;
    std::size_t dim_theoremB = 0;
    bool equal = false;
    bool injective = false;
};

/// Full degree-by-degree comparison of restricted invariants against the
/// candidate description.
struct ChevalleyReport {
    std::string pair;
    std::size_t max_degree = 0;
    std::vector<DegreeReport> degrees;
    bool ok = true;
};

/// Human-readable label of a pair: family name plus its parameters.
inline std::string pair_label(const SymmetricSuperpair& sp) {
    std::string s = sp.family;
    if (!sp.params.empty()) {
        s += "(";
        for (std::size_t i = 0; i < sp.params.size(); ++i) {
            if (i) s += ",";
            s += sp.params[i].first + "=" + std::to_string(sp.params[i].second);
        }
        s += ")";
    }
    return s;
}

inline ChevalleyReport verify_chevalley(const PolyFrame& f, std::size_t max_degree) {
    ChevalleyReport rep;
    rep.pair = pair_label(f.sp);
    rep.max_degree = max_degree;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        DegreeSlice slice = restriction_slice(f, d);
        Subspace tb = theoremB_subspace(f, d);
        DegreeReport dr;
        dr.d = d;
        dr.dim_inv = slice.invariants.dim();
        dr.dim_image = slice.image.dim();
        dr.dim_theoremB = tb.dim();
        dr.equal = slice.image == tb;
        dr.injective = slice.injective;
        rep.ok = rep.ok && dr.equal && dr.injective;
        rep.degrees.push_back(dr);
    }
    return rep;
}

} // namespace sympair
