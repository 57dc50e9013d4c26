#pragma once

#include "classical.hpp"

namespace sympair {

/// Validation report for a candidate Cartan subspace a of p0. The pair is of
/// even type exactly when every field holds.
struct CartanReport {
    bool a_in_p0 = false;
    bool abelian = false;
    bool semisimple = false;
    bool self_centralizing = false;
    bool odd_centralizer_zero = false;
    bool even_type() const {
        return a_in_p0 && abelian && semisimple && self_centralizing && odd_centralizer_zero;
    }
};

/// Reductive symmetric superpair (g, theta) with a chosen ordered basis of a
/// Cartan subspace a of p0. theta is stored as a matrix on coordinates; the
/// cartan basis is kept in the given order (it fixes weight coordinates).
struct SymmetricSuperpair {
    LieSuperalgebra g;
    Mat theta;
    Subspace k, p, k0, k1, p0, p1;
    std::vector<std::vector<Rat>> cartan;
    Subspace a;
    std::string family = "custom";
    std::vector<std::pair<std::string, long>> params;

    std::size_t rank() const { return cartan.size(); }

    /// Gram matrix b(a_i, a_j) of the form on the cartan basis.
    Mat cartan_gram() const {
        Mat m(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                m.at(i, j) = g.form_value(cartan[i], cartan[j]);
        return m;
    }

    /// Value lambda(h) for a functional given by weight coordinates.
    static Rat weight_value(const std::vector<Rat>& weight, const std::vector<Rat>& h_coords) {
        return dot(weight, h_coords);
    }

    std::vector<Rat> cartan_lift(const std::vector<Rat>& h_coords) const {
        std::vector<Rat> v(g.dim(), Rat(0));
        for (std::size_t i = 0; i < rank(); ++i)
            if (h_coords[i] != 0)
                for (std::size_t j = 0; j < g.dim(); ++j) v[j] += h_coords[i] * cartan[i][j];
        return v;
    }
};

namespace detail {

inline std::vector<std::vector<std::pair<std::size_t, Rat>>> sparse_columns(const Mat& m) {
    std::vector<std::vector<std::pair<std::size_t, Rat>>> cols(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i)
            if (m.at(i, j) != 0) cols[j].emplace_back(i, m.at(i, j));
    return cols;
}

} // namespace detail

/// Assemble a pair from an algebra, an involution matrix and an ordered
/// cartan basis. Checks that theta is a parity preserving involutive
/// automorphism compatible with the form, and that the cartan vectors are
/// independent; even-type properties are left to validate_cartan.
inline SymmetricSuperpair build_pair(LieSuperalgebra g, Mat theta,
                                     std::vector<std::vector<Rat>> cartan,
                                     std::string family = "custom",
                                     std::vector<std::pair<std::string, long>> params = {}) {
    const std::size_t d = g.dim();
    if (theta.rows != d || theta.cols != d) throw DimensionMismatch("theta shape vs dim");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (g.parity(i) != g.parity(j) && theta.at(i, j) != 0)
                throw BadInvolution("theta does not preserve the grading");
    if (theta * theta != Mat::identity(d)) throw BadInvolution("theta is not an involution");

    auto cols = detail::sparse_columns(theta);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rat> lhs(d, Rat(0)), rhs(d, Rat(0));
            for (const auto& [k, c] : g.table(i, j))
                for (const auto& [t, ct] : cols[k]) lhs[t] += c * ct;
            for (const auto& [ai, ci] : cols[i])
                for (const auto& [bj, cj] : cols[j])
                    for (const auto& [k, c] : g.table(ai, bj)) rhs[k] += ci * cj * c;
            if (lhs != rhs) throw BadInvolution("theta is not an automorphism");
        }
    if (theta.transpose() * g.form() * theta != g.form())
        throw BadInvolution("theta does not preserve the form");

    SymmetricSuperpair sp;
    sp.g = std::move(g);
    sp.theta = std::move(theta);
    sp.family = std::move(family);
    sp.params = std::move(params);

    // Eigenspaces of theta per parity block.
    const std::size_t ed = sp.g.even_dim();
    auto block_eigen = [&](std::size_t lo, std::size_t hi, const Rat& sign) {
        Mat blk(hi - lo, hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j) blk.at(i - lo, j - lo) = sp.theta.at(i, j);
        for (std::size_t i = 0; i < hi - lo; ++i) blk.at(i, i) -= sign;
        std::vector<std::vector<Rat>> gens;
        for (const auto& v : nullspace(blk)) {
            std::vector<Rat> w(d, Rat(0));
            for (std::size_t i = 0; i < hi - lo; ++i) w[lo + i] = v[i];
            gens.push_back(std::move(w));
        }
        return Subspace::span(d, gens);
    };
    sp.k0 = block_eigen(0, ed, Rat(1));
    sp.p0 = block_eigen(0, ed, Rat(-1));
    sp.k1 = block_eigen(ed, d, Rat(1));
    sp.p1 = block_eigen(ed, d, Rat(-1));
    sp.k = sp.k0.sum(sp.k1);
    sp.p = sp.p0.sum(sp.p1);

    for (const auto& h : cartan)
        if (h.size() != d) throw DimensionMismatch("cartan vector length vs dim");
    sp.a = Subspace::span(d, cartan);
    if (sp.a.dim() != cartan.size()) throw BadCartan("cartan vectors are dependent");
    sp.cartan = std::move(cartan);
    return sp;
}

inline CartanReport validate_cartan(const SymmetricSuperpair& sp) {
    CartanReport r;
    r.a_in_p0 = sp.p0.contains(sp.a);
    r.abelian = true;
    for (std::size_t i = 0; i < sp.rank() && r.abelian; ++i)
        for (std::size_t j = i + 1; j < sp.rank() && r.abelian; ++j)
            if (!is_zero_vec(sp.g.bracket(sp.cartan[i], sp.cartan[j]))) r.abelian = false;
    if (r.abelian) {
        try {
            std::vector<Mat> ops;
            for (const auto& h : sp.cartan) ops.push_back(sp.g.ad(h));
            simultaneous_weight_spaces(ops, sp.g.dim(), false);
            r.semisimple = true;
        } catch (const NonRationalSpectrum&) {
        } catch (const NotDiagonalizable&) {
        }
    }
    r.self_centralizing = sp.g.centralizer(sp.cartan, sp.p0) == sp.a;
    r.odd_centralizer_zero = sp.g.centralizer(sp.cartan, sp.p1).dim() == 0;
    return r;
}

inline bool is_even_type(const SymmetricSuperpair& sp) { return validate_cartan(sp).even_type(); }

namespace detail {

/// Index maps of direct_sum(A, B): where basis i of each factor lands.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> direct_sum_indices(
    const LieSuperalgebra& A, const LieSuperalgebra& B) {
    std::vector<std::size_t> ia(A.dim()), ib(B.dim());
    for (std::size_t i = 0; i < A.even_dim(); ++i) ia[i] = i;
    for (std::size_t i = 0; i < B.even_dim(); ++i) ib[i] = A.even_dim() + i;
    for (std::size_t i = A.even_dim(); i < A.dim(); ++i) ia[i] = B.even_dim() + i;
    for (std::size_t i = B.even_dim(); i < B.dim(); ++i) ib[i] = A.dim() + i;
    return {ia, ib};
}

/// theta = Ad(G) for an invertible matrix G on the representation space.
inline Mat theta_ad(const LieSuperalgebra& g, const SparseMat& G, const SparseMat& Ginv) {
    Mat th(g.dim(), g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k) {
        SparseMat img = sparse_mul(sparse_mul(G, g.rep().basis[k]), Ginv);
        auto col = g.rep_coords(img);
        for (std::size_t i = 0; i < g.dim(); ++i) th.at(i, k) = col[i];
    }
    return th;
}

inline SparseMat sparse_diag(const std::vector<Rat>& d) {
    SparseMat m;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) m.push_back({i, i, d[i]});
    return m;
}

/// Group double (k + k, swap). Cartan = {(h, -h)} over a basis of the
/// diagonal part of k: all h in k whose representation matrix is diagonal.
inline SymmetricSuperpair build_group_double(const LieSuperalgebra& kfac, std::string family,
                                             std::vector<std::pair<std::string, long>> params) {
    LieSuperalgebra g = direct_sum(kfac, kfac);
    auto [ia, ib] = direct_sum_indices(kfac, kfac);
    const std::size_t d = g.dim();
    Mat theta(d, d);
    for (std::size_t i = 0; i < kfac.dim(); ++i) {
        theta.at(ib[i], ia[i]) = 1;
        theta.at(ia[i], ib[i]) = 1;
    }

    // Diagonal torus of k via the matrix realization.
    if (!kfac.has_rep()) throw Error("group double needs a matrix realization");
    const std::size_t N = kfac.rep().size();
    std::vector<std::vector<Rat>> rows;
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            if (r == c) continue;
            std::vector<Rat> row(kfac.dim(), Rat(0));
            bool nonzero = false;
            for (std::size_t kk = 0; kk < kfac.dim(); ++kk)
                for (const auto& e : kfac.rep().basis[kk])
                    if (e.r == r && e.c == c) {
                        row[kk] += e.v;
                        nonzero = true;
                    }
            if (nonzero) rows.push_back(std::move(row));
        }
    std::vector<std::vector<Rat>> torus =
        rows.empty() ? std::vector<std::vector<Rat>>{} : nullspace(Mat::from_rows(rows));
    // Keep only even elements of k (diagonal odd matrices can exist in gl(m|n)
    // only on the diagonal blocks, so this is usually automatic).
    std::vector<std::vector<Rat>> cartan;
    for (const auto& t : torus) {
        bool even_only = true;
        for (std::size_t i = kfac.even_dim(); i < kfac.dim(); ++i)
            if (t[i] != 0) even_only = false;
        if (!even_only) continue;
        std::vector<Rat> v(d, Rat(0));
        for (std::size_t i = 0; i < kfac.dim(); ++i) {
            if (t[i] == 0) continue;
            v[ia[i]] += t[i];
            v[ib[i]] -= t[i];
        }
        cartan.push_back(std::move(v));
    }
    return build_pair(std::move(g), std::move(theta), std::move(cartan), std::move(family),
                      std::move(params));
}

} // namespace detail

/// Group type pair over gl(p|q): g = gl(p|q) + gl(p|q), theta the swap.
inline SymmetricSuperpair group_gl_pair(std::size_t p, std::size_t q) {
    return detail::build_group_double(build_gl(p, q), "group-gl",
                                      {{"p", static_cast<long>(p)}, {"q", static_cast<long>(q)}});
}

/// Group type pair over osp(m|2n) with the split symmetric form antidiag(1).
inline SymmetricSuperpair group_osp_pair(std::size_t m, std::size_t two_n) {
    return detail::build_group_double(
        build_osp(m, two_n, antidiag_ones(m), std_symplectic(two_n)), "group-osp",
        {{"m", static_cast<long>(m)}, {"n", static_cast<long>(two_n)}});
}

/// Block family inside gl(p+q|r+s): theta = Ad diag(1_p, -1_q, 1_r, -1_s),
/// cartan spanned by E(j, p+j) + E(p+j, j) and the analogous odd-slot blocks.
/// Q-split model; even type iff (p-q)(r-s) >= 0.
inline SymmetricSuperpair gl_block_pair(std::size_t p, std::size_t q, std::size_t r,
                                        std::size_t s) {
    if (p + q + r + s == 0) throw DimensionMismatch("empty gl block pair");
    LieSuperalgebra g = build_gl(p + q, r + s);
    std::vector<Rat> signs;
    for (std::size_t i = 0; i < p + q + r + s; ++i)
        signs.push_back((i < p || (i >= p + q && i < p + q + r)) ? Rat(1) : Rat(-1));
    Mat theta = detail::theta_ad(g, detail::sparse_diag(signs), detail::sparse_diag(signs));
    std::vector<std::vector<Rat>> cartan;
    for (std::size_t j = 0; j < std::min(p, q); ++j)
        cartan.push_back(g.rep_coords({{j, p + j, Rat(1)}, {p + j, j, Rat(1)}}));
    const std::size_t o = p + q;
    for (std::size_t l = 0; l < std::min(r, s); ++l)
        cartan.push_back(g.rep_coords({{o + l, o + r + l, Rat(1)}, {o + r + l, o + l, Rat(1)}}));
    return build_pair(std::move(g), std::move(theta), std::move(cartan), "gl-block",
                      {{"p", static_cast<long>(p)},
                       {"q", static_cast<long>(q)},
                       {"r", static_cast<long>(r)},
                       {"s", static_cast<long>(s)}});
}

/// Block family inside osp(p+q|r+s), r and s even: even form diag(1_p, -1_q),
/// odd form J_r + J_s, theta = Ad diag(1_p, -1_q, 1_r, -1_s). Q-split model;
/// even type iff (p-q)(r-s) >= 0.
inline SymmetricSuperpair osp_block_pair(std::size_t p, std::size_t q, std::size_t r,
                                         std::size_t s) {
    if (r % 2 || s % 2) throw DimensionMismatch("osp block needs even symplectic sizes");
    if (p + q + r + s == 0) throw DimensionMismatch("empty osp block pair");
    Mat P(r + s, r + s);
    {
        Mat jr = std_symplectic(r), js = std_symplectic(s);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) P.at(i, j) = jr.at(i, j);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) P.at(r + i, r + j) = js.at(i, j);
    }
    LieSuperalgebra g = build_osp(p + q, r + s, diag_signature(p, q), P);
    std::vector<Rat> signs;
    for (std::size_t i = 0; i < p + q + r + s; ++i)
        signs.push_back((i < p || (i >= p + q && i < p + q + r)) ? Rat(1) : Rat(-1));
    Mat theta = detail::theta_ad(g, detail::sparse_diag(signs), detail::sparse_diag(signs));

    std::vector<std::vector<Rat>> cartan;
    for (std::size_t j = 0; j < std::min(p, q); ++j)
        cartan.push_back(g.rep_coords({{j, p + j, Rat(1)}, {p + j, j, Rat(1)}}));
    const std::size_t o = p + q;
    for (std::size_t l = 0; l < std::min(r, s) / 2; ++l) {
        SparseMat y = {{o + l, o + r + l, Rat(1)},
                       {o + r / 2 + l, o + r + s / 2 + l, Rat(-1)},
                       {o + r + l, o + l, Rat(1)},
                       {o + r + s / 2 + l, o + r / 2 + l, Rat(-1)}};
        cartan.push_back(g.rep_coords(y));
    }
    return build_pair(std::move(g), std::move(theta), std::move(cartan), "osp-block",
                      {{"p", static_cast<long>(p)},
                       {"q", static_cast<long>(q)},
                       {"r", static_cast<long>(r)},
                       {"s", static_cast<long>(s)}});
}

/// Rank one pair of type C(q+1): g = osp(2|2q) with split even form
/// antidiag(1,1), theta = Ad(antidiag(1,1) + 1). Cartan basis is the single
/// vector A = diag(1/2, -1/2, 0, ..., 0), the coroot of the odd restricted
/// root.
inline SymmetricSuperpair c_special_pair(std::size_t q) {
    if (q == 0) throw DimensionMismatch("c-special needs q >= 1");
    LieSuperalgebra g = build_osp(2, 2 * q, antidiag_ones(2), std_symplectic(2 * q));
    SparseMat W = {{0, 1, Rat(1)}, {1, 0, Rat(1)}};
    for (std::size_t i = 0; i < 2 * q; ++i) W.push_back({2 + i, 2 + i, Rat(1)});
    Mat theta = detail::theta_ad(g, W, W);
    Rat half(1, 2);
    std::vector<std::vector<Rat>> cartan = {g.rep_coords({{0, 0, half}, {1, 1, -half}})};
    return build_pair(std::move(g), std::move(theta), std::move(cartan), "c-special",
                      {{"q", static_cast<long>(q)}});
}

} // namespace sympair
