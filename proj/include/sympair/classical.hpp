#pragma once

#include "algebra.hpp"

namespace sympair {

inline Mat antidiag_ones(std::size_t m) {
    Mat s(m, m);
    for (std::size_t i = 0; i < m; ++i) s.at(i, m - 1 - i) = 1;
    return s;
}

inline Mat diag_signature(std::size_t p, std::size_t q) {
    Mat s(p + q, p + q);
    for (std::size_t i = 0; i < p + q; ++i) s.at(i, i) = i < p ? 1 : -1;
    return s;
}

/// Standard symplectic form [[0, I], [-I, 0]] on C^{2n}.
inline Mat std_symplectic(std::size_t two_n) {
    if (two_n % 2) throw DimensionMismatch("symplectic form needs even size");
    std::size_t n = two_n / 2;
    Mat j(two_n, two_n);
    for (std::size_t i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = -1;
    }
    return j;
}

namespace detail {

inline std::string entry_label(const char* stem, std::size_t r, std::size_t c) {
    return std::string(stem) + "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

} // namespace detail

/// General linear superalgebra gl(m|n) in the elementary matrix basis, even
/// elements first, with the supertrace form.
inline LieSuperalgebra build_gl(std::size_t m, std::size_t n) {
    std::vector<SparseMat> basis;
    std::vector<std::string> labels;
    auto push = [&](std::size_t r, std::size_t c) {
        basis.push_back({{r, c, Rat(1)}});
        labels.push_back(detail::entry_label("E", r, c));
    };
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) push(r, c);
    for (std::size_t r = m; r < m + n; ++r)
        for (std::size_t c = m; c < m + n; ++c) push(r, c);
    std::size_t even = basis.size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = m; c < m + n; ++c) push(r, c);
    for (std::size_t r = m; r < m + n; ++r)
        for (std::size_t c = 0; c < m; ++c) push(r, c);
    return LieSuperalgebra::from_matrix_basis(m, n, even, std::move(basis), std::move(labels));
}

/// Orthosymplectic superalgebra osp(m|2n) preserving the even supersymmetric
/// form S + P (S symmetric on the even slot, P alternating on the odd slot).
/// Basis: canonical kernel of the invariance constraints, per parity.
inline LieSuperalgebra build_osp(std::size_t m, std::size_t two_n, const Mat& S, const Mat& P) {
    if (S.rows != m || S.cols != m) throw DimensionMismatch("S shape");
    if (P.rows != two_n || P.cols != two_n) throw DimensionMismatch("P shape");
    const std::size_t N = m + two_n;
    Mat G(N, N);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) G.at(i, j) = S.at(i, j);
    for (std::size_t i = 0; i < two_n; ++i)
        for (std::size_t j = 0; j < two_n; ++j) G.at(m + i, m + j) = P.at(i, j);

    // Solve (x^t G)_{ab} + sigma_a (G x)_{ab} = 0 over the unknown entries of
    // the given parity pattern; sigma_a = 1 for even x, else the parity sign
    // of the row index a.
    auto solve_sector = [&](bool odd_sector) {
        std::vector<std::pair<std::size_t, std::size_t>> unknowns;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                bool mixed = (r < m) != (c < m);
                if (mixed == odd_sector) unknowns.emplace_back(r, c);
            }
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
        for (std::size_t u = 0; u < unknowns.size(); ++u) index[unknowns[u]] = u;
        std::vector<std::vector<Rat>> rows;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b) {
                std::vector<Rat> row(unknowns.size(), Rat(0));
                bool nonzero = false;
                Rat sigma = (!odd_sector || a < m) ? Rat(1) : Rat(-1);
                for (std::size_t i = 0; i < N; ++i) {
                    // (x^t G)_{ab} = sum_i x_{ia} G_{ib}
                    if (G.at(i, b) != 0) {
                        auto it = index.find({i, a});
                        if (it != index.end()) {
                            row[it->second] += G.at(i, b);
                            nonzero = true;
                        }
                    }
                    // sigma_a (G x)_{ab} = sigma_a sum_i G_{ai} x_{ib}
                    if (G.at(a, i) != 0) {
                        auto it = index.find({i, b});
                        if (it != index.end()) {
                            row[it->second] += sigma * G.at(a, i);
                            nonzero = true;
                        }
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        std::vector<SparseMat> sector;
        std::vector<std::vector<Rat>> sols =
            rows.empty() ? std::vector<std::vector<Rat>>{} : nullspace(Mat::from_rows(rows));
        if (rows.empty())
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                std::vector<Rat> e(unknowns.size(), Rat(0));
                e[u] = 1;
                sols.push_back(std::move(e));
            }
        for (const auto& sol : sols) {
            SparseMat x;
            for (std::size_t u = 0; u < unknowns.size(); ++u)
                if (sol[u] != 0) x.push_back({unknowns[u].first, unknowns[u].second, sol[u]});
            sector.push_back(sparse_normalize(std::move(x)));
        }
        return sector;
    };

    std::vector<SparseMat> basis = solve_sector(false);
    std::size_t even = basis.size();
    for (auto& x : solve_sector(true)) basis.push_back(std::move(x));

    std::vector<std::string> labels;
    // Label each basis element by its unit coordinate entry.
    {
        std::map<std::size_t, std::size_t> touch;
        for (const auto& x : basis)
            for (const auto& e : x) ++touch[e.r * N + e.c];
        for (const auto& x : basis) {
            std::string lab = "M(?)";
            for (const auto& e : x)
                if (touch[e.r * N + e.c] == 1 && e.v == 1) {
                    lab = detail::entry_label("M", e.r, e.c);
                    break;
                }
            labels.push_back(lab);
        }
    }
    return LieSuperalgebra::from_matrix_basis(m, two_n, even, std::move(basis), std::move(labels));
}

} // namespace sympair
