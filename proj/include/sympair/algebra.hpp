#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weights.hpp"

namespace sympair {

/// Sparse square matrix entry of a representation matrix.
struct SparseEntry {
    std::size_t r, c;
    Rat v;
};
using SparseMat = std::vector<SparseEntry>;

inline SparseMat sparse_normalize(SparseMat m) {
    std::sort(m.begin(), m.end(), [](const SparseEntry& x, const SparseEntry& y) {
        return x.r != y.r ? x.r < y.r : x.c < y.c;
    });
    SparseMat out;
    for (auto& e : m) {
        if (!out.empty() && out.back().r == e.r && out.back().c == e.c)
            out.back().v += e.v;
        else
            out.push_back(e);
    }
    SparseMat clean;
    for (auto& e : out)
        if (e.v != 0) clean.push_back(e);
    return clean;
}

inline SparseMat sparse_mul(const SparseMat& x, const SparseMat& y) {
    SparseMat out;
    for (const auto& ex : x)
        for (const auto& ey : y)
            if (ex.c == ey.r) out.push_back({ex.r, ey.c, ex.v * ey.v});
    return sparse_normalize(std::move(out));
}

inline SparseMat sparse_axpy(const Rat& c, const SparseMat& x, SparseMat y) {
    for (const auto& e : x) y.push_back({e.r, e.c, c * e.v});
    return sparse_normalize(std::move(y));
}

/// Matrix realization metadata of an algebra basis: column space C^{m|n},
/// one sparse matrix per basis element.
struct MatrixRep {
    std::size_t even_size = 0, odd_size = 0;
    std::vector<SparseMat> basis;
    /// coord_pos[k] = flattened entry (r * N + c) where basis k has value 1 and
    /// every other basis element vanishes; enables direct coordinate reads.
    std::vector<std::size_t> coord_pos;

    std::size_t size() const { return even_size + odd_size; }
};

/// Finite dimensional Lie superalgebra over Q presented by structure
/// constants in a homogeneous basis (even vectors first), with an even
/// supersymmetric invariant form.
class LieSuperalgebra {
  public:
    LieSuperalgebra() = default;

    static LieSuperalgebra from_structure(std::size_t even_dim, std::size_t odd_dim,
                                          std::vector<std::string> labels,
                                          std::vector<std::vector<std::pair<std::size_t, Rat>>> table,
                                          Mat form) {
        LieSuperalgebra g;
        g.even_dim_ = even_dim;
        g.dim_ = even_dim + odd_dim;
        g.labels_ = std::move(labels);
        g.table_ = std::move(table);
        g.form_ = std::move(form);
        if (g.labels_.size() != g.dim_) throw DimensionMismatch("label count vs dim");
        if (g.table_.size() != g.dim_ * g.dim_) throw DimensionMismatch("table size vs dim");
        if (g.form_.rows != g.dim_ || g.form_.cols != g.dim_)
            throw DimensionMismatch("form shape vs dim");
        return g;
    }

    /// Build from a matrix realization: structure constants from the super
    /// commutator, form from the supertrace.
    static LieSuperalgebra from_matrix_basis(std::size_t even_size, std::size_t odd_size,
                                             std::size_t even_dim,
                                             std::vector<SparseMat> basis,
                                             std::vector<std::string> labels) {
        LieSuperalgebra g;
        g.dim_ = basis.size();
        g.even_dim_ = even_dim;
        g.labels_ = std::move(labels);
        g.rep_.even_size = even_size;
        g.rep_.odd_size = odd_size;
        for (auto& b : basis) g.rep_.basis.push_back(sparse_normalize(std::move(b)));
        g.find_coord_positions();

        const std::size_t d = g.dim_;
        g.table_.assign(d * d, {});
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                SparseMat xy = sparse_mul(g.rep_.basis[i], g.rep_.basis[j]);
                Rat sign = (g.parity(i) && g.parity(j)) ? Rat(1) : Rat(-1);
                SparseMat br = sparse_axpy(sign, sparse_mul(g.rep_.basis[j], g.rep_.basis[i]),
                                           std::move(xy));
                g.table_[i * d + j] = g.rep_coords_sparse(br);
            }

        g.form_ = Mat(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                g.form_.at(i, j) = g.supertrace_product(g.rep_.basis[i], g.rep_.basis[j]);
        return g;
    }

    std::size_t dim() const { return dim_; }
    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return dim_ - even_dim_; }
    int parity(std::size_t i) const { return i < even_dim_ ? 0 : 1; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Mat& form() const { return form_; }
    const MatrixRep& rep() const { return rep_; }
    bool has_rep() const { return !rep_.basis.empty(); }

    const std::vector<std::pair<std::size_t, Rat>>& table(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }

    std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operand length");
        std::vector<Rat> z(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                for (const auto& [k, c] : table(i, j)) z[k] += x[i] * y[j] * c;
            }
        }
        return z;
    }

    /// Matrix of ad(x) acting on coordinate columns.
    Mat ad(const std::vector<Rat>& x) const {
        if (x.size() != dim_) throw DimensionMismatch("ad operand length");
        Mat m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : table(i, j)) m.at(k, j) += x[i] * c;
        }
        return m;
    }

    Rat form_value(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        Rat s = 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (y[j] != 0 && form_.at(i, j) != 0) s += x[i] * y[j] * form_.at(i, j);
        }
        return s;
    }

    std::vector<Rat> basis_vector(std::size_t i) const {
        std::vector<Rat> v(dim_, Rat(0));
        v[i] = 1;
        return v;
    }

    /// Coordinates of a sparse representation matrix in the algebra basis.
    std::vector<Rat> rep_coords(const SparseMat& m_in) const {
        auto sm = sparse_normalize(m_in);
        auto coords = rep_coords_sparse(sm);
        std::vector<Rat> v(dim_, Rat(0));
        for (const auto& [k, c] : coords) v[k] = c;
        return v;
    }

    /// Verify super skew symmetry of the table ([x,y] = -(-1)^{|x||y|}[y,x],
    /// [x,x] = 0 for even x) and homogeneity of the bracket grading.
    void check_super_skew() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                std::vector<Rat> lhs(dim_, Rat(0)), rhs(dim_, Rat(0));
                for (const auto& [k, c] : table(i, j)) {
                    lhs[k] += c;
                    if ((parity(i) + parity(j) + parity(k)) % 2 != 0)
                        throw NotLieSuperalgebra("bracket does not respect the grading");
                }
                Rat sign = (parity(i) && parity(j)) ? Rat(1) : Rat(-1);
                for (const auto& [k, c] : table(j, i)) rhs[k] += sign * c;
                if (lhs != rhs) throw NotLieSuperalgebra("bracket is not super skew symmetric");
            }
    }

    /// Verify the super Jacobi identity on all basis triples.
    void check_jacobi() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    std::vector<Rat> acc(dim_, Rat(0));
                    auto add_term = [&](std::size_t a, std::size_t b, std::size_t c, int sgn) {
                        for (const auto& [m, cm] : table(b, c))
                            for (const auto& [n, cn] : table(a, m))
                                acc[n] += Rat(sgn) * cm * cn;
                    };
                    // (-1)^{|i||k|}[x_i,[x_j,x_k]] + cyclic.
                    int s1 = (parity(i) * parity(k)) % 2 ? -1 : 1;
                    int s2 = (parity(j) * parity(i)) % 2 ? -1 : 1;
                    int s3 = (parity(k) * parity(j)) % 2 ? -1 : 1;
                    add_term(i, j, k, s1);
                    add_term(j, k, i, s2);
                    add_term(k, i, j, s3);
                    if (!is_zero_vec(acc))
                        throw NotLieSuperalgebra("super Jacobi identity fails at basis triple");
                }
    }

    /// Verify the form is even, supersymmetric, invariant, nondegenerate.
    void check_form() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (parity(i) != parity(j) && form_.at(i, j) != 0)
                    throw BadForm("form is not even");
                Rat sign = (parity(i) && parity(j)) ? Rat(-1) : Rat(1);
                if (form_.at(i, j) != sign * form_.at(j, i))
                    throw BadForm("form is not supersymmetric");
            }
        if (rank(form_) != dim_) throw BadForm("form is degenerate");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Rat lhs = 0, rhs = 0;
                    for (const auto& [m, c] : table(i, j)) lhs += c * form_.at(m, k);
                    for (const auto& [m, c] : table(j, k)) rhs += c * form_.at(i, m);
                    if (lhs != rhs) throw BadForm("form is not invariant");
                }
    }

    /// Centralizer of a set of vectors inside a subspace of g.
    Subspace centralizer(const std::vector<std::vector<Rat>>& vs, const Subspace& within) const {
        Subspace cur = within;
        for (const auto& v : vs) {
            if (cur.dim() == 0) break;
            cur = kernel_in(ad(v), cur);
        }
        return cur;
    }

    Subspace even_part() const {
        std::vector<std::vector<Rat>> gens;
        for (std::size_t i = 0; i < even_dim_; ++i) gens.push_back(basis_vector(i));
        return Subspace::span(dim_, gens);
    }

    Subspace odd_part() const {
        std::vector<std::vector<Rat>> gens;
        for (std::size_t i = even_dim_; i < dim_; ++i) gens.push_back(basis_vector(i));
        return Subspace::span(dim_, gens);
    }

  private:
    std::size_t dim_ = 0, even_dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> table_;
    Mat form_;
    MatrixRep rep_;
    std::map<std::size_t, std::size_t> coord_owner_;

    Rat supertrace_product(const SparseMat& x, const SparseMat& y) const {
        Rat s = 0;
        for (const auto& ex : x)
            for (const auto& ey : y)
                if (ex.c == ey.r && ey.c == ex.r) {
                    Rat sign = ex.r < rep_.even_size ? Rat(1) : Rat(-1);
                    s += sign * ex.v * ey.v;
                }
        return s;
    }

    void find_coord_positions() {
        const std::size_t N = rep_.size();
        // Count, per flattened entry, how many basis elements touch it.
        std::map<std::size_t, std::pair<std::size_t, std::size_t>> touch; // pos -> (count, owner)
        for (std::size_t k = 0; k < rep_.basis.size(); ++k)
            for (const auto& e : rep_.basis[k]) {
                auto& t = touch[e.r * N + e.c];
                ++t.first;
                t.second = k;
            }
        rep_.coord_pos.assign(rep_.basis.size(), static_cast<std::size_t>(-1));
        for (std::size_t k = 0; k < rep_.basis.size(); ++k) {
            for (const auto& e : rep_.basis[k]) {
                std::size_t pos = e.r * N + e.c;
                if (touch[pos].first == 1 && e.v == 1) {
                    rep_.coord_pos[k] = pos;
                    break;
                }
            }
            if (rep_.coord_pos[k] == static_cast<std::size_t>(-1))
                throw Error("matrix basis lacks unit coordinate positions");
            coord_owner_[rep_.coord_pos[k]] = k;
        }
    }

    std::vector<std::pair<std::size_t, Rat>> rep_coords_sparse(const SparseMat& m) const {
        const std::size_t N = rep_.size();
        std::vector<std::pair<std::size_t, Rat>> coords;
        SparseMat residual = m;
        for (const auto& e : m) {
            auto it = coord_owner_.find(e.r * N + e.c);
            if (it == coord_owner_.end()) continue;
            coords.emplace_back(it->second, e.v);
            residual = sparse_axpy(-e.v, rep_.basis[it->second], std::move(residual));
        }
        if (!residual.empty())
            throw Error("matrix does not lie in the span of the algebra basis");
        std::sort(coords.begin(), coords.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return coords;
    }
};

/// Direct sum, with left/right label prefixes. Basis order: left evens, right
/// evens, left odds, right odds.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& A, const LieSuperalgebra& B) {
    const std::size_t d = A.dim() + B.dim();
    const std::size_t even = A.even_dim() + B.even_dim();
    // Index maps into the interleaved basis.
    std::vector<std::size_t> ia(A.dim()), ib(B.dim());
    for (std::size_t i = 0; i < A.even_dim(); ++i) ia[i] = i;
    for (std::size_t i = 0; i < B.even_dim(); ++i) ib[i] = A.even_dim() + i;
    for (std::size_t i = A.even_dim(); i < A.dim(); ++i) ia[i] = B.even_dim() + i;
    for (std::size_t i = B.even_dim(); i < B.dim(); ++i) ib[i] = A.dim() + i;

    std::vector<std::string> labels(d);
    for (std::size_t i = 0; i < A.dim(); ++i) labels[ia[i]] = "L." + A.labels()[i];
    for (std::size_t i = 0; i < B.dim(); ++i) labels[ib[i]] = "R." + B.labels()[i];

    std::vector<std::vector<std::pair<std::size_t, Rat>>> table(d * d);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (const auto& [k, c] : A.table(i, j)) table[ia[i] * d + ia[j]].emplace_back(ia[k], c);
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j)
            for (const auto& [k, c] : B.table(i, j)) table[ib[i] * d + ib[j]].emplace_back(ib[k], c);

    Mat form(d, d);
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) form.at(ia[i], ia[j]) = A.form().at(i, j);
    for (std::size_t i = 0; i < B.dim(); ++i)
        for (std::size_t j = 0; j < B.dim(); ++j) form.at(ib[i], ib[j]) = B.form().at(i, j);

    return LieSuperalgebra::from_structure(even, d - even, std::move(labels), std::move(table),
                                           std::move(form));
}

} // namespace sympair
