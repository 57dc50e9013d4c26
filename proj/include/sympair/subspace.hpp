#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace sympair {

/// Linear subspace of Q^n in canonical form: the stored basis is the RREF of
/// any spanning set, so two subspaces are equal iff their representations are
/// identical.
class Subspace {
  public:
    Subspace() = default;

    explicit Subspace(std::size_t ambient) : amb_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<std::vector<Rat>>& gens) {
        Subspace s(ambient);
        if (gens.empty()) return s;
        Mat m = Mat::from_rows(gens);
        if (m.cols != ambient) throw DimensionMismatch("generator length vs ambient");
        Echelon e = rref(m);
        s.basis_ = e.R;
        s.pivots_ = e.pivots;
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Mat::identity(ambient);
        s.pivots_.resize(ambient);
        for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
        return s;
    }

    std::size_t ambient() const { return amb_; }
    std::size_t dim() const { return basis_.rows; }
    const Mat& basis() const { return basis_; }
    std::vector<Rat> basis_vector(std::size_t i) const { return basis_.row(i); }

    /// Remainder of v after elimination against the basis; zero iff v lies in
    /// the subspace.
    std::vector<Rat> reduce(const std::vector<Rat>& v) const {
        if (v.size() != amb_) throw DimensionMismatch("vector length vs ambient");
        std::vector<Rat> w = v;
        for (std::size_t k = 0; k < basis_.rows; ++k) {
            const Rat c = w[pivots_[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < amb_; ++j)
                if (basis_.at(k, j) != 0) w[j] -= c * basis_.at(k, j);
        }
        return w;
    }

    bool contains(const std::vector<Rat>& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.amb_ != amb_) throw DimensionMismatch("ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    /// Coordinates of v in the stored basis, if v lies in the subspace.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
        if (!contains(v)) return std::nullopt;
        std::vector<Rat> c(dim());
        for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    std::vector<Rat> lift(const std::vector<Rat>& coords) const {
        if (coords.size() != dim()) throw DimensionMismatch("coordinate length vs dim");
        std::vector<Rat> v(amb_, Rat(0));
        for (std::size_t k = 0; k < dim(); ++k)
            if (coords[k] != 0)
                for (std::size_t j = 0; j < amb_; ++j) v[j] += coords[k] * basis_.at(k, j);
        return v;
    }

    Subspace sum(const Subspace& other) const {
        if (other.amb_ != amb_) throw DimensionMismatch("ambient mismatch");
        std::vector<std::vector<Rat>> gens;
        for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
        for (std::size_t i = 0; i < other.dim(); ++i) gens.push_back(other.basis_vector(i));
        return span(amb_, gens);
    }

    Subspace intersect(const Subspace& other) const {
        if (other.amb_ != amb_) throw DimensionMismatch("ambient mismatch");
        if (dim() == 0 || other.dim() == 0) return Subspace(amb_);
        // v = sum a_i b_i = sum c_j b'_j: kernel of [B^t | -B'^t].
        Mat m(amb_, dim() + other.dim());
        for (std::size_t j = 0; j < amb_; ++j) {
            for (std::size_t i = 0; i < dim(); ++i) m.at(j, i) = basis_.at(i, j);
            for (std::size_t i = 0; i < other.dim(); ++i)
                m.at(j, dim() + i) = -other.basis_.at(i, j);
        }
        std::vector<std::vector<Rat>> gens;
        for (const auto& k : nullspace(m)) {
            std::vector<Rat> v(amb_, Rat(0));
            for (std::size_t i = 0; i < dim(); ++i)
                if (k[i] != 0)
                    for (std::size_t j = 0; j < amb_; ++j) v[j] += k[i] * basis_.at(i, j);
            gens.push_back(std::move(v));
        }
        return span(amb_, gens);
    }

    bool operator==(const Subspace& o) const {
        return amb_ == o.amb_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    std::size_t amb_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel of a linear map given by matrix m (acting on column vectors),
/// intersected with a subspace of its domain.
inline Subspace kernel_in(const Mat& m, const Subspace& domain) {
    if (m.cols != domain.ambient()) throw DimensionMismatch("map domain vs subspace ambient");
    if (domain.dim() == 0) return Subspace(domain.ambient());
    // Columns of m * B^t are images of the basis vectors.
    Mat mb(m.rows, domain.dim());
    for (std::size_t i = 0; i < domain.dim(); ++i) {
        auto img = m * domain.basis_vector(i);
        for (std::size_t r = 0; r < m.rows; ++r) mb.at(r, i) = img[r];
    }
    std::vector<std::vector<Rat>> gens;
    for (const auto& k : nullspace(mb)) gens.push_back(domain.lift(k));
    return Subspace::span(domain.ambient(), gens);
}

} // namespace sympair
