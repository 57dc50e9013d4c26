#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace sympair {

/// Dense rational matrix, row major.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<Rat>>& rows_in) {
        if (rows_in.empty()) return Mat();
        Mat m(rows_in.size(), rows_in[0].size());
        for (std::size_t i = 0; i < rows_in.size(); ++i) {
            if (rows_in[i].size() != m.cols) throw DimensionMismatch("ragged row list");
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
        }
        return m;
    }

    std::vector<Rat> row(std::size_t i) const {
        return std::vector<Rat>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const Rat& q) { return q == 0; });
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }
};

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product shape");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const Rat& ykj = y.at(k, j);
                if (ykj != 0) z.at(i, j) += xik * ykj;
            }
        }
    return z;
}

inline Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix sum shape");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix difference shape");
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

inline Mat operator*(const Rat& c, const Mat& x) {
    Mat z = x;
    for (auto& q : z.a) q *= c;
    return z;
}

inline std::vector<Rat> operator*(const Mat& x, const std::vector<Rat>& v) {
    if (x.cols != v.size()) throw DimensionMismatch("matrix-vector shape");
    std::vector<Rat> w(x.rows, Rat(0));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            if (x.at(i, j) != 0) w[i] += x.at(i, j) * v[j];
    return w;
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Mat R;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Canonical RREF. Forward pass is fraction free (Bareiss) on integer rows,
/// back substitution is plain rational.
inline Echelon rref(const Mat& m) {
    Echelon e;
    e.R = m;
    Mat& R = e.R;
    if (m.rows == 0 || m.cols == 0) return e;

    // Scale each row to integers; a row operation, so the row space is kept.
    std::vector<Int> den(R.rows);
    for (std::size_t i = 0; i < R.rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < R.cols; ++j) {
            Int d = R.at(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        if (l != 1)
            for (std::size_t j = 0; j < R.cols; ++j) R.at(i, j) *= Rat(l);
    }

    Rat prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < R.cols && r < R.rows; ++col) {
        std::size_t piv = r;
        while (piv < R.rows && R.at(piv, col) == 0) ++piv;
        if (piv == R.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < R.cols; ++j) std::swap(R.at(r, j), R.at(piv, j));
        const Rat p = R.at(r, col);
        for (std::size_t i = r + 1; i < R.rows; ++i) {
            const Rat f = R.at(i, col);
            for (std::size_t j = col; j < R.cols; ++j)
                R.at(i, j) = (p * R.at(i, j) - f * R.at(r, j)) / prev;
            // Entries of untouched leading columns stay zero by construction.
        }
        prev = p;
        e.pivots.push_back(col);
        ++r;
    }

    // Normalize pivots to 1 and clear above.
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
        const std::size_t col = e.pivots[k];
        const Rat p = R.at(k, col);
        for (std::size_t j = col; j < R.cols; ++j) R.at(k, j) /= p;
        for (std::size_t i = 0; i < k; ++i) {
            const Rat f = R.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < R.cols; ++j) R.at(i, j) -= f * R.at(k, j);
        }
    }
    // Drop the zero tail rows.
    Mat out(e.pivots.size(), R.cols);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j) out.at(i, j) = R.at(i, j);
    e.R = out;
    return e;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank(); }

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
inline std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.R.at(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve(const Mat& A, const std::vector<Rat>& b) {
    if (A.rows != b.size()) throw DimensionMismatch("solve shape");
    Mat aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    Echelon e = rref(aug);
    for (std::size_t c : e.pivots)
        if (c == A.cols) return std::nullopt;
    std::vector<Rat> x(A.cols, Rat(0));
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.R.at(k, A.cols);
    return x;
}

inline Mat inverse(const Mat& A) {
    if (A.rows != A.cols) throw DimensionMismatch("inverse of nonsquare matrix");
    const std::size_t n = A.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.rank() != n || e.pivots.back() >= n)
        throw SingularSystem("matrix not invertible");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.R.at(i, n + j);
    return inv;
}

inline Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot shape");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
    return s;
}

inline std::vector<Rat> axpy(const Rat& c, const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size()) throw DimensionMismatch("axpy shape");
    std::vector<Rat> z = y;
    for (std::size_t i = 0; i < x.size(); ++i) z[i] += c * x[i];
    return z;
}

inline bool is_zero_vec(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

} // namespace sympair
