#pragma once

#include <map>
#include <vector>

#include "subspace.hpp"

namespace sympair {

/// Univariate polynomial over Q, coefficient vector c[0] + c[1] x + ...
/// Normalized: no trailing zeros (zero polynomial = empty vector).
using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return {};
    Poly r(p.size() + q.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

/// Quotient and remainder of p by nonzero q.
inline std::pair<Poly, Poly> poly_divmod(Poly p, const Poly& q) {
    if (q.empty()) throw SingularSystem("polynomial division by zero");
    Poly quot;
    if (p.size() >= q.size()) quot.assign(p.size() - q.size() + 1, Rat(0));
    while (p.size() >= q.size()) {
        Rat c = p.back() / q.back();
        std::size_t shift = p.size() - q.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= c * q[i];
        p = poly_trim(std::move(p));
        if (p.size() < q.size()) break;
    }
    return {poly_trim(std::move(quot)), std::move(p)};
}

inline Poly poly_monic(Poly p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly g = poly_gcd(a, b);
    return poly_monic(poly_divmod(poly_mul(a, b), g).first);
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    return poly_trim(std::move(d));
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

/// Monic minimal polynomial of a square matrix, by per-vector Krylov
/// annihilators combined with lcm.
inline Poly minimal_polynomial(const Mat& M) {
    if (M.rows != M.cols) throw DimensionMismatch("minimal polynomial of nonsquare matrix");
    const std::size_t n = M.rows;
    if (n == 0) return {Rat(1)};
    Poly m = {Rat(1)};
    for (std::size_t s = 0; s < n; ++s) {
        if (!m.empty() && m.size() == n + 1) break;
        std::vector<Rat> v(n, Rat(0));
        v[s] = 1;
        // Krylov rows v, Mv, M^2 v, ... until dependence.
        std::vector<std::vector<Rat>> krylov = {v};
        while (true) {
            // Solve K^t c = last for combination of earlier rows.
            std::vector<Rat> next = M * krylov.back();
            Mat K(n, krylov.size());
            for (std::size_t j = 0; j < krylov.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) K.at(i, j) = krylov[j][i];
            auto combo = solve(K, next);
            if (combo) {
                Poly ann(krylov.size() + 1, Rat(0));
                for (std::size_t j = 0; j < krylov.size(); ++j) ann[j] = -(*combo)[j];
                ann.back() = 1;
                m = poly_lcm(m, ann);
                break;
            }
            krylov.push_back(std::move(next));
        }
    }
    return poly_monic(m);
}

namespace detail {

inline void divisors_of(const Int& n_in, std::vector<Int>& out) {
    Int n = abs(n_in);
    out.clear();
    if (n == 0) return;
    std::map<Int, unsigned> fac;
    Int d = 2;
    while (d * d <= n) {
        while (n % d == 0) {
            ++fac[d];
            n /= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) ++fac[n];
    out.push_back(1);
    for (const auto& [p, e] : fac) {
        std::size_t sz = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
}

} // namespace detail

/// All rational roots of p, with the deflated (root-free) quotient.
inline std::pair<std::vector<Rat>, Poly> rational_roots(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    std::vector<Rat> roots;
    if (p.size() <= 1) return {roots, p};
    while (!p.empty() && p[0] == 0) {
        roots.push_back(0);
        p.erase(p.begin());
    }
    while (p.size() > 1) {
        // Integerize: candidates num/den with num | c0, den | lead.
        Int scale = 1;
        for (const auto& c : p) {
            Int d = c.get_den();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<Int> ip;
        for (const auto& c : p) ip.push_back(Int(c * Rat(scale)));
        std::vector<Int> nums, dens;
        detail::divisors_of(ip.front(), nums);
        detail::divisors_of(ip.back(), dens);
        bool found = false;
        for (const Int& den : dens) {
            for (const Int& num : nums) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rat cand(sign > 0 ? num : -num, den);
                    cand.canonicalize();
                    if (poly_eval(p, cand) == 0) {
                        roots.push_back(cand);
                        p = poly_divmod(p, Poly{-cand, Rat(1)}).first;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return {roots, poly_trim(std::move(p))};
}

/// Rational eigenvalues with eigenspaces, ascending by eigenvalue. Throws
/// NonRationalSpectrum or NotDiagonalizable when the operator is not split
/// semisimple over Q.
inline std::vector<std::pair<Rat, Subspace>> eigen_decomposition(const Mat& M) {
    if (M.rows != M.cols) throw DimensionMismatch("eigen decomposition of nonsquare matrix");
    const std::size_t n = M.rows;
    Poly m = minimal_polynomial(M);
    Poly g = poly_gcd(m, poly_derivative(m));
    if (g.size() > 1) throw NotDiagonalizable("minimal polynomial has a repeated factor");
    auto [roots, rest] = rational_roots(m);
    if (rest.size() > 1)
        throw NonRationalSpectrum("minimal polynomial has an irrational factor");
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<Rat, Subspace>> out;
    std::size_t total = 0;
    for (const Rat& lam : roots) {
        Mat shifted = M;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= lam;
        Subspace es = Subspace::span(n, nullspace(shifted));
        total += es.dim();
        out.emplace_back(lam, std::move(es));
    }
    if (total != n) throw NotDiagonalizable("eigenspaces do not fill the space");
    return out;
}

/// Joint weight-space decomposition of commuting operators on Q^ambient.
/// Weight vectors list eigenvalues in operator order. With no operators the
/// whole space is the single weight space of the empty weight.
inline std::vector<std::pair<std::vector<Rat>, Subspace>> simultaneous_weight_spaces(
    const std::vector<Mat>& ops, std::size_t ambient, bool check_commute = true) {
    for (const Mat& op : ops)
        if (op.rows != ambient || op.cols != ambient)
            throw DimensionMismatch("operator shape vs ambient");
    if (check_commute) {
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                if (ops[i] * ops[j] != ops[j] * ops[i])
                    throw NonCommuting("operators do not commute");
    }
    std::vector<std::pair<std::vector<Rat>, Subspace>> current;
    current.emplace_back(std::vector<Rat>{}, Subspace::full(ambient));
    for (const Mat& op : ops) {
        std::vector<std::pair<std::vector<Rat>, Subspace>> next;
        for (auto& [w, sub] : current) {
            if (sub.dim() == 0) continue;
            // Matrix of op restricted to sub, in basis coordinates.
            Mat restr(sub.dim(), sub.dim());
            for (std::size_t j = 0; j < sub.dim(); ++j) {
                auto img = op * sub.basis_vector(j);
                auto c = sub.coordinates(img);
                if (!c) throw NonCommuting("operator does not preserve a weight space");
                for (std::size_t i = 0; i < sub.dim(); ++i) restr.at(i, j) = (*c)[i];
            }
            for (auto& [lam, es] : eigen_decomposition(restr)) {
                std::vector<std::vector<Rat>> gens;
                for (std::size_t i = 0; i < es.dim(); ++i)
                    gens.push_back(sub.lift(es.basis_vector(i)));
                std::vector<Rat> w2 = w;
                w2.push_back(lam);
                next.emplace_back(std::move(w2), Subspace::span(ambient, gens));
            }
        }
        current = std::move(next);
    }
    return current;
}

} // namespace sympair
