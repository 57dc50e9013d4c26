#pragma once

/// Radial components along a Cartan subspace: the twisted derivations
/// attached to an even base point, the projection of S(p) onto S(p0) along
/// their span, antisymmetrized composites, and the rank-one radial operators
/// built from a Bessel-type coefficient triangle.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "sympair/error.hpp"
#include "sympair/matrix.hpp"
#include "sympair/poly.hpp"
#include "sympair/rational.hpp"
#include "sympair/roots.hpp"
#include "sympair/subspace.hpp"

namespace sympair {

/// Triangle coefficient b_{s,l} = (l-1+s)! / (2^s (l-1-s)! s!), zero unless 0 <= s < l.
inline Rat coeff_b(std::size_t s, std::size_t ell) {
    if (ell == 0 || s >= ell) return Rat(0);
    Int num = factorial(ell - 1 + s);
    Int den = factorial(ell - 1 - s) * factorial(s);
    return Rat(num) / (Rat(den) * rat_pow(Rat(2), s));
}

/// Alternating sum a_{j,k} = sum_{i >= max(k-j,0)}^{k-1} (-1)^i (j)_{k-i} b_{i,k}.
inline Rat coeff_a(std::size_t j, std::size_t k) {
    Rat out(0);
    std::size_t lo = k > j ? k - j : 0;
    for (std::size_t i = lo; i < k; ++i) {
        Rat t = falling(Rat(static_cast<unsigned long>(j)), k - i) * coeff_b(i, k);
        out += (i % 2) ? -t : t;
    }
    return out;
}

/// Coefficients of the n-th reverse Bessel polynomial, leading term first:
/// theta_n(z) = sum_j b_{j,n+1} z^{n-j}.
inline std::vector<Rat> bessel_polynomial(std::size_t n) {
    std::vector<Rat> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) out.push_back(coeff_b(j, n + 1));
    return out;
}

/// The twisted derivation u_z(x) = [x,z] * (.) + ad(x) on S(p), for x in k
/// and an even base point z in p.
inline SuperPoly u_z_apply(const PolyFrame& f, const std::vector<Rat>& x,
                           const std::vector<Rat>& z, const SuperPoly& d) {
    if (d.side != Side::vectors) throw DimensionMismatch("twisted derivation acts on S(p)");
    SuperPoly lin = f.embed_vec(f.sp.g.bracket(x, z));
    return mul(lin, d) + f.ad_vec(x, d);
}

/// Span of u_z(x) w for x in a basis of [z, p1] and monomials w of degree
/// below N, as coordinate vectors over the monomials of degree at most N.
inline Subspace radial_kernel(const PolyFrame& f, const std::vector<Rat>& z,
                              std::size_t N) {
    auto monos = monomials_up_to(f.even_n, f.odd_n, N);
    std::vector<std::vector<Rat>> brk;
    for (std::size_t j = 0; j < f.sp.p1.dim(); ++j)
        brk.push_back(f.sp.g.bracket(z, f.sp.p1.basis_vector(j)));
    Subspace bz = Subspace::span(f.sp.g.dim(), brk);
    std::vector<std::vector<Rat>> vecs;
    if (N > 0) {
        auto words = monomials_up_to(f.even_n, f.odd_n, N - 1);
        for (std::size_t i = 0; i < bz.dim(); ++i) {
            auto x = bz.basis_vector(i);
            for (const auto& w : words) {
                SuperPoly img = u_z_apply(f, x, z, poly_term(Side::vectors, f.even_n, w, Rat(1)));
                vecs.push_back(poly_coords(img, monos));
            }
        }
    }
    return Subspace::span(monos.size(), vecs);
}

/// Antisymmetrized composite attached to an odd monomial q = o_1 ... o_k:
/// (1/k!) sum_sigma sgn(sigma) u_z([z,o_{sigma(1)}]) ... u_z([z,o_{sigma(k)}])
/// applied to p. At super-regular z, the images over deg q >= 1 and purely
/// even p complement S(p0) degree by degree.
inline SuperPoly gamma_compose(const PolyFrame& f, const std::vector<Rat>& z,
                               const SuperMono& q, const SuperPoly& p) {
    for (unsigned e : q.ev)
        if (e) throw DimensionMismatch("composite expects a monomial in the odd letters");
    const std::size_t k = q.od.size();
    std::vector<std::vector<Rat>> w;
    w.reserve(k);
    for (std::size_t t = 0; t < k; ++t)
        w.push_back(f.sp.g.bracket(z, f.gen_vec(f.even_n + q.od[t])));
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    SuperPoly out = f.zero(Side::vectors);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        SuperPoly cur = p;
        for (std::size_t t = k; t-- > 0;) cur = u_z_apply(f, w[perm[t]], z, cur);
        out = out + ((inv % 2) ? Rat(-1) : Rat(1)) * cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (Rat(1) / Rat(factorial(k))) * out;
}

/// Kernel of the even projection in degrees up to N: the span of the
/// composite images gamma_compose(q, p) over odd monomials q of positive
/// degree and purely even monomials p with deg q + deg p <= N. The single
/// twisted derivations span the same space when the even part of p is its
/// Cartan subspace, but in general only the composites stay clear of S(p0).
inline Subspace twisted_kernel(const PolyFrame& f, const std::vector<Rat>& z,
                               std::size_t N) {
    auto monos = monomials_up_to(f.even_n, f.odd_n, N);
    std::vector<std::vector<Rat>> vecs;
    for (std::size_t k = 1; k <= std::min(f.odd_n, N); ++k) {
        for (const auto& qm : monomials_of_degree(0, f.odd_n, k)) {
            SuperMono q{std::vector<unsigned>(f.even_n, 0), qm.od};
            for (std::size_t j = 0; j + k <= N; ++j)
                for (const auto& pm : monomials_of_degree(f.even_n, 0, j)) {
                    SuperPoly p = poly_term(Side::vectors, f.even_n, pm, Rat(1));
                    vecs.push_back(poly_coords(gamma_compose(f, z, q, p), monos));
                }
        }
    }
    return Subspace::span(monos.size(), vecs);
}

/// Projection of d in S(p) onto S(p0) along the twisted composite span.
/// Requires that span to be a complement of S(p0) in degrees up to deg d,
/// which holds when z is super-regular.
inline SuperPoly gamma_z(const PolyFrame& f, const std::vector<Rat>& z,
                         const SuperPoly& d) {
    if (d.side != Side::vectors) throw DimensionMismatch("projection acts on S(p)");
    if (d.is_zero()) return f.zero(Side::vectors);
    const std::size_t N = d.degree();
    auto monos = monomials_up_to(f.even_n, f.odd_n, N);
    Subspace K = twisted_kernel(f, z, N);
    std::vector<std::size_t> evpos;
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i].od.empty()) evpos.push_back(i);
    if (evpos.size() + K.dim() != monos.size())
        throw NotRegular("twisted span does not complement S(p0)");
    Mat A(monos.size(), monos.size());
    for (std::size_t c = 0; c < evpos.size(); ++c) A.at(evpos[c], c) = Rat(1);
    for (std::size_t c = 0; c < K.dim(); ++c) {
        auto v = K.basis_vector(c);
        for (std::size_t r = 0; r < monos.size(); ++r)
            A.at(r, evpos.size() + c) = v[r];
    }
    if (rank(A) != monos.size()) throw NotRegular("twisted span meets S(p0)");
    auto sol = solve(A, poly_coords(d, monos));
    if (!sol) throw SingularSystem("projection solve failed");
    SuperPoly out = f.zero(Side::vectors);
    for (std::size_t c = 0; c < evpos.size(); ++c)
        if ((*sol)[c] != 0) out.add_term(monos[evpos[c]], (*sol)[c]);
    return out;
}

/// One summand c * lambda^{lambda_pow} * (d/d coroot)^{d_pow} of a radial operator.
struct RadialTerm {
    long lambda_pow = 0;
    std::size_t d_pow = 0;
    Rat coeff;
};

/// Radial component of the k-th power-sum operator in one restricted root
/// direction, acting on polynomials on the Cartan subspace.
struct RadialOperator {
    std::vector<Rat> weight;
    std::vector<Rat> coroot;
    std::size_t order = 0;
    std::vector<RadialTerm> terms;
};

/// Builds the order-k radial operator of a restricted root:
/// (-1)^{k(k+1)/2} sum_{j<k} b_{j,k} (-lambda(A))^j lambda^{-(k+j)} d_A^{k-j}.
inline RadialOperator radial_operator(const RestrictedRoot& r, std::size_t k) {
    if (k == 0) throw DimensionMismatch("radial operator order must be positive");
    RadialOperator op;
    op.weight = r.weight;
    op.coroot = r.coroot;
    op.order = k;
    Rat lamA = dot(r.weight, r.coroot);
    bool neg = ((k * (k + 1) / 2) % 2) != 0;
    for (std::size_t j = 0; j < k; ++j) {
        Rat c = coeff_b(j, k) * rat_pow(-lamA, j);
        if (c == 0) continue;
        if (neg) c = -c;
        op.terms.push_back({-static_cast<long>(k + j), k - j, c});
    }
    return op;
}

/// Multiplies a dual polynomial by the linear form of a restricted root.
/// In the b-dual coordinates the form lambda = b(A_lambda, .) has the
/// coroot for coefficient vector.
inline SuperPoly multiply_by_root(const PolyFrame& f, const SuperPoly& p,
                                  const std::vector<Rat>& coroot, std::size_t times) {
    if (coroot.size() != f.rank) throw DimensionMismatch("coroot has rank entries");
    std::vector<Rat> coords(f.gens(), Rat(0));
    for (std::size_t i = 0; i < f.rank; ++i) coords[i] = coroot[i];
    SuperPoly lam = f.linear(Side::duals, coords);
    SuperPoly out = p;
    for (std::size_t s = 0; s < times; ++s) out = mul(lam, out);
    return out;
}

/// Divides a dual polynomial by the linear form of a restricted root
/// (coroot coefficient vector), raising LaurentRemainder when the division
/// does not go through.
inline SuperPoly divide_by_root(const PolyFrame& f, const SuperPoly& p,
                                const std::vector<Rat>& coroot, std::size_t times) {
    if (coroot.size() != f.rank) throw DimensionMismatch("coroot has rank entries");
    if (times == 0 || p.is_zero()) return p;
    std::size_t piv = f.rank;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (coroot[i] != 0) {
            piv = i;
            break;
        }
    if (piv == f.rank) throw DimensionMismatch("coroot is zero");
    // Rewrite in coordinates where the pivot variable is the form itself.
    Mat T = Mat::identity(f.even_n);
    T.at(piv, piv) = Rat(1) / coroot[piv];
    for (std::size_t j = 0; j < f.rank; ++j)
        if (j != piv) T.at(j, piv) = -coroot[j] / coroot[piv];
    SuperPoly q = substitute_even(p, T);
    SuperPoly shifted = poly_zero(Side::duals, f.even_n);
    for (const auto& [m, c] : q.terms) {
        if (m.ev[piv] < times) throw LaurentRemainder("polynomial not divisible by the root");
        SuperMono m2 = m;
        m2.ev[piv] -= static_cast<unsigned>(times);
        shifted.add_term(m2, c);
    }
    Mat U = Mat::identity(f.even_n);
    for (std::size_t j = 0; j < f.even_n; ++j) U.at(j, piv) = Rat(0);
    for (std::size_t j = 0; j < f.rank; ++j) U.at(j, piv) = coroot[j];
    return substitute_even(shifted, U);
}

/// Applies a radial operator to a polynomial on the Cartan subspace.
inline SuperPoly apply_radial(const PolyFrame& f, const RadialOperator& op,
                              const SuperPoly& p) {
    if (p.side != Side::duals)
        throw DimensionMismatch("radial operators act on dual polynomials");
    std::vector<Rat> cvec(f.gens(), Rat(0));
    for (std::size_t i = 0; i < f.rank; ++i) cvec[i] = op.coroot[i];
    // Bring every term over the common denominator lambda^L, sum, divide once:
    // individual summands may be Laurent while the sum stays polynomial.
    long L = 0;
    for (const auto& t : op.terms) L = std::max(L, -t.lambda_pow);
    SuperPoly num = f.zero(Side::duals);
    for (const auto& t : op.terms) {
        SuperPoly cur = p;
        for (std::size_t s = 0; s < t.d_pow; ++s) cur = f.contract(cvec, cur);
        cur = t.coeff * cur;
        cur = multiply_by_root(f, cur, op.coroot,
                               static_cast<std::size_t>(t.lambda_pow + L));
        num = num + cur;
    }
    if (L > 0) num = divide_by_root(f, num, op.coroot, static_cast<std::size_t>(L));
    return num;
}

/// Realization pairing: differentiates the dual polynomial p by d in S(p)
/// and evaluates the result at the even point z.
inline Rat realize(const PolyFrame& f, const SuperPoly& p, const SuperPoly& d,
                   const std::vector<Rat>& z) {
    return f.eval_at(f.derivative(d, p), z);
}

/// Distinguished invariant of degree N for the c-special family: lambda^N
/// plus the coupling terms sum_k (-1)^{k(k+3)/2} 2^{-k} a_{N,k} lambda^{N-2k}
/// sum_{|I|=k} zeta_I zetat_I.
inline SuperPoly c_special_generator(const PolyFrame& f, std::size_t N) {
    if (f.sp.family != "c-special")
        throw DimensionMismatch("generator is defined for the c-special family");
    const std::size_t q = f.odd_n / 2;
    SuperPoly p = f.zero(Side::duals);
    {
        SuperMono m{std::vector<unsigned>(f.even_n, 0), {}};
        m.ev[0] = static_cast<unsigned>(N);
        p.add_term(m, Rat(1));
    }
    for (std::size_t k = 1; k <= std::min(N / 2, q); ++k) {
        Rat c = coeff_a(N, k) / rat_pow(Rat(2), k);
        if ((k * (k + 3) / 2) % 2) c = -c;
        if (c == 0) continue;
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            SuperMono m{std::vector<unsigned>(f.even_n, 0), {}};
            m.ev[0] = static_cast<unsigned>(N - 2 * k);
            for (std::size_t i : idx) m.od.push_back(i);
            for (std::size_t i : idx) m.od.push_back(q + i);
            p.add_term(m, c);
            std::size_t t = k;
            while (t > 0 && idx[t - 1] == q - k + (t - 1)) --t;
            if (t == 0) break;
            ++idx[t - 1];
            for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
        }
    }
    return p;
}

} // namespace sympair
