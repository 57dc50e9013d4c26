#pragma once

/// Supercommutative polynomial algebra over coordinates adapted to a
/// symmetric superpair: the symmetric superalgebras S(p) and S(p*), their
/// pairing by iterated contraction, the superderivation actions of the
/// algebra on both sides, evaluation at even points, and restriction to the
/// Cartan subspace.

#include <algorithm>
#include <map>
#include <vector>

#include "sympair/error.hpp"
#include "sympair/matrix.hpp"
#include "sympair/pair.hpp"
#include "sympair/roots.hpp"
#include "sympair/subspace.hpp"

namespace sympair {

/// Which symmetric algebra a polynomial lives in.
enum class Side { vectors, duals };

/// Monomial: exponents of the even generators and a strictly increasing
/// list of odd generator indices.
struct SuperMono {
    std::vector<unsigned> ev;
    std::vector<std::size_t> od;

    std::size_t degree() const {
        std::size_t d = od.size();
        for (unsigned e : ev) d += e;
        return d;
    }
    int parity() const { return static_cast<int>(od.size() % 2); }

    bool operator==(const SuperMono& o) const { return ev == o.ev && od == o.od; }
    bool operator<(const SuperMono& o) const {
        if (ev != o.ev) return ev < o.ev;
        return od < o.od;
    }
};

/// Polynomial with rational coefficients in a fixed set of even and odd
/// generators, tagged by the side it lives on.
struct SuperPoly {
    Side side = Side::vectors;
    std::size_t even_n = 0;
    std::map<SuperMono, Rat> terms;

    bool is_zero() const { return terms.empty(); }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const SuperMono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rat constant_term() const {
        SuperMono one{std::vector<unsigned>(even_n, 0), {}};
        auto it = terms.find(one);
        return it == terms.end() ? Rat(0) : it->second;
    }

    bool operator==(const SuperPoly& o) const {
        return side == o.side && even_n == o.even_n && terms == o.terms;
    }
};

inline SuperPoly poly_zero(Side s, std::size_t even_n) { return {s, even_n, {}}; }

inline SuperPoly poly_term(Side s, std::size_t even_n, const SuperMono& m, const Rat& c) {
    SuperPoly p{s, even_n, {}};
    p.add_term(m, c);
    return p;
}

inline SuperPoly poly_const(Side s, std::size_t even_n, const Rat& c) {
    return poly_term(s, even_n, SuperMono{std::vector<unsigned>(even_n, 0), {}}, c);
}

namespace detail {

inline void require_compatible(const SuperPoly& a, const SuperPoly& b) {
    if (a.side != b.side || a.even_n != b.even_n)
        throw DimensionMismatch("polynomials live in different algebras");
}

} // namespace detail

inline SuperPoly operator+(const SuperPoly& a, const SuperPoly& b) {
    detail::require_compatible(a, b);
    SuperPoly out = a;
    for (const auto& [m, c] : b.terms) out.add_term(m, c);
    return out;
}

inline SuperPoly operator-(const SuperPoly& a, const SuperPoly& b) {
    detail::require_compatible(a, b);
    SuperPoly out = a;
    for (const auto& [m, c] : b.terms) out.add_term(m, -c);
    return out;
}

inline SuperPoly operator*(const Rat& c, const SuperPoly& p) {
    SuperPoly out{p.side, p.even_n, {}};
    if (c == 0) return out;
    for (const auto& [m, k] : p.terms) out.terms.emplace(m, c * k);
    return out;
}

/// Supercommutative product with the Koszul sign from merging odd letters.
inline SuperPoly mul(const SuperPoly& a, const SuperPoly& b) {
    detail::require_compatible(a, b);
    SuperPoly out{a.side, a.even_n, {}};
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            SuperMono m;
            m.ev.resize(a.even_n);
            for (std::size_t i = 0; i < a.even_n; ++i) m.ev[i] = ma.ev[i] + mb.ev[i];
            // Merge the odd letters, counting inversions for the sign; a
            // repeated odd letter kills the term.
            bool dead = false;
            long inv = 0;
            std::size_t i = 0, j = 0;
            while (i < ma.od.size() && j < mb.od.size()) {
                if (ma.od[i] == mb.od[j]) {
                    dead = true;
                    break;
                }
                if (ma.od[i] < mb.od[j]) {
                    m.od.push_back(ma.od[i++]);
                } else {
                    inv += static_cast<long>(ma.od.size() - i);
                    m.od.push_back(mb.od[j++]);
                }
            }
            if (dead) continue;
            while (i < ma.od.size()) m.od.push_back(ma.od[i++]);
            while (j < mb.od.size()) m.od.push_back(mb.od[j++]);
            Rat c = ca * cb;
            if (inv % 2) c = -c;
            out.add_term(m, c);
        }
    return out;
}

/// All monomials of the given total degree.
inline std::vector<SuperMono> monomials_of_degree(std::size_t even_n, std::size_t odd_n,
                                                  std::size_t d) {
    std::vector<std::vector<unsigned>> evens;
    std::vector<unsigned> cur(even_n, 0);
    // Even exponent vectors of each degree up to d, built recursively.
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == even_n) {
            cur[pos] = static_cast<unsigned>(left);
            evens.push_back(cur);
            return;
        }
        for (std::size_t e = 0; e <= left; ++e) {
            cur[pos] = static_cast<unsigned>(e);
            self(self, pos + 1, left - e);
        }
    };
    std::vector<SuperMono> out;
    for (std::size_t k = 0; k <= std::min(d, odd_n); ++k) {
        evens.clear();
        if (even_n == 0) {
            if (d - k == 0) evens.push_back({});
        } else {
            rec(rec, 0, d - k);
        }
        // Odd subsets of size k in lexicographic order.
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            for (const auto& ev : evens) out.push_back({ev, idx});
            if (k == 0) break;
            std::size_t t = k;
            while (t > 0 && idx[t - 1] == odd_n - k + (t - 1)) --t;
            if (t == 0) break;
            ++idx[t - 1];
            for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All monomials of total degree at most N, by increasing degree.
inline std::vector<SuperMono> monomials_up_to(std::size_t even_n, std::size_t odd_n,
                                              std::size_t N) {
    std::vector<SuperMono> out;
    for (std::size_t d = 0; d <= N; ++d) {
        auto ms = monomials_of_degree(even_n, odd_n, d);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

/// Coordinates of a polynomial over an ordered monomial basis.
inline std::vector<Rat> poly_coords(const SuperPoly& p, const std::vector<SuperMono>& basis) {
    std::map<SuperMono, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    std::vector<Rat> out(basis.size(), Rat(0));
    for (const auto& [m, c] : p.terms) {
        auto it = pos.find(m);
        if (it == pos.end()) throw DimensionMismatch("monomial outside the basis");
        out[it->second] = c;
    }
    return out;
}

inline SuperPoly poly_from_coords(Side s, std::size_t even_n,
                                  const std::vector<SuperMono>& basis,
                                  const std::vector<Rat>& coords) {
    if (coords.size() != basis.size()) throw DimensionMismatch("coordinate count");
    SuperPoly p{s, even_n, {}};
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
}

/// Substitutes each even variable x_i by the linear combination with
/// coefficients in column i of T; odd letters are unchanged.
inline SuperPoly substitute_even(const SuperPoly& p, const Mat& T) {
    if (T.rows != p.even_n || T.cols != p.even_n)
        throw DimensionMismatch("substitution matrix shape");
    SuperPoly out = poly_zero(p.side, p.even_n);
    for (const auto& [m, c] : p.terms) {
        SuperPoly acc = poly_term(p.side, p.even_n, SuperMono{std::vector<unsigned>(p.even_n, 0), m.od}, c);
        for (std::size_t i = 0; i < p.even_n; ++i) {
            if (!m.ev[i]) continue;
            SuperPoly lin = poly_zero(p.side, p.even_n);
            for (std::size_t j = 0; j < p.even_n; ++j) {
                if (T.at(j, i) == 0) continue;
                SuperMono v{std::vector<unsigned>(p.even_n, 0), {}};
                v.ev[j] = 1;
                lin.add_term(v, T.at(j, i));
            }
            for (unsigned e = 0; e < m.ev[i]; ++e) acc = mul(acc, lin);
        }
        out = out + acc;
    }
    return out;
}

/// Coordinates on p adapted to the restricted roots: the Cartan vectors
/// first, then one vector x - theta x per basis vector of each positive even
/// root space, then the Darboux vectors z_1..z_q, zt_1..zt_q of each positive
/// odd root space. Carries the degree-one pairing between the two symmetric
/// algebras and the derivation actions of the ambient algebra.
struct PolyFrame {
    SymmetricSuperpair sp;
    RootDatum rd;
    std::size_t rank = 0, even_n = 0, odd_n = 0;
    std::vector<std::vector<Rat>> even_vecs, odd_vecs;  // in algebra coordinates

    struct OddBlock {
        std::vector<Rat> weight;
        std::size_t offset = 0;  // index of z_1 among the odd generators
        std::size_t q = 0;       // number of Darboux pairs
    };
    std::vector<OddBlock> odd_blocks;

    Mat pairing;      // rows: generators of p, cols: dual generators
    Mat pairing_inv;
    Mat p_embed;      // algebra coordinates from frame coordinates
    Mat p_project;    // left inverse of p_embed

    std::size_t gens() const { return even_n + odd_n; }
    int gen_parity(std::size_t i) const { return i < even_n ? 0 : 1; }

    const std::vector<Rat>& gen_vec(std::size_t i) const {
        return i < even_n ? even_vecs[i] : odd_vecs[i - even_n];
    }

    SuperPoly zero(Side s) const { return poly_zero(s, even_n); }
    SuperPoly one(Side s) const { return poly_const(s, even_n, Rat(1)); }

    SuperPoly var(Side s, std::size_t i) const {
        SuperMono m{std::vector<unsigned>(even_n, 0), {}};
        if (i < even_n) m.ev[i] = 1;
        else m.od = {i - even_n};
        return poly_term(s, even_n, m, Rat(1));
    }

    SuperPoly linear(Side s, const std::vector<Rat>& coords) const {
        if (coords.size() != gens()) throw DimensionMismatch("linear coefficient count");
        SuperPoly p = zero(s);
        for (std::size_t i = 0; i < gens(); ++i)
            if (coords[i] != 0) p = p + coords[i] * var(s, i);
        return p;
    }

    /// Frame coordinates of an algebra vector lying in p.
    std::vector<Rat> p_coords(const std::vector<Rat>& v) const {
        auto c = p_project * v;
        if (!(p_embed * c == v)) throw DimensionMismatch("vector does not lie in p");
        return c;
    }

    int parity_of(const std::vector<Rat>& v) const {
        bool even = false, odd = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            (i < sp.g.even_dim() ? even : odd) = true;
        }
        if (even && odd) throw DimensionMismatch("vector is not parity homogeneous");
        return odd ? 1 : 0;
    }

    /// A p-vector as a degree-one polynomial.
    SuperPoly embed_vec(const std::vector<Rat>& v) const {
        return linear(Side::vectors, p_coords(v));
    }

    /// Left contraction by generator i on a dual polynomial.
    SuperPoly contract_gen(std::size_t i, const SuperPoly& p) const {
        if (p.side != Side::duals) throw DimensionMismatch("contraction expects a dual polynomial");
        SuperPoly out = zero(Side::duals);
        if (i < even_n) {
            for (const auto& [m, c] : p.terms)
                for (std::size_t j = 0; j < even_n; ++j) {
                    if (!m.ev[j] || pairing.at(i, j) == 0) continue;
                    SuperMono m2 = m;
                    --m2.ev[j];
                    out.add_term(m2, c * Rat(m.ev[j]) * pairing.at(i, j));
                }
        } else {
            for (const auto& [m, c] : p.terms)
                for (std::size_t t = 0; t < m.od.size(); ++t) {
                    Rat pv = pairing.at(i, even_n + m.od[t]);
                    if (pv == 0) continue;
                    SuperMono m2 = m;
                    m2.od.erase(m2.od.begin() + static_cast<long>(t));
                    Rat coeff = c * pv;
                    if (t % 2) coeff = -coeff;
                    out.add_term(m2, coeff);
                }
        }
        return out;
    }

    /// Left contraction by a p-vector in frame coordinates.
    SuperPoly contract(const std::vector<Rat>& coords, const SuperPoly& p) const {
        SuperPoly out = zero(Side::duals);
        for (std::size_t i = 0; i < gens(); ++i)
            if (coords[i] != 0) out = out + coords[i] * contract_gen(i, p);
        return out;
    }

    /// Contraction by the word of a monomial, rightmost letter first.
    SuperPoly mono_derivative(const SuperMono& d, const SuperPoly& p) const {
        SuperPoly cur = p;
        for (std::size_t t = d.od.size(); t-- > 0;)
            cur = contract_gen(even_n + d.od[t], cur);
        for (std::size_t i = even_n; i-- > 0;)
            for (unsigned e = 0; e < d.ev[i]; ++e) cur = contract_gen(i, cur);
        return cur;
    }

    /// The operator of a polynomial in S(p) acting on S(p*).
    SuperPoly derivative(const SuperPoly& d, const SuperPoly& p) const {
        if (d.side != Side::vectors) throw DimensionMismatch("derivative symbol side");
        SuperPoly out = zero(Side::duals);
        for (const auto& [m, c] : d.terms) out = out + c * mono_derivative(m, p);
        return out;
    }

    /// Full pairing of S(p) against S(p*).
    Rat pair_value(const SuperPoly& d, const SuperPoly& p) const {
        return derivative(d, p).constant_term();
    }

    /// Extends generator images to a left superderivation of parity px.
    SuperPoly superderive(const SuperPoly& p, int px,
                          const std::vector<SuperPoly>& images) const {
        if (images.size() != gens()) throw DimensionMismatch("one image per generator");
        SuperPoly out = zero(p.side);
        for (const auto& [m, c] : p.terms) {
            for (std::size_t j = 0; j < even_n; ++j) {
                if (!m.ev[j]) continue;
                SuperMono evs{m.ev, {}};
                --evs.ev[j];
                SuperMono ods{std::vector<unsigned>(even_n, 0), m.od};
                SuperPoly piece = mul(poly_term(p.side, even_n, evs, Rat(1)),
                                      mul(images[j], poly_term(p.side, even_n, ods, Rat(1))));
                out = out + (c * Rat(m.ev[j])) * piece;
            }
            for (std::size_t t = 0; t < m.od.size(); ++t) {
                SuperMono pre{m.ev, {m.od.begin(), m.od.begin() + static_cast<long>(t)}};
                SuperMono post{std::vector<unsigned>(even_n, 0),
                               {m.od.begin() + static_cast<long>(t) + 1, m.od.end()}};
                SuperPoly piece = mul(poly_term(p.side, even_n, pre, Rat(1)),
                                      mul(images[even_n + m.od[t]],
                                          poly_term(p.side, even_n, post, Rat(1))));
                Rat coeff = c;
                if (px && t % 2) coeff = -coeff;
                out = out + coeff * piece;
            }
        }
        return out;
    }

    /// The derivation ad(x) on S(p), for x whose brackets with p stay in p.
    SuperPoly ad_vec(const std::vector<Rat>& x, const SuperPoly& p) const {
        if (p.side != Side::vectors) throw DimensionMismatch("ad acts on S(p)");
        int px = parity_of(x);
        std::vector<SuperPoly> images;
        images.reserve(gens());
        for (std::size_t i = 0; i < gens(); ++i)
            images.push_back(linear(Side::vectors, p_coords(sp.g.bracket(x, gen_vec(i)))));
        return superderive(p, px, images);
    }

    /// Matrix of the dual action on the dual generators: column beta holds
    /// the coefficients of the image of dual generator beta.
    Mat ad_star_matrix(const std::vector<Rat>& x) const {
        int px = parity_of(x);
        const std::size_t n = gens();
        Mat A(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto col = p_coords(sp.g.bracket(x, gen_vec(i)));
            for (std::size_t j = 0; j < n; ++j) A.at(j, i) = col[j];
        }
        // <v_i, image(eta_beta)> = -(-1)^{|x||v_i|} <[x, v_i], eta_beta>
        Mat B = A.transpose() * pairing;
        for (std::size_t i = 0; i < n; ++i) {
            if (px && gen_parity(i)) continue;  // sign +1 stays, negate below
            for (std::size_t b = 0; b < n; ++b) B.at(i, b) = -B.at(i, b);
        }
        return pairing_inv * B;
    }

    /// The dual derivation ad*(x) on S(p*).
    SuperPoly ad_star_vec(const std::vector<Rat>& x, const SuperPoly& p) const {
        if (p.side != Side::duals) throw DimensionMismatch("ad* acts on S(p*)");
        int px = parity_of(x);
        Mat D = ad_star_matrix(x);
        std::vector<SuperPoly> images;
        images.reserve(gens());
        for (std::size_t b = 0; b < gens(); ++b) {
            std::vector<Rat> col(gens());
            for (std::size_t j = 0; j < gens(); ++j) col[j] = D.at(j, b);
            images.push_back(linear(Side::duals, col));
        }
        return superderive(p, px, images);
    }

    /// Evaluates a dual polynomial at an even point of p.
    Rat eval_at(const SuperPoly& p, const std::vector<Rat>& z) const {
        if (p.side != Side::duals) throw DimensionMismatch("evaluation expects a dual polynomial");
        auto zc = p_coords(z);
        for (std::size_t i = even_n; i < gens(); ++i)
            if (zc[i] != 0) throw DimensionMismatch("evaluation point must be even");
        std::vector<Rat> vals(even_n, Rat(0));
        for (std::size_t j = 0; j < even_n; ++j)
            for (std::size_t i = 0; i < even_n; ++i)
                if (zc[i] != 0 && pairing.at(i, j) != 0) vals[j] += zc[i] * pairing.at(i, j);
        Rat out = 0;
        for (const auto& [m, c] : p.terms) {
            if (!m.od.empty()) continue;
            Rat t = c;
            for (std::size_t j = 0; j < even_n; ++j)
                for (unsigned e = 0; e < m.ev[j]; ++e) t *= vals[j];
            out += t;
        }
        return out;
    }

    /// Restriction to the Cartan subspace: kills the odd letters and the
    /// even generators coming from root spaces.
    SuperPoly restrict_to_cartan(const SuperPoly& p) const {
        if (p.side != Side::duals) throw DimensionMismatch("restriction expects a dual polynomial");
        SuperPoly out = zero(Side::duals);
        for (const auto& [m, c] : p.terms) {
            if (!m.od.empty()) continue;
            bool keep = true;
            for (std::size_t j = rank; j < even_n; ++j)
                if (m.ev[j]) {
                    keep = false;
                    break;
                }
            if (keep) out.add_term(m, c);
        }
        return out;
    }
};

/// Builds the adapted frame of a pair from its root datum.
inline PolyFrame make_frame(const SymmetricSuperpair& sp, const RootDatum& rd) {
    PolyFrame f;
    f.sp = sp;
    f.rd = rd;
    f.rank = sp.rank();
    for (const auto& h : sp.cartan) f.even_vecs.push_back(h);
    for (const auto& r : rd.roots) {
        if (r.odd || !r.positive) continue;
        for (std::size_t j = 0; j < r.space.dim(); ++j) {
            auto x = r.space.basis_vector(j);
            auto tx = sp.theta * x;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= tx[i];
            f.even_vecs.push_back(std::move(x));
        }
    }
    f.even_n = f.even_vecs.size();
    if (f.even_n != sp.p0.dim()) throw BadCartan("even frame does not fill the even part of p");

    for (const auto& r : rd.roots) {
        if (!r.odd || !r.positive) continue;
        SymplecticBasis sb = symplectic_basis(sp, r);
        PolyFrame::OddBlock blk{r.weight, f.odd_vecs.size(), sb.pairs()};
        for (const auto& z : sb.z) f.odd_vecs.push_back(z);
        for (const auto& zt : sb.zt) f.odd_vecs.push_back(zt);
        f.odd_blocks.push_back(std::move(blk));
    }
    f.odd_n = f.odd_vecs.size();
    if (f.odd_n != sp.p1.dim()) throw BadCartan("odd frame does not fill the odd part of p");

    const std::size_t d = sp.g.dim();
    const std::size_t n = f.gens();
    Mat M(d, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& v = f.gen_vec(j);
        for (std::size_t i = 0; i < d; ++i) M.at(i, j) = v[i];
    }
    Mat Mt = M.transpose();
    f.p_project = inverse(Mt * M) * Mt;
    f.p_embed = std::move(M);

    Mat P(n, n);
    for (std::size_t i = 0; i < f.even_n; ++i)
        for (std::size_t j = 0; j < f.even_n; ++j)
            P.at(i, j) = sp.g.form_value(f.even_vecs[j], f.even_vecs[i]);
    for (const auto& blk : f.odd_blocks)
        for (std::size_t i = 0; i < blk.q; ++i) {
            std::size_t z = f.even_n + blk.offset + i;
            std::size_t zt = z + blk.q;
            P.at(z, zt) = Rat(-1);
            P.at(zt, z) = Rat(1);
        }
    f.pairing_inv = inverse(P);
    f.pairing = std::move(P);
    return f;
}

} // namespace sympair
