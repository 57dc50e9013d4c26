#pragma once

/// Restricted root data of a symmetric superpair: the weight-space
/// decomposition of the algebra under the even Cartan subspace, root
/// multiplicities and coroots, the little Weyl group generated by
/// reflections in anisotropic even roots, and Darboux bases of odd
/// root spaces.

#include <algorithm>
#include <set>
#include <vector>

#include "sympair/error.hpp"
#include "sympair/matrix.hpp"
#include "sympair/pair.hpp"
#include "sympair/subspace.hpp"
#include "sympair/weights.hpp"

namespace sympair {

/// One weight space of the adjoint action of a commuting family of even
/// elements.
struct WeightSpace {
    std::vector<Rat> weight;  // values on the ordered Cartan basis
    bool odd = false;
    Subspace space;  // in algebra coordinates
};

/// Weight-space decomposition of an algebra under ad of the given even
/// elements, split by parity. Zero weight spaces are included.
inline std::vector<WeightSpace> weight_spaces(
    const LieSuperalgebra& alg, const std::vector<std::vector<Rat>>& cartan) {
    const std::size_t d = alg.dim();
    const std::size_t ed = alg.even_dim();
    std::vector<Mat> ads;
    ads.reserve(cartan.size());
    for (const auto& h : cartan) {
        if (h.size() != d) throw DimensionMismatch("cartan vector size");
        for (std::size_t i = ed; i < d; ++i)
            if (h[i] != 0) throw BadCartan("cartan vectors must be even");
        ads.push_back(alg.ad(h));
    }
    std::vector<WeightSpace> out;
    for (int parity = 0; parity < 2; ++parity) {
        const std::size_t lo = parity ? ed : 0;
        const std::size_t n = (parity ? d : ed) - lo;
        if (n == 0) continue;
        // ad of an even element preserves parity, so the parity block of
        // each operator acts on the contiguous coordinate range.
        std::vector<Mat> blocks;
        for (const Mat& m : ads) {
            Mat b(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) b.at(i, j) = m.at(lo + i, lo + j);
            blocks.push_back(std::move(b));
        }
        for (auto& [w, sub] : simultaneous_weight_spaces(blocks, n, false)) {
            std::vector<std::vector<Rat>> gens;
            for (std::size_t j = 0; j < sub.dim(); ++j) {
                std::vector<Rat> v(d, Rat(0));
                auto bv = sub.basis_vector(j);
                for (std::size_t i = 0; i < n; ++i) v[lo + i] = bv[i];
                gens.push_back(std::move(v));
            }
            out.push_back({std::move(w), parity == 1, Subspace::span(d, gens)});
        }
    }
    return out;
}

/// A nonzero restricted root together with its root space and coroot.
struct RestrictedRoot {
    std::vector<Rat> weight;   // values on the ordered Cartan basis
    bool odd = false;
    std::size_t multiplicity = 0;
    Subspace space;            // root space in algebra coordinates
    std::vector<Rat> coroot;   // Cartan coordinates of the dual vector
    bool anisotropic = false;  // the root is nonzero on its own coroot
    bool positive = false;     // first nonzero weight entry is positive
    bool in_sigma_bar = false; // odd, and neither it nor its double is even
};

/// Restricted root system of a symmetric superpair.
struct RootDatum {
    std::size_t rank = 0;
    std::vector<RestrictedRoot> roots;  // even roots first, then weight order
    Mat gram;                           // form on the Cartan basis
    std::vector<Mat> weyl;              // little Weyl group on Cartan coordinates

    std::size_t weyl_order() const { return weyl.size(); }

    const RestrictedRoot* find(const std::vector<Rat>& weight, bool odd) const {
        for (const auto& r : roots)
            if (r.odd == odd && r.weight == weight) return &r;
        return nullptr;
    }

    /// Positive odd roots that are neither even roots nor halves of one.
    std::vector<const RestrictedRoot*> sigma_bar_positive() const {
        std::vector<const RestrictedRoot*> out;
        for (const auto& r : roots)
            if (r.odd && r.positive && r.in_sigma_bar) out.push_back(&r);
        return out;
    }
};

namespace detail {

/// Closure of the group generated by the given matrices, up to a hard
/// element bound.
inline std::vector<Mat> group_closure(std::vector<Mat> gens, std::size_t rank) {
    std::set<std::vector<Rat>> seen;
    std::vector<Mat> all = {Mat::identity(rank)};
    seen.insert(all[0].a);
    std::vector<Mat> frontier = all;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& g : frontier)
            for (const Mat& s : gens) {
                Mat h = s * g;
                if (seen.insert(h.a).second) {
                    all.push_back(h);
                    next.push_back(std::move(h));
                }
            }
        if (all.size() > 1000000) throw ClosureBoundExceeded("reflection group closure bound");
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Mat& x, const Mat& y) { return x.a < y.a; });
    return all;
}

} // namespace detail

/// Computes the restricted root datum of a pair whose Cartan subspace lies
/// in the even part of p, is abelian, and acts semisimply.
inline RootDatum restricted_roots(const SymmetricSuperpair& sp) {
    CartanReport rep = validate_cartan(sp);
    if (!rep.a_in_p0) throw BadCartan("cartan subspace does not lie in the even part of p");
    if (!rep.abelian) throw BadCartan("cartan subspace is not abelian");
    if (!rep.semisimple) throw BadCartan("cartan subspace does not act semisimply");

    RootDatum rd;
    rd.rank = sp.rank();
    rd.gram = sp.cartan_gram();
    Mat gram_inv = inverse(rd.gram);

    auto spaces = weight_spaces(sp.g, sp.cartan);
    std::set<std::vector<Rat>> sigma0;
    for (const auto& ws : spaces)
        if (!ws.odd && !is_zero_vec(ws.weight)) sigma0.insert(ws.weight);

    for (auto& ws : spaces) {
        if (is_zero_vec(ws.weight)) continue;
        RestrictedRoot r;
        r.weight = ws.weight;
        r.odd = ws.odd;
        r.multiplicity = ws.space.dim();
        r.space = std::move(ws.space);
        r.coroot = gram_inv * r.weight;
        r.anisotropic = dot(r.weight, r.coroot) != 0;
        for (const Rat& c : r.weight) {
            if (c == 0) continue;
            r.positive = c > 0;
            break;
        }
        if (r.odd) {
            std::vector<Rat> dbl = r.weight;
            for (Rat& c : dbl) c *= 2;
            r.in_sigma_bar = sigma0.count(r.weight) == 0 && sigma0.count(dbl) == 0;
        }
        rd.roots.push_back(std::move(r));
    }
    std::sort(rd.roots.begin(), rd.roots.end(),
              [](const RestrictedRoot& x, const RestrictedRoot& y) {
                  if (x.odd != y.odd) return !x.odd;
                  return x.weight < y.weight;
              });

    std::vector<Mat> gens;
    for (const auto& r : rd.roots) {
        if (r.odd || !r.anisotropic) continue;
        Rat self = dot(r.weight, r.coroot);
        Mat s = Mat::identity(rd.rank);
        for (std::size_t i = 0; i < rd.rank; ++i)
            for (std::size_t j = 0; j < rd.rank; ++j)
                s.at(i, j) -= Rat(2) / self * r.coroot[i] * r.weight[j];
        gens.push_back(std::move(s));
    }
    rd.weyl = detail::group_closure(std::move(gens), rd.rank);
    return rd;
}

/// Deterministic Cartan coordinate vectors (t, t^2, ..., t^rank) on which
/// no restricted root vanishes, for t = 1, 2, ...
inline std::vector<std::vector<Rat>> super_regular_points(const RootDatum& rd,
                                                          std::size_t count) {
    std::vector<std::vector<Rat>> out;
    if (rd.rank == 0) {
        out.assign(count, {});
        return out;
    }
    for (long t = 1; out.size() < count; ++t) {
        std::vector<Rat> h(rd.rank);
        Rat pw = 1;
        for (std::size_t i = 0; i < rd.rank; ++i) {
            pw *= t;
            h[i] = pw;
        }
        bool ok = true;
        for (const auto& r : rd.roots)
            if (dot(r.weight, h) == 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(h));
    }
    return out;
}

/// Darboux basis of an odd root space under the pairing c(x, x') = b(x, theta x'),
/// split into the k-parts y and the p-parts z of each Darboux vector.
struct SymplecticBasis {
    std::vector<std::vector<Rat>> y, z;    // from the first vector of each pair
    std::vector<std::vector<Rat>> yt, zt;  // from the second vector

    std::size_t pairs() const { return y.size(); }
};

/// Builds a Darboux basis x_i, xt_i of the odd root space, normalized so
/// c(x_i, xt_j) = 2 delta_ij, and returns the symmetrized vectors
/// y = (x + theta x)/2, z = (x - theta x)/2 and their partners.
inline SymplecticBasis symplectic_basis(const SymmetricSuperpair& sp,
                                        const RestrictedRoot& root) {
    if (!root.odd) throw BadForm("symplectic basis requires an odd root");
    auto c = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        return sp.g.form_value(u, sp.theta * v);
    };
    std::vector<std::vector<Rat>> rem;
    for (std::size_t j = 0; j < root.space.dim(); ++j)
        rem.push_back(root.space.basis_vector(j));
    SymplecticBasis out;
    while (!rem.empty()) {
        std::vector<Rat> x1 = std::move(rem.front());
        rem.erase(rem.begin());
        if (c(x1, x1) != 0) throw BadForm("pairing on the root space is not alternating");
        std::size_t w = rem.size();
        for (std::size_t i = 0; i < rem.size(); ++i)
            if (c(x1, rem[i]) != 0) {
                w = i;
                break;
            }
        if (w == rem.size()) throw BadForm("degenerate pairing on the root space");
        Rat scale = Rat(2) / c(x1, rem[w]);
        std::vector<Rat> xt1 = std::move(rem[w]);
        for (Rat& e : xt1) e *= scale;
        rem.erase(rem.begin() + w);
        for (auto& u : rem) {
            Rat al = c(u, xt1) / 2;
            Rat be = -c(u, x1) / 2;
            for (std::size_t i = 0; i < u.size(); ++i) u[i] -= al * x1[i] + be * xt1[i];
        }
        auto tx1 = sp.theta * x1;
        auto txt1 = sp.theta * xt1;
        std::vector<Rat> y(x1.size()), z(x1.size()), yt(x1.size()), zt(x1.size());
        for (std::size_t i = 0; i < x1.size(); ++i) {
            y[i] = (x1[i] + tx1[i]) / 2;
            z[i] = (x1[i] - tx1[i]) / 2;
            yt[i] = (xt1[i] + txt1[i]) / 2;
            zt[i] = (xt1[i] - txt1[i]) / 2;
        }
        out.y.push_back(std::move(y));
        out.z.push_back(std::move(z));
        out.yt.push_back(std::move(yt));
        out.zt.push_back(std::move(zt));
    }
    return out;
}

} // namespace sympair
