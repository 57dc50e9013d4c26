#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "sympair/roots.hpp"

using namespace sympair;

namespace {
Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rat> wv(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(q(x));
    return v;
}

// Checks the Darboux normalization and the bracket relations with every
// Cartan basis vector.
void check_symplectic(const SymmetricSuperpair& sp, const RestrictedRoot& root) {
    SymplecticBasis sb = symplectic_basis(sp, root);
    REQUIRE(sb.pairs() * 2 == root.multiplicity);
    const auto& g = sp.g;
    for (std::size_t i = 0; i < sb.pairs(); ++i)
        for (std::size_t j = 0; j < sb.pairs(); ++j) {
            Rat d = i == j ? q(1) : q(0);
            REQUIRE(g.form_value(sb.y[i], sb.yt[j]) == d);
            REQUIRE(g.form_value(sb.zt[j], sb.z[i]) == d);
            REQUIRE(g.form_value(sb.y[i], sb.y[j]) == 0);
            REQUIRE(g.form_value(sb.z[i], sb.z[j]) == 0);
            REQUIRE(g.form_value(sb.yt[i], sb.yt[j]) == 0);
            REQUIRE(g.form_value(sb.zt[i], sb.zt[j]) == 0);
            REQUIRE(g.form_value(sb.y[i], sb.z[j]) == 0);
            REQUIRE(g.form_value(sb.y[i], sb.zt[j]) == 0);
            REQUIRE(g.form_value(sb.yt[i], sb.z[j]) == 0);
        }
    for (std::size_t l = 0; l < sp.rank(); ++l) {
        Rat lam = root.weight[l];
        for (std::size_t i = 0; i < sb.pairs(); ++i) {
            auto scaled = [&](const std::vector<Rat>& v) {
                std::vector<Rat> s(v.size());
                for (std::size_t t = 0; t < v.size(); ++t) s[t] = lam * v[t];
                return s;
            };
            REQUIRE(g.bracket(sp.cartan[l], sb.y[i]) == scaled(sb.z[i]));
            REQUIRE(g.bracket(sp.cartan[l], sb.z[i]) == scaled(sb.y[i]));
            REQUIRE(g.bracket(sp.cartan[l], sb.yt[i]) == scaled(sb.zt[i]));
            REQUIRE(g.bracket(sp.cartan[l], sb.zt[i]) == scaled(sb.yt[i]));
        }
    }
}
} // namespace

TEST_CASE("generic weight spaces of gl(2)") {
    LieSuperalgebra g = build_gl(2, 0);
    std::vector<Rat> h1 = g.rep_coords({{0, 0, q(1)}});
    std::vector<Rat> h2 = g.rep_coords({{1, 1, q(1)}});
    auto ws = weight_spaces(g, {h1, h2});
    REQUIRE(ws.size() == 3);
    for (const auto& w : ws) {
        REQUIRE_FALSE(w.odd);
        if (w.weight == wv({0, 0})) REQUIRE(w.space.dim() == 2);
        else REQUIRE(w.space.dim() == 1);
    }
}

TEST_CASE("root datum of group gl(1|1)") {
    SymmetricSuperpair sp = group_gl_pair(1, 1);
    RootDatum rd = restricted_roots(sp);
    REQUIRE(rd.rank == 2);
    REQUIRE(rd.gram == Mat::from_rows({{q(2), q(0)}, {q(0), q(-2)}}));
    REQUIRE(rd.roots.size() == 2);

    const RestrictedRoot* r = rd.find(wv({1, -1}), true);
    REQUIRE(r != nullptr);
    REQUIRE(r->multiplicity == 2);
    REQUIRE(r->coroot == std::vector<Rat>{q(1, 2), q(1, 2)});
    REQUIRE_FALSE(r->anisotropic);
    REQUIRE(r->positive);
    REQUIRE(r->in_sigma_bar);

    const RestrictedRoot* m = rd.find(wv({-1, 1}), true);
    REQUIRE(m != nullptr);
    REQUIRE_FALSE(m->positive);
    REQUIRE(rd.find(wv({1, -1}), false) == nullptr);

    REQUIRE(rd.weyl_order() == 1);
    REQUIRE(rd.sigma_bar_positive().size() == 1);
    check_symplectic(sp, *r);
}

TEST_CASE("root datum of group osp(1|2)") {
    SymmetricSuperpair sp = group_osp_pair(1, 2);
    RootDatum rd = restricted_roots(sp);
    REQUIRE(rd.rank == 1);
    REQUIRE(rd.gram.at(0, 0) == q(-4));
    REQUIRE(rd.roots.size() == 4);

    const RestrictedRoot* e = rd.find(wv({2}), false);
    REQUIRE(e != nullptr);
    REQUIRE(e->multiplicity == 2);
    REQUIRE(e->coroot == std::vector<Rat>{q(-1, 2)});
    REQUIRE(e->anisotropic);

    const RestrictedRoot* o = rd.find(wv({1}), true);
    REQUIRE(o != nullptr);
    REQUIRE(o->multiplicity == 2);
    REQUIRE_FALSE(o->in_sigma_bar);  // its double is an even root
    REQUIRE(rd.sigma_bar_positive().empty());
    REQUIRE(rd.weyl_order() == 2);
    check_symplectic(sp, *o);
}

TEST_CASE("root datum of the gl block pair (1,1,1,1)") {
    SymmetricSuperpair sp = gl_block_pair(1, 1, 1, 1);
    RootDatum rd = restricted_roots(sp);
    REQUIRE(rd.rank == 2);
    REQUIRE(rd.roots.size() == 8);

    const RestrictedRoot* e1 = rd.find(wv({2, 0}), false);
    REQUIRE(e1 != nullptr);
    REQUIRE(e1->multiplicity == 1);
    REQUIRE(e1->coroot == std::vector<Rat>{q(1), q(0)});
    REQUIRE(e1->anisotropic);

    const RestrictedRoot* e2 = rd.find(wv({0, 2}), false);
    REQUIRE(e2 != nullptr);
    REQUIRE(e2->multiplicity == 1);
    REQUIRE(e2->coroot == std::vector<Rat>{q(0), q(-1)});
    REQUIRE(e2->anisotropic);

    const RestrictedRoot* o1 = rd.find(wv({1, 1}), true);
    const RestrictedRoot* o2 = rd.find(wv({1, -1}), true);
    REQUIRE(o1 != nullptr);
    REQUIRE(o2 != nullptr);
    REQUIRE(o1->multiplicity == 2);
    REQUIRE(o2->multiplicity == 2);
    REQUIRE(o1->coroot == std::vector<Rat>{q(1, 2), q(-1, 2)});
    REQUIRE(o2->coroot == std::vector<Rat>{q(1, 2), q(1, 2)});
    REQUIRE_FALSE(o1->anisotropic);
    REQUIRE_FALSE(o2->anisotropic);
    REQUIRE(o1->in_sigma_bar);
    REQUIRE(o2->in_sigma_bar);
    REQUIRE(rd.sigma_bar_positive().size() == 2);

    REQUIRE(rd.weyl_order() == 4);
    for (long s1 : {-1L, 1L})
        for (long s2 : {-1L, 1L}) {
            Mat m = Mat::from_rows({{q(s1), q(0)}, {q(0), q(s2)}});
            REQUIRE(std::find(rd.weyl.begin(), rd.weyl.end(), m) != rd.weyl.end());
        }

    check_symplectic(sp, *o1);
    check_symplectic(sp, *o2);

    // t = 1 is not super-regular here because (1,-1) vanishes on (1,1).
    auto pts = super_regular_points(rd, 3);
    REQUIRE(pts[0] == wv({2, 4}));
    REQUIRE(pts[1] == wv({3, 9}));
    REQUIRE(pts[2] == wv({4, 16}));
}

TEST_CASE("root datum of the c-special pairs") {
    SECTION("q = 1") {
        SymmetricSuperpair sp = c_special_pair(1);
        RootDatum rd = restricted_roots(sp);
        REQUIRE(rd.rank == 1);
        REQUIRE(rd.gram.at(0, 0) == q(1, 2));
        REQUIRE(rd.roots.size() == 2);
        const RestrictedRoot* r = rd.find({q(1, 2)}, true);
        REQUIRE(r != nullptr);
        REQUIRE(r->multiplicity == 2);
        REQUIRE(r->coroot == std::vector<Rat>{q(1)});
        REQUIRE(r->anisotropic);
        REQUIRE(r->positive);
        REQUIRE(r->in_sigma_bar);
        REQUIRE(rd.weyl_order() == 1);
        check_symplectic(sp, *r);
        auto pts = super_regular_points(rd, 3);
        REQUIRE(pts == std::vector<std::vector<Rat>>{wv({1}), wv({2}), wv({3})});
    }
    SECTION("q = 2") {
        SymmetricSuperpair sp = c_special_pair(2);
        RootDatum rd = restricted_roots(sp);
        REQUIRE(rd.roots.size() == 2);
        const RestrictedRoot* r = rd.find({q(1, 2)}, true);
        REQUIRE(r != nullptr);
        REQUIRE(r->multiplicity == 4);
        REQUIRE(r->in_sigma_bar);
        check_symplectic(sp, *r);
    }
}

TEST_CASE("restricted roots reject a cartan outside p0") {
    LieSuperalgebra g = build_gl(1, 1);
    std::vector<Rat> h = g.rep_coords({{0, 0, q(1)}});
    SymmetricSuperpair sp = build_pair(g, Mat::identity(4), {h});
    REQUIRE_THROWS_AS(restricted_roots(sp), BadCartan);
}
