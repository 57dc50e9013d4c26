#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <vector>

#include "sympair/invariants.hpp"
#include "sympair/pair.hpp"
#include "sympair/radial.hpp"

using namespace sympair;

namespace {
Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

struct Fixture {
    SymmetricSuperpair sp;
    RootDatum rd;
    PolyFrame f;
};

Fixture make_fixture(SymmetricSuperpair sp) {
    RootDatum rd = restricted_roots(sp);
    PolyFrame f = make_frame(sp, rd);
    return {std::move(sp), std::move(rd), std::move(f)};
}

SuperPoly ppow(const SuperPoly& p, std::size_t n) {
    SuperPoly out = poly_const(p.side, p.even_n, Rat(1));
    for (std::size_t s = 0; s < n; ++s) out = mul(p, out);
    return out;
}
} // namespace

TEST_CASE("restriction image dimensions for the c-special pairs") {
    struct Row {
        long qq;
        std::vector<std::size_t> dims;
    };
    for (const Row& row : {Row{1, {1, 0, 1, 1, 1, 1, 1}}, Row{2, {1, 0, 1, 0, 1, 1, 1}}}) {
        auto fx = make_fixture(c_special_pair(row.qq));
        ChevalleyReport rep = verify_chevalley(fx.f, 6);
        REQUIRE(rep.ok);
        REQUIRE(rep.degrees.size() == 7);
        for (std::size_t d = 0; d <= 6; ++d) {
            REQUIRE(rep.degrees[d].dim_image == row.dims[d]);
            REQUIRE(rep.degrees[d].dim_inv == row.dims[d]);
            REQUIRE(rep.degrees[d].dim_theoremB == row.dims[d]);
            REQUIRE(rep.degrees[d].equal);
            REQUIRE(rep.degrees[d].injective);
        }
    }
    REQUIRE(pair_label(c_special_pair(1)) == "c-special(q=1)");
}

TEST_CASE("restriction image for the group pairs") {
    auto gx = make_fixture(group_gl_pair(1, 1));
    ChevalleyReport rep = verify_chevalley(gx.f, 6);
    REQUIRE(rep.ok);
    REQUIRE(rep.degrees[1].dim_image == 1);
    REQUIRE(rep.degrees[2].dim_image == 2);
    // Degree two: basis xi1^2, xi0 xi1, xi0^2; membership encodes the
    // single linear condition cutting the image out of three dimensions.
    Subspace tb = theoremB_subspace(gx.f, 2);
    REQUIRE(tb.dim() == 2);
    REQUIRE(tb.contains({q(0), q(1), q(1)}));   // xi0^2 + xi0 xi1
    REQUIRE(tb.contains({q(1), q(1), q(0)}));   // xi0 xi1 + xi1^2
    REQUIRE(!tb.contains({q(0), q(0), q(1)}));  // xi0^2 alone
    REQUIRE(pair_label(gx.sp) == "group-gl(p=1,q=1)");

    auto ox = make_fixture(group_osp_pair(1, 2));
    REQUIRE(ox.rd.sigma_bar_positive().empty());
    ChevalleyReport orep = verify_chevalley(ox.f, 6);
    REQUIRE(orep.ok);
    std::vector<std::size_t> odims{1, 0, 1, 0, 1, 0, 1};
    for (std::size_t d = 0; d <= 6; ++d) {
        REQUIRE(orep.degrees[d].dim_image == odims[d]);
        REQUIRE(orep.degrees[d].dim_inv == odims[d]);
    }
}

TEST_CASE("invariants are purely even") {
    auto check = [](const PolyFrame& f, std::size_t dmax) {
        for (std::size_t d = 0; d <= dmax; ++d) {
            auto basis = monomials_of_degree(f.even_n, f.odd_n, d);
            Subspace inv = invariants_degree(f, d);
            for (std::size_t i = 0; i < inv.dim(); ++i) {
                auto v = inv.basis_vector(i);
                for (std::size_t b = 0; b < basis.size(); ++b)
                    if (basis[b].od.size() % 2) REQUIRE(v[b] == 0);
            }
        }
    };
    check(make_fixture(c_special_pair(1)).f, 4);
    check(make_fixture(group_gl_pair(1, 1)).f, 3);
}

TEST_CASE("generator powers and restrictions") {
    auto f1 = make_fixture(c_special_pair(1));
    SuperPoly p2 = c_special_generator(f1.f, 2);
    SuperPoly p3 = c_special_generator(f1.f, 3);
    auto basis3 = monomials_of_degree(f1.f.even_n, f1.f.odd_n, 3);
    REQUIRE(invariants_degree(f1.f, 3).contains(poly_coords(p3, basis3)));
    REQUIRE(f1.f.restrict_to_cartan(p3) == ppow(f1.f.var(Side::duals, 0), 3));
    REQUIRE(ppow(p2, 3) == ppow(p3, 2));

    auto f2 = make_fixture(c_special_pair(2));
    SuperPoly q2 = c_special_generator(f2.f, 2);
    SuperPoly q5 = c_special_generator(f2.f, 5);
    auto basis5 = monomials_of_degree(f2.f.even_n, f2.f.odd_n, 5);
    REQUIRE(invariants_degree(f2.f, 5).contains(poly_coords(q5, basis5)));
    REQUIRE(f2.f.restrict_to_cartan(q5) == ppow(f2.f.var(Side::duals, 0), 5));
    REQUIRE(ppow(q2, 5) == ppow(q5, 2));
}

TEST_CASE("invariants see only the even projection of a direction") {
    // Pairing an invariant with a direction d and evaluating at a
    // super-regular even point agrees with pairing it against the even
    // projection of d. Exercised on the two shipped pairs whose even part
    // strictly contains the Cartan subspace.
    auto check = [](Fixture fx) {
        auto pts = super_regular_points(fx.rd, 2);
        auto dirs = monomials_up_to(fx.f.even_n, fx.f.odd_n, 2);
        for (std::size_t d = 1; d <= 3; ++d) {
            auto basis = monomials_of_degree(fx.f.even_n, fx.f.odd_n, d);
            Subspace inv = invariants_degree(fx.f, d);
            for (std::size_t i = 0; i < inv.dim(); ++i) {
                SuperPoly p =
                    poly_from_coords(Side::duals, fx.f.even_n, basis, inv.basis_vector(i));
                for (const auto& pt : pts) {
                    std::vector<Rat> z = fx.sp.cartan_lift(pt);
                    for (const auto& m : dirs) {
                        SuperPoly dir = poly_term(Side::vectors, fx.f.even_n, m, q(1));
                        REQUIRE(realize(fx.f, p, dir, z) ==
                                realize(fx.f, p, gamma_z(fx.f, z, dir), z));
                    }
                }
            }
        }
    };
    check(make_fixture(group_osp_pair(1, 2)));
    check(make_fixture(gl_block_pair(1, 1, 1, 1)));
}
