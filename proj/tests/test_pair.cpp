#include <catch2/catch_amalgamated.hpp>

#include "sympair/pair.hpp"

using namespace sympair;

namespace {
Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}
} // namespace

TEST_CASE("group gl(1|1) pair") {
    SymmetricSuperpair sp = group_gl_pair(1, 1);
    REQUIRE(sp.g.dim() == 8);
    REQUIRE(sp.g.even_dim() == 4);
    REQUIRE(sp.k.dim() == 4);
    REQUIRE(sp.p.dim() == 4);
    REQUIRE(sp.p0.dim() == 2);
    REQUIRE(sp.p1.dim() == 2);
    REQUIRE(sp.rank() == 2);
    REQUIRE(sp.a == sp.p0);

    CartanReport rep = validate_cartan(sp);
    REQUIRE(rep.a_in_p0);
    REQUIRE(rep.abelian);
    REQUIRE(rep.semisimple);
    REQUIRE(rep.self_centralizing);
    REQUIRE(rep.odd_centralizer_zero);
    REQUIRE(rep.even_type());

    // Gram of the cartan basis {(E11,-E11), (E22,-E22)} under str + str.
    Mat gram = sp.cartan_gram();
    REQUIRE(gram == Mat::from_rows({{q(2), q(0)}, {q(0), q(-2)}}));
}

TEST_CASE("group osp(1|2) pair") {
    SymmetricSuperpair sp = group_osp_pair(1, 2);
    REQUIRE(sp.g.dim() == 10);
    REQUIRE(sp.g.even_dim() == 6);
    REQUIRE(sp.rank() == 1);
    REQUIRE(sp.p0.dim() == 3);
    REQUIRE(sp.p1.dim() == 2);
    REQUIRE(is_even_type(sp));
    // theta is the factor swap, so tr b(a1, a1) = 2 str(h^2) with h in sp(2).
    REQUIRE(sp.cartan_gram().at(0, 0) != 0);
}

TEST_CASE("gl block pair (1,1,1,1)") {
    SymmetricSuperpair sp = gl_block_pair(1, 1, 1, 1);
    REQUIRE(sp.g.dim() == 16);
    REQUIRE(sp.rank() == 2);
    REQUIRE(sp.p0.dim() == 4);
    REQUIRE(sp.p1.dim() == 4);
    REQUIRE(sp.k0.dim() == 4);
    REQUIRE(sp.k1.dim() == 4);
    REQUIRE(is_even_type(sp));
    REQUIRE(sp.cartan_gram() == Mat::from_rows({{q(2), q(0)}, {q(0), q(-2)}}));
}

TEST_CASE("gl block pair (2,1,1,2) fails only on the odd centralizer") {
    SymmetricSuperpair sp = gl_block_pair(2, 1, 1, 2);
    CartanReport rep = validate_cartan(sp);
    REQUIRE(rep.a_in_p0);
    REQUIRE(rep.abelian);
    REQUIRE(rep.semisimple);
    REQUIRE(rep.self_centralizing);
    REQUIRE_FALSE(rep.odd_centralizer_zero);
    REQUIRE_FALSE(rep.even_type());
}

TEST_CASE("osp block pair (1,1,2,2)") {
    SymmetricSuperpair sp = osp_block_pair(1, 1, 2, 2);
    // osp(2|4): even so(2) + sp(4) = 11, odd 8.
    REQUIRE(sp.g.dim() == 19);
    REQUIRE(sp.g.even_dim() == 11);
    REQUIRE(sp.rank() == 2);
    REQUIRE(is_even_type(sp));
    REQUIRE_THROWS_AS(osp_block_pair(1, 1, 1, 2), DimensionMismatch);
}

TEST_CASE("c-special pairs") {
    SECTION("q = 1") {
        SymmetricSuperpair sp = c_special_pair(1);
        REQUIRE(sp.g.dim() == 8);
        REQUIRE(sp.rank() == 1);
        REQUIRE(sp.p0.dim() == 1);
        REQUIRE(sp.a == sp.p0);
        REQUIRE(sp.k1.dim() == 2);
        REQUIRE(sp.p1.dim() == 2);
        REQUIRE(is_even_type(sp));
        // b(A, A) = str(diag(1/4, 1/4, 0, 0)) = 1/2.
        REQUIRE(sp.cartan_gram().at(0, 0) == q(1, 2));
    }
    SECTION("q = 2") {
        SymmetricSuperpair sp = c_special_pair(2);
        REQUIRE(sp.g.dim() == 19);
        REQUIRE(sp.rank() == 1);
        REQUIRE(sp.p0.dim() == 1);
        REQUIRE(sp.k1.dim() == 4);
        REQUIRE(sp.p1.dim() == 4);
        REQUIRE(is_even_type(sp));
    }
}

TEST_CASE("bad involutions rejected") {
    LieSuperalgebra g = build_gl(1, 1);
    // Not an involution.
    Mat t = Mat::identity(4);
    t.at(0, 0) = 2;
    REQUIRE_THROWS_AS(build_pair(g, t, {}), BadInvolution);
    // Involution but not an automorphism: flip E12 only.
    Mat t2 = Mat::identity(4);
    t2.at(2, 2) = -1;
    REQUIRE_THROWS_AS(build_pair(g, t2, {}), BadInvolution);
    // Parity mixing.
    Mat t3(4, 4);
    t3.at(0, 2) = 1;
    t3.at(2, 0) = 1;
    t3.at(1, 1) = 1;
    t3.at(3, 3) = 1;
    REQUIRE_THROWS_AS(build_pair(g, t3, {}), BadInvolution);
    // Dependent cartan vectors.
    Mat id = Mat::identity(4);
    std::vector<Rat> v = {q(1), q(0), q(0), q(0)};
    REQUIRE_THROWS_AS(build_pair(g, id, {v, v}), BadCartan);
}

TEST_CASE("even type grid matches the sign criterion") {
    // Small sample here; the full grid runs in the acceptance suite.
    struct Case {
        std::size_t p, q, r, s;
    };
    for (const auto& c : {Case{1, 0, 0, 1}, Case{1, 1, 0, 1}, Case{2, 1, 2, 1},
                          Case{0, 1, 1, 0}, Case{1, 0, 2, 0}}) {
        bool expect = (static_cast<long>(c.p) - static_cast<long>(c.q)) *
                          (static_cast<long>(c.r) - static_cast<long>(c.s)) >=
                      0;
        SymmetricSuperpair sp = gl_block_pair(c.p, c.q, c.r, c.s);
        REQUIRE(is_even_type(sp) == expect);
    }
}
