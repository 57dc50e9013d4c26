#include <catch2/catch_amalgamated.hpp>

#include "sympair/weights.hpp"

using namespace sympair;

namespace {
Rat q(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}
}

TEST_CASE("polynomial helpers") {
    Poly p = {q(2), q(-3), q(1)}; // (x-1)(x-2)
    Poly d = poly_derivative(p);
    REQUIRE(d == Poly{q(-3), q(2)});
    REQUIRE(poly_eval(p, q(1)) == 0);
    REQUIRE(poly_eval(p, q(3)) == 2);
    Poly g = poly_gcd(p, Poly{q(-1), q(1)}); // gcd with (x-1)
    REQUIRE(g == Poly{q(-1), q(1)});
    Poly l = poly_lcm(Poly{q(-1), q(1)}, Poly{q(-2), q(1)});
    REQUIRE(l == p);
}

TEST_CASE("rational root extraction") {
    // x(x+3)(x - 1/2) = x^3 + (5/2)x^2 - (3/2)x
    Poly p = {q(0), q(-3, 2), q(5, 2), q(1)};
    auto [roots, rest] = rational_roots(p);
    REQUIRE(rest.size() <= 1);
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots == std::vector<Rat>{q(-3), q(0), q(1, 2)});

    // x^2 + 1 has no rational roots.
    auto [r2, rest2] = rational_roots(Poly{q(1), q(0), q(1)});
    REQUIRE(r2.empty());
    REQUIRE(rest2.size() == 3);
}

TEST_CASE("minimal polynomial") {
    Mat d = Mat::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}});
    REQUIRE(minimal_polynomial(d) == Poly{q(2), q(-3), q(1)});
    Mat n = Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}});
    REQUIRE(minimal_polynomial(n) == Poly{q(0), q(0), q(1)});
    REQUIRE(minimal_polynomial(Mat::identity(4)) == Poly{q(-1), q(1)});
}

TEST_CASE("eigen decomposition") {
    SECTION("split diagonalizable") {
        Mat d = Mat::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}});
        auto eig = eigen_decomposition(d);
        REQUIRE(eig.size() == 2);
        REQUIRE(eig[0].first == 1);
        REQUIRE(eig[0].second.dim() == 2);
        REQUIRE(eig[1].first == 2);
        REQUIRE(eig[1].second.dim() == 1);
    }
    SECTION("half integer eigenvalues") {
        Mat m = Mat::from_rows({{q(0), q(1, 4)}, {q(1), q(0)}});
        auto eig = eigen_decomposition(m);
        REQUIRE(eig.size() == 2);
        REQUIRE(eig[0].first == q(-1, 2));
        REQUIRE(eig[1].first == q(1, 2));
    }
    SECTION("failure modes") {
        Mat rot = Mat::from_rows({{q(0), q(-1)}, {q(1), q(0)}});
        REQUIRE_THROWS_AS(eigen_decomposition(rot), NonRationalSpectrum);
        Mat nil = Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}});
        REQUIRE_THROWS_AS(eigen_decomposition(nil), NotDiagonalizable);
    }
}

TEST_CASE("simultaneous weight spaces") {
    Mat a = Mat::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}});
    Mat b = Mat::from_rows({{q(3), q(0), q(0)}, {q(0), q(4), q(0)}, {q(0), q(0), q(4)}});
    auto ws = simultaneous_weight_spaces({a, b}, 3);
    REQUIRE(ws.size() == 3);
    // Ascending refinement order: (1,3), (1,4), (2,4).
    REQUIRE(ws[0].first == std::vector<Rat>{q(1), q(3)});
    REQUIRE(ws[0].second.contains({q(1), q(0), q(0)}));
    REQUIRE(ws[1].first == std::vector<Rat>{q(1), q(4)});
    REQUIRE(ws[2].first == std::vector<Rat>{q(2), q(4)});

    SECTION("no operators: single full weight space") {
        auto none = simultaneous_weight_spaces({}, 5);
        REQUIRE(none.size() == 1);
        REQUIRE(none[0].first.empty());
        REQUIRE(none[0].second == Subspace::full(5));
    }
    SECTION("noncommuting operators rejected") {
        Mat x = Mat::from_rows({{q(0), q(1)}, {q(0), q(0)}});
        Mat y = Mat::from_rows({{q(1), q(0)}, {q(0), q(-1)}});
        REQUIRE_THROWS_AS(simultaneous_weight_spaces({x, y}, 2), NonCommuting);
    }
}
