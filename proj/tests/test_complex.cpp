#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scx/complex.hpp"
#include "support/oracles.hpp"

using namespace scx;

TEST_CASE("simplex basics") {
    Simplex s({1, 2, 3});
    CHECK(s.dimension() == 2);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(4));
    CHECK(Simplex::from_set({3, 1, 2, 2}) == s);
    CHECK_THROWS_AS(Simplex({2, 1}), Error);
    CHECK_THROWS_AS(Simplex({-1}), Error);
    CHECK_THROWS_AS(Simplex({1, 1}), Error);

    auto facets = s.facets();
    REQUIRE(facets.size() == 3);
    CHECK(facets[0] == Simplex({2, 3}));
    CHECK(facets[1] == Simplex({1, 3}));
    CHECK(facets[2] == Simplex({1, 2}));
}

TEST_CASE("boundary signs follow (-1)^i") {
    Simplex t({1, 2, 3});
    CHECK(boundary_sign(Simplex({1, 3}), t) == -1);
    CHECK(boundary_sign(Simplex({2, 3}), t) == 1);
    CHECK(boundary_sign(Simplex({1, 2}), t) == 1);
    CHECK_THROWS_AS(boundary_sign(Simplex({4}), Simplex({1, 2})), Error);
    CHECK_THROWS_AS(boundary_sign(Simplex({1}), t), Error);
}

TEST_CASE("build_complex closes a triangle downward") {
    auto k = build_complex({{1, 2, 3}});
    CHECK(k.dimension() == 2);
    CHECK(k.num_faces(0) == 3);
    CHECK(k.num_faces(1) == 3);
    CHECK(k.num_faces(2) == 1);
    for (int d = 0; d <= 2; ++d)
        for (const auto& w : k.weights(d)) CHECK(w == 1);
}

TEST_CASE("build_complex reproduces the five-vertex fixture") {
    auto k = test::fig1_complex();
    CHECK(k.num_faces(0) == 5);
    CHECK(k.num_faces(1) == 5);
    CHECK(k.num_faces(2) == 1);
    // Lexicographic edge basis: 12, 13, 23, 34, 35.
    CHECK(k.faces(1)[0] == Simplex({1, 2}));
    CHECK(k.faces(1)[1] == Simplex({1, 3}));
    CHECK(k.faces(1)[2] == Simplex({2, 3}));
    CHECK(k.faces(1)[3] == Simplex({3, 4}));
    CHECK(k.faces(1)[4] == Simplex({3, 5}));
}

TEST_CASE("build_complex edge cases") {
    auto empty = build_complex({});
    CHECK(empty.empty());
    CHECK(empty.dimension() == -1);
    CHECK(empty.num_faces(0) == 0);

    CHECK_THROWS_AS(build_complex({{}}), Error);
    CHECK_THROWS_AS(
        build_complex({{1, 2}}, {{Simplex({1, 2}), Rational(-1)}}), Error);

    auto weighted = build_complex({{1, 2}}, {{Simplex({1}), Rational(1, 3)}});
    CHECK(weighted.weight(Simplex({1})) == Rational(1, 3));
    CHECK(weighted.weight(Simplex({2})) == 1);
}

TEST_CASE("downward closure holds for every face") {
    auto k = build_complex({{1, 2, 3}, {2, 3, 4}, {4, 5}});
    for (int d = 1; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d))
            for (const auto& facet : f.facets()) CHECK(k.has_face(facet));
}

TEST_CASE("skeleton drops the triangle and keeps weights") {
    auto k = test::fig1_complex();
    auto sk = skeleton(k, 1);
    CHECK(sk.dimension() == 1);
    CHECK(sk.num_faces(1) == 5);
    CHECK(sk.num_faces(0) == 5);
    CHECK(skeleton(k, k.dimension()) == k);

    auto sk0 = skeleton(build_complex({{1, 2, 3}}), 0);
    CHECK(sk0.dimension() == 0);
    CHECK(sk0.num_faces(0) == 3);
}

TEST_CASE("is_subcomplex compares faces and weights") {
    auto k = test::fig1_complex();
    auto h = build_complex({{1, 2}});
    CHECK(is_subcomplex(h, k));
    CHECK(is_subcomplex(k, k));
    auto heavy = build_complex({{1, 2}}, {{Simplex({1, 2}), Rational(2)}});
    CHECK_FALSE(is_subcomplex(heavy, k));
    auto outside = build_complex({{1, 6}});
    CHECK_FALSE(is_subcomplex(outside, k));
}

TEST_CASE("proper difference of a hollow triangle and one edge") {
    auto k = build_complex({{1, 2}, {1, 3}, {2, 3}});
    auto h = build_complex({{1, 2}}, {{Simplex({1}), Rational(0)}, {Simplex({2}), Rational(0)}},
                           1, true);
    auto l = proper_difference(k, h);
    CHECK(l.degenerate_allowed());
    CHECK(l.weight(Simplex({1, 2})) == 0);
    CHECK(l.weight(Simplex({1, 3})) == 1);
    CHECK(l.weight(Simplex({1})) == 1);

    auto lp = nonzero_part(l);
    CHECK(lp.num_faces(1) == 2);
    CHECK(lp.num_faces(0) == 3);
    CHECK_FALSE(lp.has_face(Simplex({1, 2})));
}

TEST_CASE("difference with empty H returns K") {
    auto k = test::fig1_complex();
    auto l = proper_difference(k, WeightedComplex());
    for (int d = 0; d <= k.dimension(); ++d) {
        CHECK(l.faces(d) == k.faces(d));
        CHECK(l.weights(d) == k.weights(d));
    }
}

TEST_CASE("difference whose positive part is not closed is rejected") {
    auto k = build_complex({{1, 2, 3}});
    auto h = build_complex({{1, 2}}, {{Simplex({1}), Rational(0)}, {Simplex({2}), Rational(0)}},
                           1, true);
    CHECK_THROWS_AS(proper_difference(k, h), Error);
    auto not_sub = build_complex({{1, 2}}, {{Simplex({1, 2}), Rational(5)}});
    CHECK_THROWS_AS(proper_difference(k, not_sub), Error);
}

TEST_CASE("adding H back restores the weights exactly") {
    auto k = build_complex({{1, 2, 3}, {3, 4}},
                           {{Simplex({1, 2, 3}), Rational(2, 3)},
                            {Simplex({3, 4}), Rational(5, 7)}});
    auto h = build_complex({{1, 2}},
                           {{Simplex({1, 2}), Rational(1, 2)},
                            {Simplex({1}), Rational(1, 5)},
                            {Simplex({2}), Rational(0)}},
                           0, true);
    auto l = proper_difference(k, h);
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d)) {
            Rational back = l.weight(f) + (h.has_face(f) ? h.weight(f) : Rational(0));
            CHECK(back == k.weight(f));
        }
}

TEST_CASE("nonzero_part edge cases") {
    auto k = test::fig1_complex();
    CHECK(nonzero_part(k) == k);

    auto zeroed = k.with_constant_weights(0);
    auto lp = nonzero_part(zeroed);
    CHECK(lp.empty());
}

TEST_CASE("n-path connectivity") {
    CHECK(is_n_path_connected(test::cycle_complex(6), 0));
    auto disjoint = build_complex({{1, 2}, {3, 4}});
    CHECK_FALSE(is_n_path_connected(disjoint, 0));
    auto single = build_complex({{1, 2, 3}});
    CHECK(is_n_path_connected(single, 1));
    CHECK(is_n_path_connected(single, 5));  // vacuous above the dimension
}

TEST_CASE("1-skeleton connectivity") {
    CHECK(is_connected(test::cycle_complex(5)));
    CHECK_FALSE(is_connected(build_complex({{1, 2}, {3, 4}})));
    CHECK(is_connected(build_complex({{7}})));
    CHECK(is_connected(WeightedComplex()));
}
