#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scx/collapse.hpp"
#include "scx/simplicial_map.hpp"
#include "scx/spectrum.hpp"
#include "support/oracles.hpp"

using namespace scx;

namespace {

// Hexagon over vertices 0..5 mapped onto the hollow triangle 6,7,8 mod 3.
SimplicialMap hexagon_to_triangle() {
    auto c6 = test::cycle_complex(6);
    auto c3 = build_complex({{6, 7}, {6, 8}, {7, 8}});
    std::map<int, int> vm;
    for (int v = 0; v < 6; ++v) vm[v] = 6 + v % 3;
    return SimplicialMap(c6, c3, vm);
}

// Path 1-2-3-4-5 over the triangle-plus-pendant target of the published
// counterexample.
SimplicialMap p5_to_triangle_pendant() {
    auto p5 = build_complex({{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto tpp = build_complex({{11, 12}, {12, 13}, {11, 13}, {11, 15}});
    std::map<int, int> vm{{1, 11}, {4, 11}, {2, 12}, {3, 13}, {5, 15}};
    return SimplicialMap(p5, tpp, vm);
}

SimplicialMap identity_map(const WeightedComplex& k) {
    std::map<int, int> vm;
    for (const auto& v : k.faces(0)) vm[v.vertex(0)] = v.vertex(0);
    return SimplicialMap(k, k, vm);
}

}  // namespace

TEST_CASE("face images carry permutation-parity signs") {
    auto src = build_complex({{1, 2, 3}});
    auto dst = build_complex({{4, 5, 6}});
    // 1->5, 2->4, 3->6: one transposition, odd.
    SimplicialMap phi(src, dst, {{1, 5}, {2, 4}, {3, 6}});
    auto img = phi.image(Simplex({1, 2, 3}));
    CHECK(img.image == Simplex({4, 5, 6}));
    CHECK(img.sign == -1);
    CHECK(phi.image(Simplex({1, 3})).sign == 1);
    CHECK(phi.image(Simplex({1, 2})).sign == -1);

    // Collapsed faces map to zero.
    auto edge = build_complex({{1, 2}});
    auto pt = build_complex({{9}});
    SimplicialMap collapse(edge, pt, {{1, 9}, {2, 9}});
    CHECK(collapse.image(Simplex({1, 2})).sign == 0);
}

TEST_CASE("simplicial map validation") {
    auto src = build_complex({{1, 2}});
    auto dst = build_complex({{4}, {5}});
    CHECK_THROWS_AS(SimplicialMap(src, dst, {{1, 4}, {2, 5}}), Error);  // image not a face
    CHECK_THROWS_AS(SimplicialMap(src, dst, {{1, 4}}), Error);          // vertex unmapped
}

TEST_CASE("rule ii weights on the hexagon covering") {
    auto phi = hexagon_to_triangle();
    auto induced = apply_map(phi, WeightRule::rule_ii);
    for (const auto& e : induced.faces(1)) CHECK(induced.weight(e) == 2);
    for (const auto& v : induced.faces(0)) CHECK(induced.weight(v) == 2);
}

TEST_CASE("identity map keeps weights under both rules") {
    auto k = build_complex({{1, 2, 3}, {3, 4}},
                           {{Simplex({1, 2, 3}), Rational(2, 5)},
                            {Simplex({3, 4}), Rational(7, 3)}});
    auto phi = identity_map(k);
    for (WeightRule rule : {WeightRule::rule_ii, WeightRule::rule_i}) {
        auto induced = apply_map(phi, rule);
        for (int d = 0; d <= k.dimension(); ++d)
            for (const auto& f : k.faces(d)) CHECK(induced.weight(f) == k.weight(f));
    }
}

TEST_CASE("edge contraction bookkeeping on the hollow triangle") {
    auto c3 = build_complex({{1, 2}, {1, 3}, {2, 3}});
    auto target = build_complex({{1, 3}});
    SimplicialMap phi(c3, target, {{1, 1}, {2, 1}, {3, 3}});
    auto induced = apply_map(phi, WeightRule::rule_ii);
    // Edges 13 and 23 merge; the collapsed edge 12 contributes only under rule i.
    CHECK(induced.weight(Simplex({1, 3})) == 2);
    CHECK(induced.weight(Simplex({1})) == 2);
    CHECK(induced.weight(Simplex({3})) == 1);

    auto normalized = normalize_weights(c3);
    SimplicialMap phin(normalized, target, {{1, 1}, {2, 1}, {3, 3}});
    auto rule_i = apply_map(phin, WeightRule::rule_i);
    // Vertex weights 2, edge weights 1: w(1) = 2+2-1 = 3, w(3) = 2, edge = 2.
    CHECK(rule_i.weight(Simplex({1})) == 3);
    CHECK(rule_i.weight(Simplex({3})) == 2);
    CHECK(rule_i.weight(Simplex({1, 3})) == 2);
}

TEST_CASE("rule i rejects negative induced weights") {
    // A heavy collapsing edge makes the subtraction overshoot.
    auto k = build_complex({{1, 2}}, {{Simplex({1, 2}), Rational(5)}});
    auto pt = build_complex({{9}});
    SimplicialMap phi(k, pt, {{1, 9}, {2, 9}});
    CHECK_THROWS_AS(apply_map(phi, WeightRule::rule_i), Error);
}

TEST_CASE("rule ii conserves total weight per dimension") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        auto k = build_complex({{0, 1, 2}, {1, 2, 3}, {3, 4}, {2, 4}});
        const auto faces0 = k.faces(0);
        for (int d = 0; d <= k.dimension(); ++d) {
            const auto level = k.faces(d);
            for (const auto& f : level) k = k.with_weight(f, Rational(num(rng), num(rng)));
        }
        // Merge a random vertex pair.
        int a = int(rng() % faces0.size()), b = int(rng() % faces0.size());
        std::map<int, int> vm;
        for (const auto& v : k.faces(0)) vm[v.vertex(0)] = v.vertex(0);
        vm[faces0[size_t(std::max(a, b))].vertex(0)] = faces0[size_t(std::min(a, b))].vertex(0);
        SimplicialMap phi(k, image_complex(k, vm), vm);
        auto induced = apply_map(phi, WeightRule::rule_ii);
        for (int d = 0; d <= k.dimension(); ++d) {
            Rational total_source = 0, total_target = 0;
            for (const auto& f : k.faces(d))
                if (phi.image(f).image.dimension() == d) total_source += k.weight(f);
            for (const auto& w : induced.weights(d)) total_target += w;
            CHECK(total_source == total_target);
        }
    }
}

TEST_CASE("cochain pullback preserves the inner product under rule ii") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(-4, 4);
    auto phi = hexagon_to_triangle();
    auto induced = apply_map(phi, WeightRule::rule_ii);
    for (int trial = 0; trial < 10; ++trial)
        for (int d = 0; d <= 1; ++d) {
            // Random rational cochain on the target.
            std::map<Simplex, Rational> g;
            for (const auto& f : induced.faces(d)) g[f] = Rational(num(rng), 3);
            Rational gg = 0;
            for (const auto& f : induced.faces(d)) gg += induced.weight(f) * g[f] * g[f];
            Rational pullback = 0;
            for (const auto& f : phi.source().faces(d)) {
                auto img = phi.image(f);
                if (img.sign == 0) continue;
                Rational value = Rational(img.sign) * g[img.image];
                pullback += phi.source().weight(f) * value * value;
            }
            CHECK(pullback == gg);
        }
}

TEST_CASE("covering detection on the published examples") {
    CHECK(is_covering(hexagon_to_triangle()));
    CHECK(is_covering(p5_to_triangle_pendant()));

    auto edge = build_complex({{1, 2}});
    auto pt = build_complex({{9}});
    SimplicialMap constant(edge, pt, {{1, 9}, {2, 9}});
    CHECK_FALSE(is_covering(constant));

    auto disconnected = build_complex({{1, 2}, {3, 4}});
    auto target = build_complex({{1, 2}});
    SimplicialMap from_disconnected(disconnected, target,
                                    {{1, 1}, {2, 2}, {3, 1}, {4, 2}});
    CHECK_THROWS_AS(is_covering(from_disconnected), Error);
}

TEST_CASE("strong covering distinguishes the two published coverings") {
    CHECK(is_strong_covering(hexagon_to_triangle()));
    CHECK_FALSE(is_strong_covering(p5_to_triangle_pendant()));
    auto k = test::fig1_complex();
    CHECK(is_strong_covering(identity_map(k)));

    SimplicialMap not_cover(build_complex({{1, 2}}), build_complex({{9}}),
                            {{1, 9}, {2, 9}});
    CHECK_THROWS_AS(is_strong_covering(not_cover), Error);
}

TEST_CASE("covering degree") {
    CHECK(covering_degree(hexagon_to_triangle()) == 2);
    CHECK(covering_degree(identity_map(test::fig1_complex())) == 1);
    CHECK_THROWS_AS(covering_degree(p5_to_triangle_pendant()), Error);

    // Disjoint double cover of an edge path: degree counting works even
    // though the source fails the connectivity clause of is_covering.
    auto source = build_complex({{1, 2}, {2, 3}, {11, 12}, {12, 13}});
    auto path = build_complex({{20, 21}, {21, 22}});
    SimplicialMap twin(source, path,
                       {{1, 20}, {2, 21}, {3, 22}, {11, 20}, {12, 21}, {13, 22}});
    CHECK(covering_degree(twin) == 2);
    CHECK_THROWS_AS(is_covering(twin), Error);
}

TEST_CASE("strong coverings induce constant multiples of constant weights") {
    auto phi = hexagon_to_triangle();
    auto induced = apply_map(phi, WeightRule::rule_ii);
    const int degree = covering_degree(phi);
    for (int d = 0; d <= induced.dimension(); ++d)
        for (const auto& f : induced.faces(d))
            CHECK(induced.weight(f) == Rational(degree));
}

TEST_CASE("elementary collapse of the five-vertex fixture") {
    auto k = test::fig1_complex();
    auto collapsed = elementary_collapse(k, Simplex({1, 2, 3}), Simplex({1, 2}));
    CHECK(collapsed.dimension() == 1);
    CHECK(collapsed.num_faces(1) == 4);
    CHECK(collapsed.has_face(Simplex({1, 3})));
    CHECK(collapsed.has_face(Simplex({2, 3})));
    CHECK(collapsed.has_face(Simplex({3, 4})));
    CHECK(collapsed.has_face(Simplex({3, 5})));
    CHECK_FALSE(collapsed.has_face(Simplex({1, 2})));
}

TEST_CASE("collapse of a path endpoint") {
    auto p3 = build_complex({{1, 2}, {2, 3}});
    auto collapsed = elementary_collapse(p3, Simplex({2, 3}), Simplex({3}));
    CHECK(collapsed.num_faces(0) == 2);
    CHECK(collapsed.num_faces(1) == 1);
    CHECK(collapsed.has_face(Simplex({1, 2})));
}

TEST_CASE("collapse rejects non-free pairs") {
    auto vertex = build_complex({{1}});
    CHECK_THROWS_AS(elementary_collapse(vertex, Simplex({1, 2}), Simplex({1})), Error);
    auto k = test::fig1_complex();
    // Edge 13 also bounds the triangle: vertex 1 is not free in it? Vertex 1
    // sits in edges 12 and 13, so (edge 12, vertex 1) is not a free pair.
    CHECK_THROWS_AS(elementary_collapse(k, Simplex({1, 2}), Simplex({1})), Error);
    // Edge 23 belongs to the triangle, so (triangle, edge 23) is free only for
    // edges not shared elsewhere; edge 23 has no other coface, so it is free.
    auto ok = elementary_collapse(k, Simplex({1, 2, 3}), Simplex({2, 3}));
    CHECK(ok.num_faces(1) == 4);
}

TEST_CASE("contraction of a square edge is type ii") {
    auto c4 = test::cycle_complex(4);  // vertices 0..3
    ContractionSpec spec{Simplex({0, 1}), Simplex({0}), Simplex({1})};
    auto result = elementary_contraction(c4, spec);
    CHECK(result.spec.type == 2);
    CHECK(result.spec.m == 0);
    CHECK_FALSE(result.spec.reducible_to_collapses);
    CHECK(result.complex.num_faces(0) == 3);
    CHECK(result.complex.num_faces(1) == 3);
}

TEST_CASE("contraction of a triangle edge is type i with m = 1") {
    auto c3 = build_complex({{1, 2}, {1, 3}, {2, 3}});
    ContractionSpec spec{Simplex({1, 2}), Simplex({1}), Simplex({2})};
    auto result = elementary_contraction(c3, spec);
    CHECK(result.spec.type == 1);
    CHECK(result.spec.m == 1);
    CHECK(result.complex.num_faces(0) == 2);
    CHECK(result.complex.num_faces(1) == 1);
}

TEST_CASE("contraction with a pendant facet reduces to collapses") {
    auto p3 = build_complex({{1, 2}, {2, 3}});
    ContractionSpec spec{Simplex({1, 2}), Simplex({1}), Simplex({2})};
    auto result = elementary_contraction(p3, spec);
    CHECK(result.spec.reducible_to_collapses);
}

TEST_CASE("contraction validates its hypotheses") {
    // Third facet of the contracted triangle with an outside coface.
    auto k = build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
    ContractionSpec spec{Simplex({1, 2, 3}), Simplex({1, 3}), Simplex({2, 3})};
    CHECK_THROWS_AS(elementary_contraction(k, spec), Error);

    // Triangle contraction where only the third facet has outside cofaces.
    auto ok = build_complex({{1, 2, 3}, {1, 3, 5}, {2, 3, 6}});
    ContractionSpec spec2{Simplex({1, 2, 3}), Simplex({1, 3}), Simplex({2, 3})};
    auto result = elementary_contraction(ok, spec2);
    CHECK(result.spec.type == 2);
    // The identified vertices are 2 (omitted by {1,3}) and 1 (omitted by {2,3}).
    CHECK(result.complex.has_face(Simplex({1, 3})));
    CHECK_FALSE(result.complex.has_face(Simplex({2, 3})));

    auto c4 = test::cycle_complex(4);
    ContractionSpec bad{Simplex({0, 1}), Simplex({0}), Simplex({0})};
    CHECK_THROWS_AS(elementary_contraction(c4, bad), Error);
}

TEST_CASE("contraction classification is exhaustive and exclusive") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const int v = 4 + int(rng() % 5);
        std::vector<std::vector<int>> edges;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (rng() % 100 < 55) edges.push_back({a, b});
        for (int a = 0; a < v; ++a) edges.push_back({a});
        auto g = build_complex(edges);
        if (g.dimension() != 1) continue;
        for (const auto& e : g.faces(1)) {
            ContractionSpec spec{e, Simplex({e.vertex(0)}), Simplex({e.vertex(1)})};
            auto result = elementary_contraction(g, spec);
            CHECK((result.spec.type == 1 || result.spec.type == 2));
            CHECK((result.spec.type == 1) == (result.spec.m > 0));
        }
    }
}
