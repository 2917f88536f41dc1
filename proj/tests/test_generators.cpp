#include <doctest.h>

#include <set>

#include "qwrank/errors.hpp"
#include "qwrank/generators.hpp"

using namespace qwrank;

TEST_CASE("tree shape") {
    const DirectedGraph g = gen_tree(2, 5);
    CHECK(g.node_count() == 63);
    CHECK(g.edges().size() == 62);
    CHECK(g.in_weight(0) == 2.0);    // root receives its two children
    CHECK(g.out_weight(0) == 0.0);

    CHECK(gen_tree(3, 5).node_count() == 364);

    const DirectedGraph small = gen_tree(2, 1);
    REQUIRE(small.edges().size() == 2);
    CHECK(small.edges()[0] == Edge{1, 0, 1.0});
    CHECK(small.edges()[1] == Edge{2, 0, 1.0});
}

TEST_CASE("tree node structure") {
    const std::uint32_t b = 3;
    const DirectedGraph g = gen_tree(b, 4);
    std::vector<std::uint32_t> per_generation(5, 0);
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        ++per_generation[tree_generation(b, v)];
        if (v > 0) CHECK(g.out_weight(v) == 1.0);
    }
    std::uint32_t expected = 1;
    for (std::uint32_t gen = 0; gen <= 4; ++gen) {
        CHECK(per_generation[gen] == expected);
        expected *= b;
    }
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(gen_tree(1, 5), ParseError);
    CHECK_THROWS_AS(gen_tree(2, 0), ParseError);
    CHECK_THROWS_AS(gen_tree(2, 62), ParseError);    // node count would overflow
}

TEST_CASE("scale-free structure") {
    const std::uint32_t n = 32, m = 2;
    const DirectedGraph g = gen_scale_free(n, m, 7);
    CHECK(g.node_count() == n);
    // seed clique is complete
    for (std::uint32_t i = 0; i <= m; ++i)
        for (std::uint32_t j = 0; j <= m; ++j)
            if (i != j) {
                bool found = false;
                for (const Edge& e : g.edges()) found |= (e.src == i && e.dst == j);
                CHECK(found);
            }
    // each later node has m distinct unit out-edges to earlier nodes
    std::vector<std::set<std::uint32_t>> targets(n);
    for (const Edge& e : g.edges()) {
        if (e.src > m) {
            CHECK(e.dst < e.src);
            CHECK(e.weight == 1.0);
            targets[e.src].insert(e.dst);
        }
    }
    for (std::uint32_t v = m + 1; v < n; ++v) {
        CHECK(targets[v].size() == m);
        CHECK(g.out_weight(v) == static_cast<double>(m));
    }
}

TEST_CASE("scale-free determinism and parameter validation") {
    CHECK(gen_scale_free(32, 1, 7).edges() == gen_scale_free(32, 1, 7).edges());
    CHECK(gen_scale_free(32, 1, 7).edges() != gen_scale_free(32, 1, 8).edges());
    CHECK(gen_scale_free(3, 1, 0).out_weight(2) == 1.0);
    CHECK_THROWS_AS(gen_scale_free(2, 2, 0), ParseError);
    CHECK_THROWS_AS(gen_scale_free(5, 0, 0), ParseError);
}

TEST_CASE("gnc copying rule") {
    const DirectedGraph two = gen_gnc(2, 123);
    REQUIRE(two.edges().size() == 1);
    CHECK(two.edges()[0] == Edge{1, 0, 1.0});

    // every node's target set is {t} plus t's full target set, for some t
    const DirectedGraph g = gen_gnc(50, 42);
    std::vector<std::set<std::uint32_t>> targets(g.node_count());
    for (const Edge& e : g.edges()) targets[e.src].insert(e.dst);
    for (std::uint32_t v = 1; v < g.node_count(); ++v) {
        bool consistent = false;
        for (std::uint32_t t : targets[v]) {
            std::set<std::uint32_t> expected = targets[t];
            expected.insert(t);
            consistent |= (expected == targets[v]);
        }
        CHECK(consistent);
    }
}

TEST_CASE("gnc determinism and validation") {
    CHECK(gen_gnc(50, 42).edges() == gen_gnc(50, 42).edges());
    CHECK(gen_gnc(50, 42).edges() != gen_gnc(50, 43).edges());
    CHECK_THROWS_AS(gen_gnc(0, 1), ParseError);
}

TEST_CASE("cycle") {
    const DirectedGraph g = gen_cycle(7);
    CHECK(g.node_count() == 7);
    CHECK(g.edges().size() == 7);
    for (std::uint32_t v = 0; v < 7; ++v) {
        CHECK(g.in_weight(v) == 1.0);
        CHECK(g.out_weight(v) == 1.0);
    }
    CHECK_THROWS_AS(gen_cycle(1), ParseError);
}

TEST_CASE("random digraph") {
    const DirectedGraph g = gen_random_digraph(16, 0.25, 3);
    CHECK(g.node_count() == 16);
    for (const Edge& e : g.edges()) CHECK(e.src != e.dst);
    CHECK(gen_random_digraph(16, 0.25, 3).edges() == g.edges());
    CHECK(gen_random_digraph(16, 0.0, 3).edges().empty());
    CHECK(gen_random_digraph(4, 1.0, 3).edges().size() == 12);
    CHECK_THROWS_AS(gen_random_digraph(4, 1.5, 3), ParseError);
}

TEST_CASE("bounded draw stays in range and covers values") {
    Rng rng(99);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t v = rng.bounded(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("weighted pick follows the weights") {
    Rng rng(5);
    std::vector<double> counts(3, 0.0);
    for (int i = 0; i < 3000; ++i) counts[rng.weighted_pick({1.0, 0.0, 3.0})] += 1.0;
    CHECK(counts[1] == 0.0);
    CHECK(counts[2] / counts[0] == doctest::Approx(3.0).epsilon(0.15));
}
