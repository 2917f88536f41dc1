#include <doctest.h>

#include "qwrank/errors.hpp"
#include "qwrank/generators.hpp"
#include "qwrank/graph.hpp"

using namespace qwrank;

TEST_CASE("single edge graph") {
    const DirectedGraph g = from_edge_list(2, {{0, 1, 1.0}});
    CHECK(g.node_count() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
    CHECK(g.in_weight(1) == 1.0);
    CHECK(g.out_weight(0) == 1.0);
    CHECK(g.out_weight(1) == 0.0);
}

TEST_CASE("parallel edges merge by weight") {
    const DirectedGraph g = from_edge_list(2, {{0, 1, 1.0}, {0, 1, 2.0}});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == 3.0);
}

TEST_CASE("edge list is canonically sorted") {
    const DirectedGraph g = from_edge_list(3, {{2, 0, 1.0}, {0, 2, 1.0}, {0, 1, 1.0}});
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
    CHECK(g.edges()[1] == Edge{0, 2, 1.0});
    CHECK(g.edges()[2] == Edge{2, 0, 1.0});
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(from_edge_list(3, {{0, 3, 1.0}}), ParseError);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 1, 0.0}}), ParseError);
    CHECK_THROWS_AS(from_edge_list(2, {{0, 1, -1.0}}), ParseError);
    CHECK_THROWS_AS(from_edge_list(0, {}), ParseError);
}

TEST_CASE("adjacency matrix orientation: entry (dst, src)") {
    const Eigen::MatrixXd a = adjacency_matrix(from_edge_list(2, {{0, 1, 1.0}}));
    CHECK(a(0, 0) == 0.0);
    CHECK(a(0, 1) == 0.0);
    CHECK(a(1, 0) == 1.0);
    CHECK(a(1, 1) == 0.0);

    const Eigen::MatrixXd cyc = adjacency_matrix(from_edge_list(2, {{0, 1, 1.0}, {1, 0, 1.0}}));
    CHECK(cyc(0, 1) == 1.0);
    CHECK(cyc(1, 0) == 1.0);
    CHECK(cyc(0, 0) == 0.0);

    CHECK(adjacency_matrix(from_edge_list(2, {})).isZero(0.0));
}

TEST_CASE("degrees") {
    const DirectedGraph g = from_edge_list(3, {{0, 1, 2.0}});
    CHECK(degrees(g, 1).in_weight == 2.0);
    CHECK(degrees(g, 1).out_weight == 0.0);
    CHECK(degrees(g, 2).in_weight == 0.0);
    CHECK(degrees(g, 2).out_weight == 0.0);
    CHECK_THROWS_AS(degrees(g, 3), ParseError);

    const DirectedGraph cyc = from_edge_list(2, {{0, 1, 1.0}, {1, 0, 1.0}});
    CHECK(degrees(cyc, 0).in_weight == 1.0);
    CHECK(degrees(cyc, 0).out_weight == 1.0);
}

TEST_CASE("self-loop counts toward both degrees") {
    const DirectedGraph g = from_edge_list(1, {{0, 0, 2.5}});
    CHECK(degrees(g, 0).in_weight == 2.5);
    CHECK(degrees(g, 0).out_weight == 2.5);
}

TEST_CASE("weight bookkeeping invariants on generated graphs") {
    for (const DirectedGraph& g : {gen_tree(2, 4), gen_scale_free(24, 2, 5), gen_gnc(30, 9),
                                   gen_cycle(7), gen_random_digraph(12, 0.3, 11)}) {
        double in_total = 0.0, out_total = 0.0;
        for (std::uint32_t v = 0; v < g.node_count(); ++v) {
            in_total += g.in_weight(v);
            out_total += g.out_weight(v);
        }
        CHECK(in_total == doctest::Approx(g.total_weight()).epsilon(1e-12));
        CHECK(out_total == doctest::Approx(g.total_weight()).epsilon(1e-12));

        const Eigen::MatrixXd a = adjacency_matrix(g);
        for (std::uint32_t c = 0; c < g.node_count(); ++c)
            CHECK(a.col(c).sum() == doctest::Approx(g.out_weight(c)).epsilon(1e-12));
    }
}
