#include <doctest.h>

#include <sstream>

#include "qwrank/errors.hpp"
#include "qwrank/generators.hpp"
#include "qwrank/graph_io.hpp"

using namespace qwrank;

namespace {

DirectedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::size_t error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_edge_list(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("minimal edge list") {
    const DirectedGraph g = parse("2\n0 1 1.0\n");
    CHECK(g.node_count() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
}

TEST_CASE("weight defaults to one; comments and blanks are skipped") {
    const DirectedGraph g = parse("# header\n\n3\n\n0 1\n# middle\n1 2 2.5\n");
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, 1.0});
    CHECK(g.edges()[1] == Edge{1, 2, 2.5});
}

TEST_CASE("parse errors carry 1-based line numbers") {
    CHECK(error_line("2\n0 5 1.0\n") == 2);
    CHECK(error_line("# c\n2\n0 1 1.0\n1 x 1.0\n") == 4);
    CHECK(error_line("2\n0 1 0.0\n") == 2);
    CHECK(error_line("2\n0 1 -2\n") == 2);
    CHECK(error_line("2\n0\n") == 2);
    CHECK(error_line("2\n0 1 1.0 9\n") == 2);
    CHECK(error_line("0\n") == 1);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
}

TEST_CASE("round-trip identity on generated graphs") {
    for (const DirectedGraph& g : {gen_tree(3, 3), gen_scale_free(20, 2, 4), gen_gnc(25, 8),
                                   gen_cycle(5)}) {
        std::ostringstream out;
        write_edge_list(out, g);
        const DirectedGraph back = parse(out.str());
        CHECK(back.node_count() == g.node_count());
        CHECK(back.edges() == g.edges());

        std::ostringstream again;
        write_edge_list(again, back);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("fractional weights survive the round trip exactly") {
    const DirectedGraph g = from_edge_list(2, {{0, 1, 0.1}, {1, 0, 1.0 / 3.0}});
    std::ostringstream out;
    write_edge_list(out, g);
    const DirectedGraph back = parse(out.str());
    CHECK(back.edges()[0].weight == 0.1);
    CHECK(back.edges()[1].weight == 1.0 / 3.0);
}

TEST_CASE("missing file") {
    CHECK_THROWS_WITH_AS(read_edge_list_file("/nonexistent/graph.txt"),
                         doctest::Contains("cannot read"), ParseError);
}

TEST_CASE("format_double uses shortest round-trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("dot export lists all nodes and edges") {
    std::ostringstream out;
    write_dot(out, from_edge_list(2, {{0, 1, 2.0}}));
    const std::string dot = out.str();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
}
