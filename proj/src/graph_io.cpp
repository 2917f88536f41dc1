#include "qwrank/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qwrank/errors.hpp"

namespace qwrank {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

namespace {

bool significant(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos != std::string::npos && line[pos] != '#';
}

double parse_double(const std::string& token, std::size_t line_no, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(std::string("invalid ") + what + " '" + token + "'", line_no);
    return value;
}

std::uint64_t parse_index(const std::string& token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(std::string("invalid ") + what + " '" + token + "'", line_no);
    return value;
}

} // namespace

DirectedGraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t n = 0;
    bool have_n = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!significant(line)) continue;
        std::istringstream fields(line);
        std::string a, b, c, extra;
        fields >> a;
        if (!have_n) {
            if (fields >> extra) throw ParseError("node count line has trailing fields", line_no);
            n = parse_index(a, line_no, "node count");
            if (n == 0) throw ParseError("node count must be positive", line_no);
            if (n > 0xffffffffull) throw ParseError("node count too large", line_no);
            have_n = true;
            continue;
        }
        if (!(fields >> b)) throw ParseError("expected 'src dst [weight]'", line_no);
        double weight = 1.0;
        if (fields >> c) weight = parse_double(c, line_no, "weight");
        if (fields >> extra) throw ParseError("too many fields", line_no);
        const std::uint64_t src = parse_index(a, line_no, "source index");
        const std::uint64_t dst = parse_index(b, line_no, "target index");
        if (src >= n || dst >= n)
            throw ParseError("node index out of range for " + std::to_string(n) + " nodes", line_no);
        if (!(weight > 0.0)) throw ParseError("weight must be positive", line_no);
        edges.push_back({static_cast<std::uint32_t>(src), static_cast<std::uint32_t>(dst), weight});
    }
    if (!have_n) throw ParseError("missing node count line");
    return from_edge_list(static_cast<std::uint32_t>(n), std::move(edges));
}

DirectedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
    out << g.node_count() << "\n";
    for (const Edge& e : g.edges())
        out << e.src << " " << e.dst << " " << format_double(e.weight) << "\n";
}

void write_edge_list_file(const std::string& path, const DirectedGraph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_edge_list(out, g);
    if (!out.flush()) throw ParseError("write failed for '" + path + "'");
}

void write_dot(std::ostream& out, const DirectedGraph& g) {
    out << "digraph g {\n";
    for (std::uint32_t v = 0; v < g.node_count(); ++v) out << "  n" << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  n" << e.src << " -> n" << e.dst;
        if (e.weight != 1.0) out << " [label=\"" << format_double(e.weight) << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace qwrank
