#include "qwrank/graph.hpp"

#include <algorithm>
#include <map>

#include "qwrank/errors.hpp"

namespace qwrank {

DirectedGraph::DirectedGraph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), in_weight_(n, 0.0), out_weight_(n, 0.0) {
    for (const Edge& e : edges_) {
        out_weight_[e.src] += e.weight;
        in_weight_[e.dst] += e.weight;
        total_weight_ += e.weight;
    }
}

double DirectedGraph::in_weight(std::uint32_t node) const {
    if (node >= n_) throw ParseError("node index " + std::to_string(node) + " out of range");
    return in_weight_[node];
}

double DirectedGraph::out_weight(std::uint32_t node) const {
    if (node >= n_) throw ParseError("node index " + std::to_string(node) + " out of range");
    return out_weight_[node];
}

DirectedGraph from_edge_list(std::uint32_t n, std::vector<Edge> edges) {
    if (n == 0) throw ParseError("graph must have at least one node");
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> merged;
    for (const Edge& e : edges) {
        if (e.src >= n || e.dst >= n)
            throw ParseError("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                             " out of range for " + std::to_string(n) + " nodes");
        if (!(e.weight > 0.0))
            throw ParseError("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                             " has nonpositive weight");
        merged[{e.src, e.dst}] += e.weight;
    }
    std::vector<Edge> canonical;
    canonical.reserve(merged.size());
    for (const auto& [key, weight] : merged)
        canonical.push_back({key.first, key.second, weight});
    return DirectedGraph(n, std::move(canonical));
}

Eigen::MatrixXd adjacency_matrix(const DirectedGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) a(e.dst, e.src) += e.weight;
    return a;
}

NodeDegrees degrees(const DirectedGraph& g, std::uint32_t node) {
    return {g.in_weight(node), g.out_weight(node)};
}

} // namespace qwrank
