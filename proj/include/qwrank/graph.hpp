#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qwrank {

struct Edge {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed weighted graph. Node indices are 0..n-1. Parallel edges
/// are merged at construction by summing weights; the stored edge list is
/// sorted by (src, dst) so equal graphs have identical representations.
class DirectedGraph {
public:
    DirectedGraph(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t node_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    double in_weight(std::uint32_t node) const;
    double out_weight(std::uint32_t node) const;
    double total_weight() const noexcept { return total_weight_; }

private:
    std::uint32_t n_;
    std::vector<Edge> edges_;
    std::vector<double> in_weight_;
    std::vector<double> out_weight_;
    double total_weight_ = 0.0;
};

struct NodeDegrees {
    double in_weight = 0.0;
    double out_weight = 0.0;
};

/// Validates indices/weights, merges parallel edges, and builds the graph.
/// Throws ParseError on n == 0, out-of-range indices, or nonpositive weights.
DirectedGraph from_edge_list(std::uint32_t n, std::vector<Edge> edges);

/// Dense adjacency matrix with A(dst, src) = total weight of edges src->dst,
/// so column c sums to out_weight(c).
Eigen::MatrixXd adjacency_matrix(const DirectedGraph& g);

/// Weighted in/out degree totals of one node.
NodeDegrees degrees(const DirectedGraph& g, std::uint32_t node);

} // namespace qwrank
