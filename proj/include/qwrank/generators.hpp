#pragma once

#include <cstdint>
#include <random>

#include "qwrank/graph.hpp"

namespace qwrank {

/// Deterministic RNG helpers shared by all generators. std::mt19937_64 has a
/// standard-pinned output sequence, and the derived draws below avoid any
/// distribution whose algorithm the standard leaves unspecified, so generated
/// graphs are identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound) by rejection; bound >= 1.
    std::uint64_t bounded(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Index drawn with probability weights[i] / sum(weights); zero-weight
    /// entries are never chosen. Weights must be nonnegative, sum > 0.
    std::size_t weighted_pick(const std::vector<double>& weights);

private:
    std::mt19937_64 engine_;
};

/// Complete b-ary tree: root is node 0, children of v are b*v+1 .. b*v+b,
/// every edge directed child->parent with unit weight. Node count is
/// (b^(generations+1) - 1) / (b - 1); generation 0 is the root.
DirectedGraph gen_tree(std::uint32_t branching, std::uint32_t generations);

/// Generation index of a node of gen_tree(branching, ...).
std::uint32_t tree_generation(std::uint32_t branching, std::uint32_t node);

/// Preferential-attachment digraph: nodes 0..m form a complete digraph; each
/// later node adds m outgoing unit edges to distinct existing targets chosen
/// with probability proportional to (indegree + 1), sampled sequentially
/// without replacement against the indegrees seen on arrival.
DirectedGraph gen_scale_free(std::uint32_t n, std::uint32_t m, std::uint64_t seed);

/// Growing network with copying: node 0 starts alone; each new node picks a
/// uniformly random existing target and links to it and to every node the
/// target currently points to.
DirectedGraph gen_gnc(std::uint32_t n, std::uint64_t seed);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 with unit weights; n >= 2.
DirectedGraph gen_cycle(std::uint32_t n);

/// Random digraph: every ordered pair (i, j), i != j, becomes a unit edge
/// independently with probability edge_prob.
DirectedGraph gen_random_digraph(std::uint32_t n, double edge_prob, std::uint64_t seed);

} // namespace qwrank
