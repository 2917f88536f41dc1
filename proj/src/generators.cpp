#include "qwrank/generators.hpp"

#include <cmath>
#include <limits>

#include "qwrank/errors.hpp"

namespace qwrank {

std::uint64_t Rng::bounded(std::uint64_t bound) {
    // Rejection below the largest multiple of bound keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return r % bound;
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::weighted_pick(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double r = uniform01() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        last_positive = i;
        if (r < acc) return i;
    }
    return last_positive;   // r == total from rounding; fall back to the last candidate
}

DirectedGraph gen_tree(std::uint32_t branching, std::uint32_t generations) {
    if (branching < 2) throw ParseError("tree branching must be >= 2");
    if (generations < 1) throw ParseError("tree must have at least one generation");
    std::uint64_t count = 1, layer = 1;
    for (std::uint32_t g = 0; g < generations; ++g) {
        layer *= branching;
        count += layer;
        if (count > std::numeric_limits<std::uint32_t>::max())
            throw ParseError("tree node count overflows");
    }
    const auto n = static_cast<std::uint32_t>(count);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (std::uint32_t v = 1; v < n; ++v)
        edges.push_back({v, (v - 1) / branching, 1.0});
    return from_edge_list(n, std::move(edges));
}

std::uint32_t tree_generation(std::uint32_t branching, std::uint32_t node) {
    std::uint32_t gen = 0;
    while (node > 0) {
        node = (node - 1) / branching;
        ++gen;
    }
    return gen;
}

DirectedGraph gen_scale_free(std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
    if (m < 1) throw ParseError("scale-free m must be >= 1");
    if (n <= m) throw ParseError("scale-free n must exceed m");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<double> indegree(n, 0.0);
    for (std::uint32_t i = 0; i <= m; ++i)
        for (std::uint32_t j = 0; j <= m; ++j)
            if (i != j) {
                edges.push_back({i, j, 1.0});
                indegree[j] += 1.0;
            }
    for (std::uint32_t v = m + 1; v < n; ++v) {
        std::vector<double> weights(v);
        for (std::uint32_t u = 0; u < v; ++u) weights[u] = indegree[u] + 1.0;
        for (std::uint32_t k = 0; k < m; ++k) {
            const auto target = static_cast<std::uint32_t>(rng.weighted_pick(weights));
            weights[target] = 0.0;    // targets of one node are distinct
            edges.push_back({v, target, 1.0});
        }
        for (std::size_t i = edges.size() - m; i < edges.size(); ++i)
            indegree[edges[i].dst] += 1.0;
    }
    return from_edge_list(n, std::move(edges));
}

DirectedGraph gen_gnc(std::uint32_t n, std::uint64_t seed) {
    if (n == 0) throw ParseError("graph must have at least one node");
    Rng rng(seed);
    std::vector<std::vector<std::uint32_t>> out(n);
    std::vector<Edge> edges;
    for (std::uint32_t v = 1; v < n; ++v) {
        const auto target = static_cast<std::uint32_t>(rng.bounded(v));
        out[v].push_back(target);
        out[v].insert(out[v].end(), out[target].begin(), out[target].end());
        for (std::uint32_t u : out[v]) edges.push_back({v, u, 1.0});
    }
    return from_edge_list(n, std::move(edges));
}

DirectedGraph gen_cycle(std::uint32_t n) {
    if (n < 2) throw ParseError("cycle needs at least 2 nodes");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1.0});
    return from_edge_list(n, std::move(edges));
}

DirectedGraph gen_random_digraph(std::uint32_t n, double edge_prob, std::uint64_t seed) {
    if (n == 0) throw ParseError("graph must have at least one node");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw ParseError("edge probability must be in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && rng.uniform01() < edge_prob) edges.push_back({i, j, 1.0});
    return from_edge_list(n, std::move(edges));
}

} // namespace qwrank
