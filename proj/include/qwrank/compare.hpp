#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qwrank/rank.hpp"

namespace qwrank {

/// Kendall tau-b over two value vectors: (C - D) / sqrt((n0 - tx)(n0 - ty))
/// with tie corrections; returns 0 when either vector is all ties.
double kendall_tau_b(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Index of the largest value, lowest index on exact ties. Throws ParseError
/// on an empty vector.
std::uint32_t top_node(const Eigen::VectorXd& values);

struct ComparisonReport {
    std::uint32_t n = 0;
    Eigen::VectorXd classical;
    Eigen::VectorXd quantum_mean;
    Eigen::VectorXd quantum_variance;
    std::uint32_t top_classical = 0;
    std::uint32_t top_quantum = 0;
    bool top_node_match = false;
    double kendall_tau = 0.0;
    /// Pairs (i, j), i < j, where the two methods order i and j strictly
    /// oppositely; pairs tied under either method are not violations.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hierarchy_violations;
};

/// Throws ParseError on dimension mismatch.
ComparisonReport compare(const PageRankResult& c, const QuantumRankResult& q);

} // namespace qwrank
