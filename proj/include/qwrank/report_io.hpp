#pragma once

#include <optional>
#include <string>

#include "qwrank/compare.hpp"
#include "qwrank/rank.hpp"

namespace qwrank {

/// CSV rank table: header "node,quantum_mean,quantum_variance[,classical]",
/// rows sorted by quantum mean descending (node index on ties). Doubles use
/// shortest round-trip formatting, so re-parsing recovers the exact values.
std::string rank_table_csv(const QuantumRankResult& q,
                           const std::optional<Eigen::VectorXd>& classical);

/// JSON rank report; every JSON document carries "schema": 1.
std::string rank_table_json(const QuantumRankResult& q,
                            const std::optional<Eigen::VectorXd>& classical);

/// CSV comparison table: "node,classical,quantum_mean,quantum_variance" plus
/// trailing "# key=value" comment lines for the scalar report fields.
std::string comparison_csv(const ComparisonReport& report);
std::string comparison_json(const ComparisonReport& report);

/// CSV convergence data: "step,node_0,...,node_k" running-mean rows plus a
/// trailing "# stabilization_step=..." comment.
std::string convergence_csv(const ConvergenceProfile& profile);
std::string convergence_json(const ConvergenceProfile& profile);

} // namespace qwrank
