#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwrank/walk.hpp"

namespace qwrank {

/// Initial state of a ranking walk.
enum class InitialState { coin_superposition, down_sector };

struct RankOptions {
    std::uint32_t steps = 500;
    InitialState initial = InitialState::coin_superposition;
    WalkOptions walk;
    bool keep_series = false;
};

struct QuantumRankResult {
    std::uint32_t steps = 0;
    Eigen::VectorXd mean;              // time-averaged node probability, sums to 1
    Eigen::VectorXd variance;          // population variance over the per-step records
    std::optional<Eigen::MatrixXd> series;   // steps x n instantaneous records
};

/// Evolves the initial state for `steps` steps, recording node probabilities
/// after each step. The mean is defensively re-normalized; a correction
/// larger than 1e-9 raises NumericalError.
QuantumRankResult quantum_rank(const DirectedGraph& g, const RankOptions& options = {});

struct PageRankResult {
    Eigen::VectorXd ranks;             // nonnegative, sums to 1
    std::uint32_t iterations = 0;
    double residual = 0.0;
};

/// Power method V <- G*V from the uniform vector until the 1-norm step
/// difference is <= tol. Throws NumericalError if max_iter is exceeded.
PageRankResult pagerank(const DirectedGraph& g, double p = 0.85,
                        GoogleConvention convention = GoogleConvention::teleport_p,
                        double tol = 1e-12, std::uint32_t max_iter = 100000);

/// Indices 0..n-1 sorted by value descending, index ascending on exact ties.
std::vector<std::uint32_t> rank_ordering(const Eigen::VectorXd& values);

/// First step s (1-based row of `series`) whose ordering is unchanged through
/// rows s..s+window; nullopt if no such s exists with s+window <= row count.
std::optional<std::uint32_t> stabilization_step(const Eigen::MatrixXd& series,
                                                std::uint32_t window);

struct ConvergenceProfile {
    Eigen::MatrixXd running_mean;               // steps x n, row t = mean of records 1..t
    std::optional<std::uint32_t> stabilization; // over the full node ordering
};

/// Running mean of the instantaneous probabilities plus the first step whose
/// full rank ordering holds for `window` further steps. Throws ParseError if
/// window < 1 or window > steps. `steps` overrides options.steps.
ConvergenceProfile convergence_profile(const DirectedGraph& g, std::uint32_t steps,
                                       std::uint32_t window, const RankOptions& options = {});

} // namespace qwrank
