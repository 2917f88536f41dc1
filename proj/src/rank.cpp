#include "qwrank/rank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qwrank/errors.hpp"

namespace qwrank {

QuantumRankResult quantum_rank(const DirectedGraph& g, const RankOptions& options) {
    if (options.steps < 1) throw ParseError("step count must be >= 1");
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const WalkOperators ops = build_operators(g, options.walk);
    WalkState state = options.initial == InitialState::coin_superposition
                          ? uniform_initial(g.node_count())
                          : down_sector_initial(g.node_count());

    QuantumRankResult result;
    result.steps = options.steps;
    result.mean = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd m2 = Eigen::VectorXd::Zero(n);
    if (options.keep_series)
        result.series = Eigen::MatrixXd(static_cast<Eigen::Index>(options.steps), n);

    for (std::uint32_t t = 1; t <= options.steps; ++t) {
        state = step(state, ops);
        const Eigen::VectorXd p = node_probabilities(state);
        if (options.keep_series) result.series->row(t - 1) = p;
        const Eigen::VectorXd delta = p - result.mean;
        result.mean += delta / static_cast<double>(t);
        m2.array() += delta.array() * (p - result.mean).array();
    }
    result.variance = m2 / static_cast<double>(options.steps);

    const double total = result.mean.sum();
    if (std::abs(total - 1.0) > 1e-9)
        throw NumericalError("mean rank normalization drifted by " +
                             std::to_string(std::abs(total - 1.0)));
    result.mean /= total;
    return result;
}

PageRankResult pagerank(const DirectedGraph& g, double p, GoogleConvention convention,
                        double tol, std::uint32_t max_iter) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    const Eigen::MatrixXd google = google_matrix(g, p, convention);
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    double residual = 0.0;
    for (std::uint32_t k = 1; k <= max_iter; ++k) {
        const Eigen::VectorXd next = google * v;
        residual = (next - v).lpNorm<1>();
        v = next;
        if (residual <= tol) return {std::move(v), k, residual};
    }
    throw NumericalError("power method did not converge in " + std::to_string(max_iter) +
                         " iterations (residual " + std::to_string(residual) + ")");
}

std::vector<std::uint32_t> rank_ordering(const Eigen::VectorXd& values) {
    std::vector<std::uint32_t> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (values(a) != values(b)) return values(a) > values(b);
        return a < b;
    });
    return order;
}

std::optional<std::uint32_t> stabilization_step(const Eigen::MatrixXd& series,
                                                std::uint32_t window) {
    const auto steps = static_cast<std::uint32_t>(series.rows());
    if (window < 1 || window > steps) throw ParseError("window must be in [1, steps]");

    std::vector<std::vector<std::uint32_t>> orders;
    orders.reserve(steps);
    for (Eigen::Index t = 0; t < series.rows(); ++t)
        orders.push_back(rank_ordering(series.row(t).transpose()));

    // change_at[t] (1-based step t >= 2): ordering differs from the previous step
    std::uint32_t s = 1;
    std::uint32_t t = 2;
    while (s + window <= steps) {
        for (; t <= s + window; ++t)
            if (orders[t - 1] != orders[t - 2]) break;
        if (t > s + window) return s;
        s = t;          // ordering changed at step t; restart the window there
        ++t;
    }
    return std::nullopt;
}

ConvergenceProfile convergence_profile(const DirectedGraph& g, std::uint32_t steps,
                                       std::uint32_t window, const RankOptions& options) {
    if (window < 1 || window > steps) throw ParseError("window must be in [1, steps]");
    RankOptions run = options;
    run.steps = steps;
    run.keep_series = true;
    const QuantumRankResult q = quantum_rank(g, run);

    ConvergenceProfile profile;
    profile.running_mean = Eigen::MatrixXd(q.series->rows(), q.series->cols());
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(q.series->cols());
    for (Eigen::Index t = 0; t < q.series->rows(); ++t) {
        mean += (q.series->row(t).transpose() - mean) / static_cast<double>(t + 1);
        profile.running_mean.row(t) = mean;
    }
    profile.stabilization = stabilization_step(profile.running_mean, window);
    return profile;
}

} // namespace qwrank
