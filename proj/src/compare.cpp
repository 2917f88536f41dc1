#include "qwrank/compare.hpp"

#include <cmath>

#include "qwrank/errors.hpp"

namespace qwrank {

double kendall_tau_b(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size()) throw ParseError("kendall tau needs equal-length vectors");
    const Eigen::Index n = x.size();
    long long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double dx = x(i) - x(j);
            const double dy = y(i) - y(j);
            if (dx == 0.0 && dy == 0.0) continue;    // joint ties cancel in both corrections
            if (dx == 0.0) {
                ++ties_x;
            } else if (dy == 0.0) {
                ++ties_y;
            } else if ((dx > 0.0) == (dy > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double nx = static_cast<double>(concordant + discordant + ties_x);
    const double ny = static_cast<double>(concordant + discordant + ties_y);
    if (nx == 0.0 || ny == 0.0) return 0.0;
    return static_cast<double>(concordant - discordant) / std::sqrt(nx * ny);
}

std::uint32_t top_node(const Eigen::VectorXd& values) {
    if (values.size() == 0) throw ParseError("top node of an empty vector");
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i)
        if (values(i) > values(best)) best = i;
    return static_cast<std::uint32_t>(best);
}

ComparisonReport compare(const PageRankResult& c, const QuantumRankResult& q) {
    if (c.ranks.size() != q.mean.size())
        throw ParseError("classical and quantum results have different sizes");
    ComparisonReport report;
    report.n = static_cast<std::uint32_t>(c.ranks.size());
    report.classical = c.ranks;
    report.quantum_mean = q.mean;
    report.quantum_variance = q.variance;
    report.top_classical = top_node(c.ranks);
    report.top_quantum = top_node(q.mean);
    report.top_node_match = report.top_classical == report.top_quantum;
    report.kendall_tau = kendall_tau_b(c.ranks, q.mean);
    for (std::uint32_t i = 0; i < report.n; ++i) {
        for (std::uint32_t j = i + 1; j < report.n; ++j) {
            const double dc = c.ranks(i) - c.ranks(j);
            const double dq = q.mean(i) - q.mean(j);
            if (dc != 0.0 && dq != 0.0 && (dc > 0.0) != (dq > 0.0))
                report.hierarchy_violations.emplace_back(i, j);
        }
    }
    return report;
}

} // namespace qwrank
