#include "qwrank/google.hpp"

namespace qwrank {

Eigen::MatrixXd google_matrix(const DirectedGraph& g, double p, GoogleConvention convention) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd links = adjacency_matrix(g);
    const double uniform = 1.0 / static_cast<double>(n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const double sum = links.col(c).sum();
        if (sum > 0.0)
            links.col(c) /= sum;
        else
            links.col(c).setConstant(uniform);   // dangling column
    }
    const double link_weight = convention == GoogleConvention::teleport_p ? 1.0 - p : p;
    const double teleport_weight = (1.0 - link_weight) * uniform;
    return link_weight * links +
           teleport_weight * Eigen::MatrixXd::Ones(n, n);
}

} // namespace qwrank
