#pragma once

#include <Eigen/Dense>

#include "qwrank/graph.hpp"

namespace qwrank {

/// How the teleportation parameter p in [0,1] splits weight between the
/// column-normalized link matrix L and the uniform matrix (1/N)*B:
///   teleport_p: G = (1-p)*L + (p/N)*B   (p weights teleportation)
///   damping_p:  G = p*L + ((1-p)/N)*B   (p weights the links)
/// Both agree at p = 0.5.
enum class GoogleConvention { teleport_p, damping_p };

/// Column-stochastic Google matrix. L is the adjacency with each nonzero
/// column scaled to sum 1; dangling (zero) columns are replaced by the uniform
/// vector 1/N before mixing.
Eigen::MatrixXd google_matrix(const DirectedGraph& g, double p,
                              GoogleConvention convention = GoogleConvention::teleport_p);

} // namespace qwrank
