#pragma once

#include <Eigen/Dense>

#include "qwrank/graph.hpp"

namespace qwrank::test {

/// Eigenvalues of a symmetric matrix, sorted descending, via a hand-rolled
/// cyclic Jacobi iteration. Independent of any Eigen decomposition so it can
/// cross-check them.
Eigen::VectorXd jacobi_symmetric_eigenvalues(Eigen::MatrixXd s, int max_sweeps = 100);

/// Singular values of a square matrix computed as the square roots of the
/// Jacobi eigenvalues of A^T A, sorted descending.
Eigen::VectorXd singular_values_oracle(const Eigen::MatrixXd& a);

/// Dominant-eigenvector fixed point of the Google matrix computed with a
/// dense general eigensolver (not the power method): the eigenvector of the
/// largest-magnitude eigenvalue, scaled to sum 1.
Eigen::VectorXd pagerank_oracle(const Eigen::MatrixXd& google);

} // namespace qwrank::test
