#pragma once

#include <Eigen/Dense>

namespace qwrank {

/// Decomposition A = P * diag(sigma) * Q with P, Q unitary and sigma sorted
/// descending. Note Q here is the adjoint of the conventional
/// right-singular-vector matrix: A = U*S*V^T corresponds to P = U, Q = V^T.
struct SvdTriple {
    Eigen::MatrixXd P;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd Q;
};

/// Deterministic SVD of a real square matrix. Uniqueness is pinned by a sign
/// convention (the largest-magnitude entry of each P column, lowest index on
/// ties, is made positive, compensated in the matching Q row) and by ordering
/// the columns of each degenerate singular-value block lexicographically by
/// their rounded P entries. Repeated calls on the same input are bit-identical.
SvdTriple svd(const Eigen::MatrixXd& a);

/// Scattering unitary U = P * diag(exp(i*sigma_k)) * Q from svd(a).
Eigen::MatrixXcd scattering_unitary(const Eigen::MatrixXd& a);

/// Max-norm of M * M^dagger - I.
double unitarity_deviation(const Eigen::MatrixXcd& m);

/// True iff unitarity_deviation(m) <= tol.
bool is_unitary(const Eigen::MatrixXcd& m, double tol);

} // namespace qwrank
