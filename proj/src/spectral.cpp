#include "qwrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qwrank/errors.hpp"

namespace qwrank {

namespace {

// Key for canonical ordering inside a degenerate singular-value block.
std::vector<double> rounded_column(const Eigen::MatrixXd& p, Eigen::Index col) {
    std::vector<double> key(static_cast<std::size_t>(p.rows()));
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        key[static_cast<std::size_t>(i)] = std::nearbyint(p(i, col) * 1e9);
    return key;
}

} // namespace

SvdTriple svd(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw ParseError("svd input must be square");
    if (!a.allFinite()) throw NumericalError("svd input has non-finite entries");

    // Two-sided Jacobi keeps both factors orthogonal to machine precision for
    // every input; the divide-and-conquer backend loses orthogonality on
    // matrices with tightly clustered singular values.
    Eigen::JacobiSVD<Eigen::MatrixXd> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success)
        throw NumericalError("singular value decomposition did not converge");

    SvdTriple t;
    t.P = solver.matrixU();
    t.sigma = solver.singularValues();
    t.Q = solver.matrixV().transpose();

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = 0;
        for (Eigen::Index i = 1; i < n; ++i)
            if (std::abs(t.P(i, k)) > std::abs(t.P(pivot, k))) pivot = i;
        if (t.P(pivot, k) < 0.0) {
            t.P.col(k) = -t.P.col(k);
            t.Q.row(k) = -t.Q.row(k);
        }
    }

    // Order the columns of each degenerate block by their rounded P entries
    // (descending) so the factorization does not depend on how the backend
    // happened to span the block.
    const double group_tol = 1e-12 * std::max(n > 0 ? t.sigma(0) : 0.0, 1.0);
    Eigen::Index begin = 0;
    while (begin < n) {
        Eigen::Index end = begin + 1;
        while (end < n && t.sigma(begin) - t.sigma(end) <= group_tol) ++end;
        if (end - begin > 1) {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(end - begin));
            std::iota(order.begin(), order.end(), begin);
            std::vector<std::vector<double>> keys;
            keys.reserve(order.size());
            for (Eigen::Index k = begin; k < end; ++k) keys.push_back(rounded_column(t.P, k));
            std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
                return keys[static_cast<std::size_t>(x - begin)] >
                       keys[static_cast<std::size_t>(y - begin)];
            });
            Eigen::MatrixXd p_block(n, end - begin), q_block(end - begin, n);
            Eigen::VectorXd s_block(end - begin);
            for (Eigen::Index i = 0; i < end - begin; ++i) {
                p_block.col(i) = t.P.col(order[static_cast<std::size_t>(i)]);
                q_block.row(i) = t.Q.row(order[static_cast<std::size_t>(i)]);
                s_block(i) = t.sigma(order[static_cast<std::size_t>(i)]);
            }
            t.P.middleCols(begin, end - begin) = p_block;
            t.Q.middleRows(begin, end - begin) = q_block;
            t.sigma.segment(begin, end - begin) = s_block;
        }
        begin = end;
    }
    return t;
}

Eigen::MatrixXcd scattering_unitary(const Eigen::MatrixXd& a) {
    const SvdTriple t = svd(a);
    Eigen::VectorXcd phases(t.sigma.size());
    for (Eigen::Index k = 0; k < t.sigma.size(); ++k)
        phases(k) = std::complex<double>(std::cos(t.sigma(k)), std::sin(t.sigma(k)));
    return t.P.cast<std::complex<double>>() * phases.asDiagonal() *
           t.Q.cast<std::complex<double>>();
}

double unitarity_deviation(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw ParseError("unitarity check needs a square matrix");
    const Eigen::MatrixXcd d = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
    return unitarity_deviation(m) <= tol;
}

} // namespace qwrank
