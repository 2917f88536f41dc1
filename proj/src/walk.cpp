#include "qwrank/walk.hpp"

#include <cmath>

#include "qwrank/errors.hpp"
#include "qwrank/spectral.hpp"

namespace qwrank {

WalkOperators build_operators(const DirectedGraph& g, const WalkOptions& options) {
    const auto n = static_cast<Eigen::Index>(g.node_count());
    WalkOperators ops;
    ops.alpha.resize(n);
    ops.beta.resize(n);
    ops.coin_c.resize(n);
    ops.coin_s.resize(n);
    for (Eigen::Index x = 0; x < n; ++x) {
        const NodeDegrees d = degrees(g, static_cast<std::uint32_t>(x));
        const double total = d.in_weight + d.out_weight;
        ops.alpha(x) = total > 0.0 ? d.in_weight / total : 0.5;
        ops.beta(x) = total > 0.0 ? d.out_weight / total : 0.5;
        ops.coin_c(x) = std::sqrt(1.0 / (ops.alpha(x) + 1.0));
        ops.coin_s(x) = std::sqrt(ops.alpha(x) / (ops.alpha(x) + 1.0));
    }
    const Eigen::MatrixXd basis = options.shift_basis == ShiftBasis::adjacency
                                      ? adjacency_matrix(g)
                                      : google_matrix(g, options.google_p, options.google_convention);
    ops.scatter = scattering_unitary(basis);
    return ops;
}

WalkState uniform_initial(std::uint32_t n) {
    if (n == 0) throw ParseError("graph must have at least one node");
    const double amp = 1.0 / std::sqrt(2.0 * n);
    WalkState s;
    s.up = Eigen::VectorXcd::Constant(n, amp);
    s.down = Eigen::VectorXcd::Constant(n, amp);
    return s;
}

WalkState down_sector_initial(std::uint32_t n) {
    if (n == 0) throw ParseError("graph must have at least one node");
    WalkState s;
    s.up = Eigen::VectorXcd::Zero(n);
    s.down = Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    return s;
}

namespace {

void require_match(const WalkState& s, const WalkOperators& ops) {
    if (s.up.size() != s.down.size() || s.up.size() != ops.coin_c.size() ||
        ops.scatter.rows() != s.up.size())
        throw ParseError("state and operator dimensions do not match");
}

} // namespace

WalkState apply_coin(const WalkState& s, const WalkOperators& ops) {
    require_match(s, ops);
    WalkState r;
    r.up = ops.coin_c.array() * s.up.array() + ops.coin_s.array() * s.down.array();
    r.down = ops.coin_s.array() * s.up.array() - ops.coin_c.array() * s.down.array();
    return r;
}

WalkState apply_shift(const WalkState& s, const WalkOperators& ops) {
    require_match(s, ops);
    WalkState r;
    r.up = s.up;
    r.down = ops.scatter * s.down;
    return r;
}

WalkState step(const WalkState& s, const WalkOperators& ops) {
    return apply_shift(apply_coin(s, ops), ops);
}

Eigen::VectorXd node_probabilities(const WalkState& s) {
    return s.up.cwiseAbs2() + s.down.cwiseAbs2();
}

std::vector<double> reference_line_walk(std::uint32_t steps, double theta,
                                        std::complex<double> alpha0,
                                        std::complex<double> beta0) {
    if (std::abs(std::norm(alpha0) + std::norm(beta0) - 1.0) > 1e-12)
        throw ParseError("initial coin state must be normalized");
    const std::size_t width = 2 * static_cast<std::size_t>(steps) + 1;
    std::vector<std::complex<double>> up(width), down(width);
    up[steps] = alpha0;
    down[steps] = beta0;
    const double c = std::cos(theta);
    const std::complex<double> is(0.0, -std::sin(theta));
    for (std::uint32_t t = 0; t < steps; ++t) {
        std::vector<std::complex<double>> nu(width), nd(width);
        for (std::size_t x = 0; x < width; ++x) {
            const std::complex<double> u = c * up[x] + is * down[x];
            const std::complex<double> d = is * up[x] + c * down[x];
            if (x > 0) nu[x - 1] += u;                 // up component moves left
            if (x + 1 < width) nd[x + 1] += d;         // down component moves right
        }
        up = std::move(nu);
        down = std::move(nd);
    }
    std::vector<double> p(width);
    for (std::size_t x = 0; x < width; ++x) p[x] = std::norm(up[x]) + std::norm(down[x]);
    return p;
}

std::vector<double> reference_directed_line_walk(std::uint32_t steps, double theta,
                                                 std::complex<double> alpha0,
                                                 std::complex<double> beta0,
                                                 DirectedShiftVariant variant) {
    if (std::abs(std::norm(alpha0) + std::norm(beta0) - 1.0) > 1e-12)
        throw ParseError("initial coin state must be normalized");
    const std::size_t width = static_cast<std::size_t>(steps) + 1;
    std::vector<std::complex<double>> up(width), down(width);
    up[0] = alpha0;
    down[0] = beta0;
    const double c = std::cos(theta);
    const std::complex<double> is(0.0, -std::sin(theta));
    for (std::uint32_t t = 0; t < steps; ++t) {
        std::vector<std::complex<double>> nu(width), nd(width);
        for (std::size_t x = 0; x < width; ++x) {
            const std::complex<double> u = c * up[x] + is * down[x];
            const std::complex<double> d = is * up[x] + c * down[x];
            if (variant == DirectedShiftVariant::up_moves) {
                if (x + 1 < width) nu[x + 1] += u;
                nd[x] += d;
            } else {
                nu[x] += u;
                if (x + 1 < width) nd[x + 1] += d;
            }
        }
        up = std::move(nu);
        down = std::move(nd);
    }
    std::vector<double> p(width);
    for (std::size_t x = 0; x < width; ++x) p[x] = std::norm(up[x]) + std::norm(down[x]);
    return p;
}

} // namespace qwrank
