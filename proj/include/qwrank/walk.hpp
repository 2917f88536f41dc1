#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwrank/google.hpp"
#include "qwrank/graph.hpp"

namespace qwrank {

/// Matrix the scattering unitary is built from: the raw weighted adjacency
/// matrix, or the Google matrix (full-rank, which removes the null-space
/// gauge ambiguity rank-deficient adjacencies leave in U).
enum class ShiftBasis { adjacency, google };

struct WalkOptions {
    ShiftBasis shift_basis = ShiftBasis::adjacency;
    double google_p = 0.85;                                        // used when shift_basis == google
    GoogleConvention google_convention = GoogleConvention::teleport_p;
};

/// Two complex amplitudes per node, one per coin sector.
struct WalkState {
    Eigen::VectorXcd up;
    Eigen::VectorXcd down;

    double norm_squared() const { return up.squaredNorm() + down.squaredNorm(); }
};

/// Per-node coin blocks [[c, s], [s, -c]] with c = sqrt(1/(alpha+1)),
/// s = sqrt(alpha/(alpha+1)), plus the scattering unitary for the down sector.
struct WalkOperators {
    Eigen::VectorXd coin_c;        // upper-left block entry per node
    Eigen::VectorXd coin_s;        // off-diagonal block entry per node
    Eigen::VectorXd alpha;         // in / (in + out); 1/2 for isolated nodes
    Eigen::VectorXd beta;          // out / (in + out); stored, not used by the coin
    Eigen::MatrixXcd scatter;
};

/// alpha_x = in_weight/(in_weight+out_weight) from weighted degrees (1/2 when
/// both are zero); scatter = scattering_unitary of the selected basis matrix.
WalkOperators build_operators(const DirectedGraph& g, const WalkOptions& options = {});

/// Equal superposition over all 2n coin-position basis states: every
/// amplitude 1/sqrt(2n).
WalkState uniform_initial(std::uint32_t n);

/// All weight in the mobile coin sector: up = 0, down_x = 1/sqrt(n).
WalkState down_sector_initial(std::uint32_t n);

/// Per node: (up, down) <- coin block * (up, down).
WalkState apply_coin(const WalkState& s, const WalkOperators& ops);

/// Up sector untouched; down <- scatter * down.
WalkState apply_shift(const WalkState& s, const WalkOperators& ops);

/// One walk step: shift after coin.
WalkState step(const WalkState& s, const WalkOperators& ops);

/// p_x = |up_x|^2 + |down_x|^2.
Eigen::VectorXd node_probabilities(const WalkState& s);

/// Standard 1D coined walk from coin state (alpha0, beta0) at the origin with
/// coin [[cos t, -i sin t], [-i sin t, cos t]]; the up component moves to
/// x-1, the down component to x+1. Returns the position distribution over
/// -steps..steps (index i holds position i - steps).
std::vector<double> reference_line_walk(std::uint32_t steps, double theta,
                                        std::complex<double> alpha0,
                                        std::complex<double> beta0);

/// Which coin component the one-directional reference shift moves.
enum class DirectedShiftVariant { up_moves, down_moves };

/// Directed 1D walk: the selected component moves to x+1, the other stays.
/// Returns the distribution over positions 0..steps.
std::vector<double> reference_directed_line_walk(std::uint32_t steps, double theta,
                                                 std::complex<double> alpha0,
                                                 std::complex<double> beta0,
                                                 DirectedShiftVariant variant);

} // namespace qwrank
