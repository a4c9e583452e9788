#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "fdcell/channels.hpp"
#include "fdcell/config.hpp"
#include "fdcell/ia.hpp"

namespace fdcell {

/// Least-squares fit of average sum rate against (1/2)*log2(P). The slope is
/// the empirical sum DoF.
struct SlopeEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (power P, avg sum rate)
};

/// Projector used by the DL receiver: orthogonal complement of the aligned
/// inter-user interference directions {h_bar[0]*ul[0].col(k)}.
Eigen::MatrixXd dl_interference_projector(const ExtendedChannels& ch,
                                          const BeamformerSet& bf);

/// Achievable sum rate (bits per slot) of the alignment scheme at total
/// transmit power p per node, with zero-forcing receivers.
///
/// Power model: each node's per-slot average transmit power is exactly p
/// (the constraint is on the whole transmit vector, not per antenna). The
/// block energy n2*p is split equally across the node's streams; derived UL
/// columns are not unit norm, so their symbol power carries a 1/|v|^2
/// factor. Signaling is real-valued, hence the 1/2 in front of log2.
///
/// The DL user projects out the m2 aligned interference directions and
/// zero-forces its n2-m2 streams; the BS zero-forces across all m2*n2
/// received beams. Per stream the rate is (1/2)*log2(1 + SNR) with the
/// post-equalization SNR; the total is divided by the n2 slots.
///
/// Throws std::invalid_argument if p <= 0 and invalid_state if a receive
/// matrix is rank deficient.
double sum_rate(const ExtendedChannels& ch, const BeamformerSet& bf, double p);

/// Monte-Carlo DoF estimate: average sum_rate over `trials` seeded channel
/// realizations at each power, then regress the averages on (1/2)*log2(P).
/// Requires at least 3 strictly increasing powers spanning >= 4 decades and
/// trials >= 1; throws std::invalid_argument otherwise. Propagates
/// unsupported_regime for m2 > n2.
SlopeEstimate estimate_dof_slope(int m1, int m2, int n2,
                                 const std::vector<double>& powers, RngSeed seed,
                                 int trials);

/// Nine powers from 1e2 to 1e10, geometrically spaced.
std::vector<double> default_power_ladder();

}  // namespace fdcell
