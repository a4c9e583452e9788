#pragma once

#include <Eigen/Dense>

#include <vector>

#include "fdcell/channels.hpp"
#include "fdcell/config.hpp"
#include "fdcell/errors.hpp"
#include "fdcell/rational.hpp"

namespace fdcell {

/// Time-extended beamformers for one DL user and n2 UL users over a block of
/// t = n2 slots.
///
/// dl has shape (m1*n2) x (n2-m2): random unit-norm columns used by the BS.
/// ul[j] has shape n2 x m2: per-user uplink beam columns. ul[0] is random
/// unit-norm; for j >= 1 column k is chosen so that the k-th stream of every
/// UL user arrives at the DL user along one common direction:
///   ul[j].col(k) = h_bar[0].diag / h_bar[j].diag (entrywise) * ul[0].col(k).
/// Those derived columns keep their construction scale; rescaling them would
/// move the received vector off the shared direction.
struct BeamformerSet {
  Eigen::MatrixXd dl;
  std::vector<Eigen::MatrixXd> ul;
};

/// Numeric check of the alignment scheme for one channel realization.
struct VerificationReport {
  /// max over users j and streams k of
  ///   |h_bar[j]*ul[j].col(k) - h_bar[0]*ul[0].col(k)| / |h_bar[0]*ul[0].col(k)|.
  double alignment_residual = 0.0;
  /// Rank of the DL user's n2 x n2 received matrix [g_bar*dl | aligned interference].
  int dl_rank = 0;
  /// Rank of the stacked received UL beams {f_bar[j]*ul[j].col(k)}.
  int bs_rank = 0;
  /// (n2 - m2 + m2*n2) / n2, the information symbols delivered per slot.
  Rational symbols_per_slot;
};

/// Aggregate over seeded independent trials.
struct MonteCarloReport {
  int trials = 0;
  int failures = 0;  // trials with residual > tol or a rank short of full
  double max_residual = 0.0;
  int min_dl_rank = 0;
  int min_bs_rank = 0;
  int expected_dl_rank = 0;
  int expected_bs_rank = 0;
  Rational symbols_per_slot;
};

/// Which transmission scheme a (m2, n2) shape uses. With more BS receive
/// antennas than UL users no alignment is needed: the BS receives all n2
/// streams directly and the sum DoF is n2.
enum class SchemeKind { aligned_extension, uplink_only };

inline SchemeKind scheme_kind(int m2, int n2) {
  return m2 > n2 ? SchemeKind::uplink_only : SchemeKind::aligned_extension;
}

/// Builds the beamformer set for channels extended over t = n2 slots.
/// Requires m1 >= 1 and m2 <= n2; m2 = n2 degenerates to zero DL columns.
/// Throws unsupported_regime if m2 > n2 (that regime needs no alignment:
/// the BS just receives from the n2 users) and std::invalid_argument if the
/// channel extension length is not n2 or m1 < 1.
BeamformerSet build_beamformers(const ExtendedChannels& ch, RngSeed seed);

/// Computes the alignment residual and the two decodability ranks. Ranks use
/// a singular-value cutoff of tol relative to the largest singular value.
VerificationReport verify_alignment(const ExtendedChannels& ch, const BeamformerSet& bf,
                                    double tol);

/// Runs gen_channels + build_beamformers + verify_alignment over `trials`
/// independent realizations with sub-seeds derived from (seed, trial index).
/// Throws std::invalid_argument if trials < 1; propagates unsupported_regime.
MonteCarloReport alignment_monte_carlo(int m1, int m2, int n2, int trials, RngSeed seed,
                                       double tol);

}  // namespace fdcell
