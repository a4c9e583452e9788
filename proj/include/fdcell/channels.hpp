#pragma once

#include <Eigen/Dense>

#include <vector>

#include "fdcell/config.hpp"

namespace fdcell {

/// Time-extended channel matrices over a block of t slots.
///
/// Per slot s the link coefficients are a 1 x m1 row g(s) (BS to the DL
/// user), a scalar h_j(s) (UL user j to the DL user) and an m2 x 1 column
/// f_j(s) (UL user j to the BS). Stacking the block gives
///   g_bar    : t x (m1*t), block diagonal with one row block per slot,
///   h_bar[j] : t x t, diagonal,
///   f_bar[j] : (m2*t) x t, block diagonal with one column block per slot.
/// Every structurally present coefficient is nonzero.
struct ExtendedChannels {
  int t = 0;
  int m1 = 0;
  int m2 = 0;
  int n2 = 0;
  Eigen::MatrixXd g_bar;
  std::vector<Eigen::MatrixXd> h_bar;
  std::vector<Eigen::MatrixXd> f_bar;

  /// Diagonal of h_bar[j] as a vector (j is 0-based).
  Eigen::VectorXd h_diagonal(int j) const { return h_bar.at(j).diagonal(); }
};

/// Draws an i.i.d. standard-normal channel realization for n2 UL users over
/// a t-slot extension. Deterministic given (parameters, seed); a coefficient
/// that comes out exactly zero is redrawn so the diagonal blocks stay
/// invertible.
///
/// Throws std::invalid_argument if t < 1 or n2 < 1.
ExtendedChannels gen_channels(int m1, int m2, int n2, int t, RngSeed seed);

}  // namespace fdcell
