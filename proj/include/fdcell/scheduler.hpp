#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdcell/config.hpp"
#include "fdcell/rational.hpp"

namespace fdcell {

/// Operating mode whose sum-DoF formula is swept over user splits.
enum class Mode {
  fd_no_si,    // FD BS, self-interference fully suppressed
  fd_with_si,  // FD BS with residual self-interference
  hd_only,     // BS runs one direction at a time
};

const char* mode_name(Mode mode);

/// Sum DoF of a given (n1, n2) split under a mode, including the degenerate
/// one-direction conventions for n1 = 0 or n2 = 0.
Rational dof_for_split(int m1, int m2, int n1, int n2, Mode mode);

struct SplitResult {
  int n1_opt = 0;
  int n2_opt = 0;
  Rational value;
  Mode mode = Mode::fd_no_si;
  std::vector<std::pair<int, Rational>> curve;  // (n1, value), n1 = 0..n
};

/// Full sweep of n+1 splits (n1 from 0 to n, n2 = n - n1).
std::vector<std::pair<int, Rational>> split_curve(int m1, int m2, int n, Mode mode);

/// Best split of n half-duplex users into DL and UL sets; ties broken toward
/// the smallest n1. Throws std::invalid_argument if n < 0.
SplitResult optimal_split(int m1, int m2, int n, Mode mode);

}  // namespace fdcell
