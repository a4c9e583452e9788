#pragma once

#include <string>
#include <vector>

#include "fdcell/rational.hpp"

namespace fdcell {

/// One sweep point with the four standard curves.
struct FigureRow {
  int sweep = 0;
  Rational fd_bs_hd_user;  // FD BS, HD users, no self-interference
  Rational fd_bs_fd_user;  // FD BS, FD users
  Rational fd_with_si;     // FD BS, HD users, residual self-interference
  Rational hd_only;        // HD BS
};

struct FigureData {
  std::string sweep_name;  // CSV/JSON column name of the sweep variable
  std::vector<FigureRow> rows;
};

/// Symmetric network (m, m, n, n) swept over n = 1..n_max.
FigureData figure_ex1(int m, int n_max);

/// Fixed antenna counts, n2 = 2*n1, n1 = 1..n1_max; sweep variable is the
/// total user count n = 3*n1.
FigureData figure_fd_sweep(int m1, int m2, int n1_max);

/// Fixed total n, swept over the split n1 = 0..n.
FigureData figure_split_curve(int m1, int m2, int n);

/// Optimal split per mode, swept over the total user count n = 1..n_max.
FigureData figure_optimal_split(int m1, int m2, int n_max);

}  // namespace fdcell
