#include "fdcell/figures.hpp"

#include <stdexcept>

#include "fdcell/closed_form.hpp"
#include "fdcell/scheduler.hpp"

namespace fdcell {

FigureData figure_ex1(int m, int n_max) {
  if (n_max < 1) throw std::invalid_argument("figure_ex1: n_max must be >= 1");
  FigureData fig;
  fig.sweep_name = "n";
  for (int n = 1; n <= n_max; ++n) {
    const HdSplitConfig cfg(m, m, n, n);
    fig.rows.push_back({n, sum_dof_hd_users(cfg).value, sum_dof_fd_users({m, m, n}),
                        sum_dof_with_self_interference(cfg), sum_dof_hd_bs(cfg)});
  }
  return fig;
}

FigureData figure_fd_sweep(int m1, int m2, int n1_max) {
  if (n1_max < 1) throw std::invalid_argument("figure_fd_sweep: n1_max must be >= 1");
  FigureData fig;
  fig.sweep_name = "n";
  for (int n1 = 1; n1 <= n1_max; ++n1) {
    const int n2 = 2 * n1;
    const HdSplitConfig cfg(m1, m2, n1, n2);
    fig.rows.push_back({n1 + n2, sum_dof_hd_users(cfg).value,
                        sum_dof_fd_users({m1, m2, n1 + n2}),
                        sum_dof_with_self_interference(cfg), sum_dof_hd_bs(cfg)});
  }
  return fig;
}

FigureData figure_split_curve(int m1, int m2, int n) {
  if (n < 0) throw std::invalid_argument("figure_split_curve: n must be >= 0");
  FigureData fig;
  fig.sweep_name = "n1";
  const Rational fd_user = sum_dof_fd_users({m1, m2, n});
  for (int n1 = 0; n1 <= n; ++n1) {
    const int n2 = n - n1;
    fig.rows.push_back({n1, dof_for_split(m1, m2, n1, n2, Mode::fd_no_si), fd_user,
                        dof_for_split(m1, m2, n1, n2, Mode::fd_with_si),
                        dof_for_split(m1, m2, n1, n2, Mode::hd_only)});
  }
  return fig;
}

FigureData figure_optimal_split(int m1, int m2, int n_max) {
  if (n_max < 1) throw std::invalid_argument("figure_optimal_split: n_max must be >= 1");
  FigureData fig;
  fig.sweep_name = "n";
  for (int n = 1; n <= n_max; ++n) {
    fig.rows.push_back({n, optimal_split(m1, m2, n, Mode::fd_no_si).value,
                        sum_dof_fd_users({m1, m2, n}),
                        optimal_split(m1, m2, n, Mode::fd_with_si).value,
                        optimal_split(m1, m2, n, Mode::hd_only).value});
  }
  return fig;
}

}  // namespace fdcell
