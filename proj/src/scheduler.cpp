#include "fdcell/scheduler.hpp"

#include <stdexcept>

#include "fdcell/closed_form.hpp"

namespace fdcell {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::fd_no_si: return "fd-no-si";
    case Mode::fd_with_si: return "fd-with-si";
    case Mode::hd_only: return "hd-only";
  }
  return "?";
}

Rational dof_for_split(int m1, int m2, int n1, int n2, Mode mode) {
  const HdSplitConfig cfg(m1, m2, n1, n2);
  switch (mode) {
    case Mode::fd_no_si: return sum_dof_hd_users(cfg).value;
    case Mode::fd_with_si: return sum_dof_with_self_interference(cfg);
    case Mode::hd_only: return sum_dof_hd_bs(cfg);
  }
  throw std::logic_error("dof_for_split: bad mode");
}

std::vector<std::pair<int, Rational>> split_curve(int m1, int m2, int n, Mode mode) {
  if (n < 0) throw std::invalid_argument("split_curve: n must be >= 0");
  std::vector<std::pair<int, Rational>> curve;
  curve.reserve(n + 1);
  for (int n1 = 0; n1 <= n; ++n1)
    curve.emplace_back(n1, dof_for_split(m1, m2, n1, n - n1, mode));
  return curve;
}

SplitResult optimal_split(int m1, int m2, int n, Mode mode) {
  SplitResult res;
  res.mode = mode;
  res.curve = split_curve(m1, m2, n, mode);
  res.n1_opt = 0;
  res.value = res.curve.front().second;
  for (const auto& [n1, v] : res.curve) {
    if (v > res.value) {  // strict: ties keep the smallest n1
      res.value = v;
      res.n1_opt = n1;
    }
  }
  res.n2_opt = n - res.n1_opt;
  return res;
}

}  // namespace fdcell
