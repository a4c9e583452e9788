#include "fdcell/grid_check.hpp"

#include <sstream>
#include <stdexcept>

#include "fdcell/closed_form.hpp"
#include "fdcell/lp.hpp"

namespace fdcell {

GridCheckReport run_grid_check(int bound) {
  if (bound < 1) throw std::invalid_argument("run_grid_check: bound must be >= 1");

  GridCheckReport rep;
  rep.bound = bound;
  rep.property_failures = {
      {"triple-equality", 0},    {"five-case-equality", 0}, {"single-dl-user-row", 0},
      {"fd-dominates-hd", 0},    {"at-most-two-fold", 0},   {"fd-user-model-dominates", 0},
      {"self-interference-le-fd", 0}, {"lp-upper-bound-structure", 0},
      {"lp-monotone-in-antennas", 0},
  };
  auto fail = [&rep](int prop, const HdSplitConfig& c) {
    ++rep.property_failures[prop].second;
    if (rep.first_counterexample.empty()) {
      std::ostringstream os;
      os << rep.property_failures[prop].first << " at (M1=" << c.m1 << ", M2=" << c.m2
         << ", N1=" << c.n1 << ", N2=" << c.n2 << ")";
      rep.first_counterexample = os.str();
    }
  };

  for (int m1 = 1; m1 <= bound; ++m1)
    for (int m2 = 1; m2 <= bound; ++m2)
      for (int n1 = 1; n1 <= bound; ++n1)
        for (int n2 = 1; n2 <= bound; ++n2) {
          const HdSplitConfig cfg(m1, m2, n1, n2);
          ++rep.configs;
          bool ok = true;

          const Rational closed = sum_dof_hd_users(cfg).value;
          const LpSolution ach = solve_achievable_lp(cfg);
          const LpSolution con = solve_converse_lp(cfg);
          if (!(closed == ach.value && ach.value == con.value)) { fail(0, cfg); ok = false; }
          if (sum_dof_piecewise(cfg) != closed) { fail(1, cfg); ok = false; }
          if (n1 == 1 && sum_dof_single_dl_user(m2, n2) != closed) { fail(2, cfg); ok = false; }

          const Rational hd = sum_dof_hd_bs(cfg);
          if (!(closed >= hd)) { fail(3, cfg); ok = false; }
          if (!(closed <= Rational(2) * hd)) { fail(4, cfg); ok = false; }
          if (!(closed <= sum_dof_fd_users({m1, m2, n1 + n2}))) { fail(5, cfg); ok = false; }
          if (!(sum_dof_with_self_interference(cfg) <= closed)) { fail(6, cfg); ok = false; }

          if (!(ach.value <= Rational(std::min(m1, n1) + std::min(m2, n2)))) {
            fail(7, cfg);
            ok = false;
          }
          if (m1 > 1 &&
              solve_achievable_lp({m1 - 1, m2, n1, n2}).value > ach.value) {
            fail(8, cfg);
            ok = false;
          }
          if (m2 > 1 &&
              solve_achievable_lp({m1, m2 - 1, n1, n2}).value > ach.value) {
            fail(8, cfg);
            ok = false;
          }

          if (!ok) ++rep.mismatches;
        }
  return rep;
}

}  // namespace fdcell
