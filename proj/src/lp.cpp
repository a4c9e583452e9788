#include "fdcell/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdcell {

namespace {

void require_users(const HdSplitConfig& cfg, const char* who) {
  if (cfg.n1 < 1 || cfg.n2 < 1)
    throw std::invalid_argument(std::string(who) + ": n1 and n2 must be >= 1");
}

bool feasible_achievable(const HdSplitConfig& c, const CornerPoint& p) {
  const Rational zero(0), one(1);
  return p.x >= zero && p.y >= zero && p.x + p.y <= one &&
         Rational(c.n1) * p.x <= Rational(c.m1) && Rational(c.n2) * p.y <= Rational(c.m2);
}

bool feasible_converse(const HdSplitConfig& c, const CornerPoint& p) {
  const Rational zero(0);
  const Rational c1(std::min(c.m1, c.n1));
  const Rational c2(std::min(c.m2, c.n2));
  return p.x >= zero && p.y >= zero && p.x <= c1 && p.y <= c2 &&
         Rational(c.n2) * p.x + Rational(c.n1) * p.y <=
             Rational(static_cast<long long>(c.n1) * c.n2);
}

std::vector<CornerPoint> candidates_achievable(const HdSplitConfig& c) {
  const Rational one(1);
  const Rational r1 = rational(c.m1, c.n1);  // lambda1 cap from the antenna budget
  const Rational r2 = rational(c.m2, c.n2);
  return {
      {Rational(0), Rational(0)},
      {min(one, r1), Rational(0)},
      {Rational(0), min(one, r2)},
      {r1, r2},            // both antenna caps active
      {r1, one - r1},      // antenna cap meets the slot budget l1+l2 = 1
      {one - r2, r2},
  };
}

std::vector<CornerPoint> candidates_converse(const HdSplitConfig& c) {
  const Rational c1(std::min(c.m1, c.n1));
  const Rational c2(std::min(c.m2, c.n2));
  const long long n1 = c.n1, n2 = c.n2;
  // Box corners plus intersections of N2*x + N1*y = N1*N2 with each box edge.
  return {
      {Rational(0), Rational(0)},
      {c1, Rational(0)},
      {Rational(0), c2},
      {c1, c2},
      {c1, (Rational(n1 * n2) - Rational(n2) * c1) / Rational(n1)},
      {(Rational(n1 * n2) - Rational(n1) * c2) / Rational(n2), c2},
      {Rational(n1), Rational(0)},
      {Rational(0), Rational(n2)},
  };
}

std::vector<CornerPoint> feasible_corners(const HdSplitConfig& cfg, Program program) {
  std::vector<CornerPoint> cands = program == Program::achievable
                                       ? candidates_achievable(cfg)
                                       : candidates_converse(cfg);
  std::vector<CornerPoint> out;
  for (const CornerPoint& p : cands) {
    const bool ok = program == Program::achievable ? feasible_achievable(cfg, p)
                                                   : feasible_converse(cfg, p);
    if (ok) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational objective(const HdSplitConfig& cfg, Program program, const CornerPoint& p) {
  if (program == Program::achievable)
    return Rational(cfg.n1) * p.x + Rational(cfg.n2) * p.y;
  return p.x + p.y;
}

LpSolution solve(const HdSplitConfig& cfg, Program program) {
  const std::vector<CornerPoint> corners = feasible_corners(cfg, program);
  LpSolution sol;
  sol.corner_count = static_cast<int>(corners.size());
  bool first = true;
  for (const CornerPoint& p : corners) {
    const Rational v = objective(cfg, program, p);
    // Lexicographically largest argmax on ties; corners are sorted ascending.
    if (first || v > sol.value || (v == sol.value && sol.argmax < p)) {
      sol.value = v;
      sol.argmax = p;
      first = false;
    }
  }
  return sol;
}

}  // namespace

std::vector<CornerPoint> enumerate_corners(const HdSplitConfig& cfg, Program program) {
  require_users(cfg, "enumerate_corners");
  return feasible_corners(cfg, program);
}

LpSolution solve_achievable_lp(const HdSplitConfig& cfg) {
  require_users(cfg, "solve_achievable_lp");
  return solve(cfg, Program::achievable);
}

LpSolution solve_converse_lp(const HdSplitConfig& cfg) {
  require_users(cfg, "solve_converse_lp");
  return solve(cfg, Program::converse);
}

}  // namespace fdcell
