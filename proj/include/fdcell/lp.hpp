#pragma once

#include <vector>

#include "fdcell/config.hpp"
#include "fdcell/rational.hpp"

namespace fdcell {

/// Which of the two stream-allocation programs to solve.
///   achievable: maximize N1*l1 + N2*l2 over per-user loads (l1, l2) with
///               l1 + l2 <= 1, N1*l1 <= M1, N2*l2 <= M2, l >= 0.
///   converse:   maximize x + y over per-direction sums (x, y) with
///               x <= min(M1,N1), y <= min(M2,N2), N2*x + N1*y <= N1*N2.
enum class Program { achievable, converse };

/// Per-user load fractions of the achievable program.
struct LoadPair {
  Rational lambda1;
  Rational lambda2;
};

/// A vertex of the feasible polygon. Coordinates are (lambda1, lambda2) for
/// the achievable program and (d_dl_sum, d_ul_sum) for the converse one.
struct CornerPoint {
  Rational x;
  Rational y;

  friend bool operator==(const CornerPoint& a, const CornerPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const CornerPoint& a, const CornerPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct LpSolution {
  Rational value;
  CornerPoint argmax;
  int corner_count = 0;  // feasible corners examined
};

/// All vertices of the feasible polygon, each exactly once, in increasing
/// lexicographic order. Every returned point satisfies the program's
/// constraints exactly. Throws std::invalid_argument if n1 < 1 or n2 < 1.
std::vector<CornerPoint> enumerate_corners(const HdSplitConfig& cfg, Program program);

/// Exact maximum of the achievable program; ties between corners are broken
/// toward the lexicographically largest (lambda1, lambda2).
LpSolution solve_achievable_lp(const HdSplitConfig& cfg);

/// Exact maximum of the converse program, same tie rule.
LpSolution solve_converse_lp(const HdSplitConfig& cfg);

}  // namespace fdcell
