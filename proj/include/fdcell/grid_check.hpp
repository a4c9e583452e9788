#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fdcell {

/// Result of the exhaustive [1..bound]^4 agreement sweep.
struct GridCheckReport {
  int bound = 0;
  long long configs = 0;
  long long mismatches = 0;  // configs failing at least one property
  std::vector<std::pair<std::string, long long>> property_failures;
  std::string first_counterexample;  // empty when everything agrees
};

/// Checks, for every config with all counts in [1..bound]:
///  - closed form, achievable LP and converse LP agree exactly,
///  - the five-case piecewise form agrees with the min form,
///  - the n1 = 1 row matches the single-DL-user closed form,
///  - FD >= HD-only and FD <= 2x HD-only,
///  - FD(HD users) <= FD(FD users with n1+n2 users),
///  - self-interference value <= FD value,
///  - achievable LP value <= min(M1,N1) + min(M2,N2),
///  - achievable LP value is nondecreasing in M1 and in M2.
GridCheckReport run_grid_check(int bound);

}  // namespace fdcell
