#pragma once

#include <string>

#include "fdcell/config.hpp"
#include "fdcell/rational.hpp"

namespace fdcell {

/// Sum-DoF value together with the label of the min-term that attains it.
/// Ties are broken toward the earliest term in the listed order, so the
/// label is deterministic.
struct DofBreakdown {
  Rational value;
  std::string binding_term;
};

/// Sum DoF of the FD-BS / HD-user network with a DL and a UL user set:
///   min{ M1+M2, max(N1,N2), max(M1 + N2(N1-M1)/N1, M2 + N1(N2-M2)/N2) }.
/// Degenerate user sets are handled as pure one-direction networks:
/// n1 = 0 gives min(M2,N2), n2 = 0 gives min(M1,N1), both zero gives 0.
DofBreakdown sum_dof_hd_users(const HdSplitConfig& cfg);

/// Closed form for a single DL user (n1 = 1): n2 if m2 >= n2, otherwise
/// m2 + (n2 - m2)/n2. Throws std::invalid_argument if n2 < 1.
Rational sum_dof_single_dl_user(int m2, int n2);

/// Five-case piecewise form of the same sum DoF, split on the sign pattern
/// of (M1 - N1, M2 - N2, M1N2 + M2N1 - N1N2). On boundary configs several
/// case guards hold; all matching cases are evaluated and must agree.
/// Throws std::invalid_argument if n1 < 1 or n2 < 1.
Rational sum_dof_piecewise(const HdSplitConfig& cfg);

/// Sum DoF of the FD-BS / FD-user network: min(M1+M2, N).
Rational sum_dof_fd_users(const FdConfig& cfg);

/// Sum DoF of the FD-BS / HD-user network when the BS cannot suppress its
/// own transmit-to-receive leakage; minimum of five terms with (.)^+
/// clamping. Degenerate user sets follow the same conventions as
/// sum_dof_hd_users.
Rational sum_dof_with_self_interference(const HdSplitConfig& cfg);

/// Sum DoF when the BS operates one direction at a time:
/// max(min(M1,N1), min(M2,N2)).
Rational sum_dof_hd_bs(const HdSplitConfig& cfg);

/// Membership test for the previously known DoF region of the symmetric
/// FD network with m BS antennas per direction and n users:
///   dl <= min(m,n), ul <= min(m,n), dl + ul <= min(2m,n).
bool symmetric_fd_region_contains(int m, int n, const Rational& dl_sum,
                                  const Rational& ul_sum);

}  // namespace fdcell
