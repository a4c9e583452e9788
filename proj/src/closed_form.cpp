#include "fdcell/closed_form.hpp"

#include <stdexcept>
#include <vector>

namespace fdcell {

namespace {

// The two ratio terms of the min form. Only valid for n1, n2 >= 1.
Rational ratio_term_dl(const HdSplitConfig& c) {
  // M1 + N2(N1-M1)/N1
  return Rational(c.m1) + rational(static_cast<long long>(c.n2) * (c.n1 - c.m1), c.n1);
}

Rational ratio_term_ul(const HdSplitConfig& c) {
  // M2 + N1(N2-M2)/N2
  return Rational(c.m2) + rational(static_cast<long long>(c.n1) * (c.n2 - c.m2), c.n2);
}

}  // namespace

DofBreakdown sum_dof_hd_users(const HdSplitConfig& cfg) {
  if (cfg.n1 == 0 && cfg.n2 == 0) return {Rational(0), "no users"};
  if (cfg.n1 == 0) return {Rational(std::min(cfg.m2, cfg.n2)), "pure UL: min(M2,N2)"};
  if (cfg.n2 == 0) return {Rational(std::min(cfg.m1, cfg.n1)), "pure DL: min(M1,N1)"};

  const Rational t1(cfg.m1 + cfg.m2);
  const Rational t2(std::max(cfg.n1, cfg.n2));
  const Rational t3 = max(ratio_term_dl(cfg), ratio_term_ul(cfg));

  DofBreakdown out;
  out.value = min(t1, min(t2, t3));
  if (out.value == t1)
    out.binding_term = "M1+M2";
  else if (out.value == t2)
    out.binding_term = "max(N1,N2)";
  else
    out.binding_term = "max(M1+N2(N1-M1)/N1, M2+N1(N2-M2)/N2)";
  return out;
}

Rational sum_dof_single_dl_user(int m2, int n2) {
  if (n2 < 1) throw std::invalid_argument("sum_dof_single_dl_user: n2 must be >= 1");
  if (m2 >= n2) return Rational(n2);
  return Rational(m2) + rational(n2 - m2, n2);
}

Rational sum_dof_piecewise(const HdSplitConfig& cfg) {
  if (cfg.n1 < 1 || cfg.n2 < 1)
    throw std::invalid_argument("sum_dof_piecewise: n1 and n2 must be >= 1");

  const long long m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  const Rational a1 = ratio_term_dl(cfg);
  const Rational a2 = ratio_term_ul(cfg);

  std::vector<Rational> matched;
  if (m1 >= n1 && m2 >= n2) matched.push_back(Rational(std::max(n1, n2)));
  if (m1 <= n1 && m2 >= n2) matched.push_back(max(Rational(n2), a1));
  if (m1 >= n1 && m2 <= n2) matched.push_back(max(Rational(n1), a2));
  if (m1 <= n1 && m2 <= n2 && m1 * n2 + m2 * n1 >= n1 * n2) matched.push_back(max(a1, a2));
  if (m1 <= n1 && m2 <= n2 && m1 * n2 + m2 * n1 <= n1 * n2) matched.push_back(Rational(m1 + m2));

  for (const Rational& v : matched)
    if (v != matched.front())
      throw std::logic_error("sum_dof_piecewise: overlapping cases disagree");
  return matched.front();
}

Rational sum_dof_fd_users(const FdConfig& cfg) {
  return Rational(std::min(cfg.m1 + cfg.m2, cfg.n));
}

Rational sum_dof_with_self_interference(const HdSplitConfig& cfg) {
  if (cfg.n1 == 0 && cfg.n2 == 0) return Rational(0);

  const long long m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  const long long num = n1 * n2 + std::min(m1, n1) * std::max(n1 - n2, 0LL) +
                        std::min(m2, n2) * std::max(n2 - n1, 0LL);
  const Rational t1 = rational(num, std::max(n1, n2));
  Rational v = min(t1, Rational(m1 + n2));
  v = min(v, Rational(m2 + n1));
  v = min(v, Rational(std::max(m1, m2)));
  v = min(v, Rational(std::max(n1, n2)));
  return v;
}

Rational sum_dof_hd_bs(const HdSplitConfig& cfg) {
  return Rational(std::max(std::min(cfg.m1, cfg.n1), std::min(cfg.m2, cfg.n2)));
}

bool symmetric_fd_region_contains(int m, int n, const Rational& dl_sum,
                                  const Rational& ul_sum) {
  if (dl_sum.is_negative() || ul_sum.is_negative())
    throw std::invalid_argument("symmetric_fd_region_contains: negative DoF");
  const Rational per(std::min(m, n));
  const Rational total(std::min(2 * m, n));
  return dl_sum <= per && ul_sum <= per && dl_sum + ul_sum <= total;
}

}  // namespace fdcell
