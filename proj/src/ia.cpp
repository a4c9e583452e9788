#include "fdcell/ia.hpp"

#include <random>
#include <stdexcept>

#include "fdcell/linalg.hpp"

namespace fdcell {

namespace {

Eigen::MatrixXd random_unit_columns(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = normal(rng);
    m.col(c).normalize();
  }
  return m;
}

}  // namespace

BeamformerSet build_beamformers(const ExtendedChannels& ch, RngSeed seed) {
  if (ch.t != ch.n2)
    throw std::invalid_argument("build_beamformers: channels must use a t = n2 extension");
  if (ch.m1 < 1) throw std::invalid_argument("build_beamformers: m1 must be >= 1");
  if (ch.m2 > ch.n2)
    throw unsupported_regime(
        "M2 > N2 uses pure UL reception; no alignment scheme to build");

  const int n2 = ch.n2;
  const int m2 = ch.m2;
  std::mt19937_64 rng(seed.value);

  BeamformerSet bf;
  bf.dl = random_unit_columns(ch.m1 * n2, n2 - m2, rng);
  bf.ul.reserve(n2);
  bf.ul.push_back(random_unit_columns(n2, m2, rng));

  const Eigen::ArrayXd h0 = ch.h_diagonal(0).array();
  for (int j = 1; j < n2; ++j) {
    const Eigen::ArrayXd ratio = h0 / ch.h_diagonal(j).array();
    Eigen::MatrixXd vj(n2, m2);
    for (int k = 0; k < m2; ++k)
      vj.col(k) = (ratio * bf.ul[0].col(k).array()).matrix();
    bf.ul.push_back(std::move(vj));
  }
  return bf;
}

VerificationReport verify_alignment(const ExtendedChannels& ch, const BeamformerSet& bf,
                                    double tol) {
  const int n2 = ch.n2;
  const int m2 = static_cast<int>(bf.ul.at(0).cols());

  VerificationReport rep;
  rep.symbols_per_slot = Rational(n2 - m2) / Rational(n2) + Rational(m2);

  // Aligned interference directions seen by the DL user.
  Eigen::MatrixXd aligned(n2, m2);
  for (int k = 0; k < m2; ++k)
    aligned.col(k) = ch.h_bar[0] * bf.ul[0].col(k);

  for (int j = 1; j < n2; ++j) {
    for (int k = 0; k < m2; ++k) {
      const Eigen::VectorXd received = ch.h_bar[j] * bf.ul[j].col(k);
      const double rel = (received - aligned.col(k)).norm() / aligned.col(k).norm();
      if (rel > rep.alignment_residual) rep.alignment_residual = rel;
    }
  }

  // Column scales are heavy-tailed (diagonal channel ratios), so the rank
  // tests run on unit-norm columns; rank is invariant under column scaling.
  Eigen::MatrixXd dl_received(n2, (n2 - m2) + m2);
  dl_received.leftCols(n2 - m2) = ch.g_bar * bf.dl;
  dl_received.rightCols(m2) = aligned;
  rep.dl_rank = numeric_rank(column_equilibrated(dl_received), tol);

  Eigen::MatrixXd bs_received(ch.m2 * n2, static_cast<Eigen::Index>(m2) * n2);
  for (int j = 0; j < n2; ++j)
    for (int k = 0; k < m2; ++k)
      bs_received.col(static_cast<Eigen::Index>(j) * m2 + k) = ch.f_bar[j] * bf.ul[j].col(k);
  rep.bs_rank = numeric_rank(column_equilibrated(bs_received), tol);

  return rep;
}

MonteCarloReport alignment_monte_carlo(int m1, int m2, int n2, int trials, RngSeed seed,
                                       double tol) {
  if (trials < 1) throw std::invalid_argument("alignment_monte_carlo: trials must be >= 1");

  MonteCarloReport agg;
  agg.trials = trials;
  agg.expected_dl_rank = n2;
  agg.expected_bs_rank = m2 * n2;
  agg.symbols_per_slot = Rational(n2 - m2) / Rational(n2) + Rational(m2);
  agg.min_dl_rank = n2;
  agg.min_bs_rank = m2 * n2;

  for (int i = 0; i < trials; ++i) {
    const RngSeed trial{sub_seed(seed, static_cast<std::uint64_t>(i))};
    const ExtendedChannels ch =
        gen_channels(m1, m2, n2, n2, RngSeed{sub_seed(trial, 0)});
    const BeamformerSet bf = build_beamformers(ch, RngSeed{sub_seed(trial, 1)});
    const VerificationReport rep = verify_alignment(ch, bf, tol);

    agg.max_residual = std::max(agg.max_residual, rep.alignment_residual);
    agg.min_dl_rank = std::min(agg.min_dl_rank, rep.dl_rank);
    agg.min_bs_rank = std::min(agg.min_bs_rank, rep.bs_rank);
    if (rep.alignment_residual > tol || rep.dl_rank < agg.expected_dl_rank ||
        rep.bs_rank < agg.expected_bs_rank)
      ++agg.failures;
  }
  return agg;
}

}  // namespace fdcell
