#include "fdcell/rate_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "fdcell/errors.hpp"
#include "fdcell/linalg.hpp"

namespace fdcell {

namespace {

// Diagonal of inv(A^T A) for a full-column-rank A; the k-th entry is the
// noise amplification of the k-th zero-forced stream. Computed from the SVD
// so a badly conditioned link yields a huge gain (near-zero rate) instead of
// a numerical failure; only structural deficiency at machine precision is an
// error.
Eigen::VectorXd zf_noise_gains(const Eigen::MatrixXd& a, const char* side) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-14 * sv(0))
    throw invalid_state(std::string("sum_rate: rank-deficient ") + side +
                        " receive matrix");
  const Eigen::MatrixXd& v = svd.matrixV();
  Eigen::VectorXd gains = Eigen::VectorXd::Zero(a.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      gains(k) += v(k, i) * v(k, i) / (sv(i) * sv(i));
  return gains;
}

double half_log2_1p(double snr) { return 0.5 * std::log2(1.0 + snr); }

}  // namespace

Eigen::MatrixXd dl_interference_projector(const ExtendedChannels& ch,
                                          const BeamformerSet& bf) {
  const int m2 = static_cast<int>(bf.ul.at(0).cols());
  Eigen::MatrixXd aligned(ch.t, m2);
  for (int k = 0; k < m2; ++k)
    aligned.col(k) = ch.h_bar[0] * bf.ul[0].col(k);
  return complement_projector(aligned);
}

double sum_rate(const ExtendedChannels& ch, const BeamformerSet& bf, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("sum_rate: power must be positive");

  const int n2 = ch.n2;
  const int m2 = static_cast<int>(bf.ul.at(0).cols());
  const int dl_streams = static_cast<int>(bf.dl.cols());
  const double block_energy = static_cast<double>(n2) * p;

  double total_bits = 0.0;

  if (dl_streams > 0) {
    const Eigen::MatrixXd proj = dl_interference_projector(ch, bf);
    const Eigen::MatrixXd eff = proj * (ch.g_bar * bf.dl);
    const Eigen::VectorXd gains = zf_noise_gains(eff, "DL");
    const double stream_power = block_energy / dl_streams;  // dl columns are unit norm
    for (int k = 0; k < dl_streams; ++k)
      total_bits += half_log2_1p(stream_power / gains(k));
  }

  if (m2 > 0) {
    Eigen::MatrixXd stacked(ch.m2 * n2, static_cast<Eigen::Index>(m2) * n2);
    Eigen::VectorXd stream_power(static_cast<Eigen::Index>(m2) * n2);
    for (int j = 0; j < n2; ++j) {
      for (int k = 0; k < m2; ++k) {
        const Eigen::Index idx = static_cast<Eigen::Index>(j) * m2 + k;
        stacked.col(idx) = ch.f_bar[j] * bf.ul[j].col(k);
        stream_power(idx) = block_energy / (m2 * bf.ul[j].col(k).squaredNorm());
      }
    }
    const Eigen::VectorXd gains = zf_noise_gains(stacked, "BS");
    for (Eigen::Index i = 0; i < gains.size(); ++i)
      total_bits += half_log2_1p(stream_power(i) / gains(i));
  }

  return total_bits / n2;
}

SlopeEstimate estimate_dof_slope(int m1, int m2, int n2,
                                 const std::vector<double>& powers, RngSeed seed,
                                 int trials) {
  if (powers.size() < 3)
    throw std::invalid_argument("estimate_dof_slope: need at least 3 power points");
  for (std::size_t i = 1; i < powers.size(); ++i)
    if (!(powers[i] > powers[i - 1]))
      throw std::invalid_argument("estimate_dof_slope: powers must be strictly increasing");
  if (!(powers.front() > 0.0) || powers.back() / powers.front() < 1e4)
    throw std::invalid_argument("estimate_dof_slope: powers must span at least 4 decades");
  if (trials < 1) throw std::invalid_argument("estimate_dof_slope: trials must be >= 1");

  std::vector<double> avg(powers.size(), 0.0);
  for (int i = 0; i < trials; ++i) {
    const RngSeed trial{sub_seed(seed, static_cast<std::uint64_t>(i))};
    const ExtendedChannels ch =
        gen_channels(m1, m2, n2, n2, RngSeed{sub_seed(trial, 0)});
    const BeamformerSet bf = build_beamformers(ch, RngSeed{sub_seed(trial, 1)});
    for (std::size_t k = 0; k < powers.size(); ++k)
      avg[k] += sum_rate(ch, bf, powers[k]);
  }
  for (double& r : avg) r /= trials;

  // Ordinary least squares of avg rate against x = (1/2)*log2(P).
  const std::size_t n = powers.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = 0.5 * std::log2(powers[k]);
    sx += xs[k];
    sy += avg[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * avg[k];
  }
  const double denom = n * sxx - sx * sx;
  SlopeEstimate est;
  est.slope = (n * sxy - sx * sy) / denom;
  est.intercept = (sy - est.slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t k = 0; k < n; ++k) {
    const double fit = est.intercept + est.slope * xs[k];
    ss_res += (avg[k] - fit) * (avg[k] - fit);
    ss_tot += (avg[k] - mean_y) * (avg[k] - mean_y);
  }
  est.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;

  est.points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) est.points.emplace_back(powers[k], avg[k]);
  return est;
}

std::vector<double> default_power_ladder() {
  std::vector<double> p;
  for (int e = 2; e <= 10; ++e) p.push_back(std::pow(10.0, e));
  return p;
}

}  // namespace fdcell
