#include "fdcell/channels.hpp"

#include <random>
#include <stdexcept>

namespace fdcell {

namespace {

class NormalDraw {
 public:
  explicit NormalDraw(RngSeed seed) : rng_(seed.value) {}

  // Zero has measure zero under the continuous law; redraw keeps the
  // diagonal channel matrices invertible even under floating underflow.
  double nonzero() {
    double v = dist_(rng_);
    while (v == 0.0) v = dist_(rng_);
    return v;
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> dist_{0.0, 1.0};
};

}  // namespace

ExtendedChannels gen_channels(int m1, int m2, int n2, int t, RngSeed seed) {
  if (t < 1) throw std::invalid_argument("gen_channels: t must be >= 1");
  if (n2 < 1) throw std::invalid_argument("gen_channels: n2 must be >= 1");
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("gen_channels: negative antenna count");

  NormalDraw draw(seed);
  ExtendedChannels ch;
  ch.t = t;
  ch.m1 = m1;
  ch.m2 = m2;
  ch.n2 = n2;

  ch.g_bar = Eigen::MatrixXd::Zero(t, m1 * t);
  for (int s = 0; s < t; ++s)
    for (int a = 0; a < m1; ++a) ch.g_bar(s, s * m1 + a) = draw.nonzero();

  ch.h_bar.reserve(n2);
  ch.f_bar.reserve(n2);
  for (int j = 0; j < n2; ++j) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(t, t);
    for (int s = 0; s < t; ++s) h(s, s) = draw.nonzero();
    ch.h_bar.push_back(std::move(h));

    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m2 * t, t);
    for (int s = 0; s < t; ++s)
      for (int a = 0; a < m2; ++a) f(s * m2 + a, s) = draw.nonzero();
    ch.f_bar.push_back(std::move(f));
  }
  return ch;
}

}  // namespace fdcell
