#include <doctest.h>

#include "fdcell/channels.hpp"

using fdcell::ExtendedChannels;
using fdcell::gen_channels;

namespace {

int nonzero_count(const Eigen::MatrixXd& m) {
  int c = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0.0) ++c;
  return c;
}

}  // namespace

TEST_CASE("block-diagonal sparsity") {
  const ExtendedChannels ch = gen_channels(2, 2, 3, 3, {1});
  CHECK(ch.g_bar.rows() == 3);
  CHECK(ch.g_bar.cols() == 6);
  CHECK(nonzero_count(ch.g_bar) == 6);  // m1 * t
  REQUIRE(ch.h_bar.size() == 3);
  REQUIRE(ch.f_bar.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(ch.h_bar[j].rows() == 3);
    CHECK(ch.h_bar[j].cols() == 3);
    CHECK(nonzero_count(ch.h_bar[j]) == 3);  // t
    CHECK(ch.f_bar[j].rows() == 6);
    CHECK(ch.f_bar[j].cols() == 3);
    CHECK(nonzero_count(ch.f_bar[j]) == 6);  // m2 * t
  }
}

TEST_CASE("sparsity counts across shapes") {
  const int dims[][4] = {{1, 1, 1, 1}, {3, 1, 2, 4}, {1, 4, 5, 2}, {4, 3, 2, 6}};
  for (const auto& d : dims) {
    const int m1 = d[0], m2 = d[1], n2 = d[2], t = d[3];
    const ExtendedChannels ch = gen_channels(m1, m2, n2, t, {7});
    CHECK(nonzero_count(ch.g_bar) == m1 * t);
    for (int j = 0; j < n2; ++j) {
      CHECK(nonzero_count(ch.h_bar[j]) == t);
      CHECK(nonzero_count(ch.f_bar[j]) == m2 * t);
      // diagonal entries all nonzero
      for (int s = 0; s < t; ++s) CHECK(ch.h_bar[j](s, s) != 0.0);
    }
  }
}

TEST_CASE("degenerate single-slot extension") {
  const ExtendedChannels ch = gen_channels(1, 1, 1, 1, {1234});
  CHECK(ch.g_bar(0, 0) != 0.0);
  CHECK(ch.h_bar[0](0, 0) != 0.0);
  CHECK(ch.f_bar[0](0, 0) != 0.0);
}

TEST_CASE("same seed gives identical matrices") {
  const ExtendedChannels a = gen_channels(2, 3, 4, 5, {42});
  const ExtendedChannels b = gen_channels(2, 3, 4, 5, {42});
  CHECK(a.g_bar.cwiseEqual(b.g_bar).all());
  for (int j = 0; j < 4; ++j) {
    CHECK(a.h_bar[j].cwiseEqual(b.h_bar[j]).all());
    CHECK(a.f_bar[j].cwiseEqual(b.f_bar[j]).all());
  }
  const ExtendedChannels c = gen_channels(2, 3, 4, 5, {43});
  CHECK_FALSE(a.g_bar.cwiseEqual(c.g_bar).all());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(gen_channels(1, 1, 1, 0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(gen_channels(1, 1, 0, 1, {1}), std::invalid_argument);
}

TEST_CASE("sub-seed derivation is stable and spreads") {
  const fdcell::RngSeed base{7};
  CHECK(fdcell::sub_seed(base, 0) == fdcell::sub_seed(base, 0));
  CHECK(fdcell::sub_seed(base, 0) != fdcell::sub_seed(base, 1));
  CHECK(fdcell::sub_seed(base, 0) != fdcell::sub_seed({8}, 0));
}
