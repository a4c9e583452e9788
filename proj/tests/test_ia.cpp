#include <doctest.h>

#include "fdcell/closed_form.hpp"
#include "fdcell/ia.hpp"
#include "fdcell/linalg.hpp"

using namespace fdcell;

TEST_CASE("derived uplink columns are the entrywise channel-ratio product") {
  const ExtendedChannels ch = gen_channels(2, 2, 3, 3, {7});
  const BeamformerSet bf = build_beamformers(ch, {7});
  REQUIRE(bf.ul.size() == 3);
  const Eigen::ArrayXd h0 = ch.h_diagonal(0).array();
  const Eigen::ArrayXd h1 = ch.h_diagonal(1).array();
  for (int k = 0; k < 2; ++k) {
    const Eigen::VectorXd expected = ((h0 / h1) * bf.ul[0].col(k).array()).matrix();
    CHECK(bf.ul[1].col(k).cwiseEqual(expected).all());
  }
}

TEST_CASE("beam counts and throughput identity") {
  const ExtendedChannels ch = gen_channels(2, 2, 4, 4, {7});
  const BeamformerSet bf = build_beamformers(ch, {7});
  CHECK(bf.dl.rows() == 8);   // m1 * n2
  CHECK(bf.dl.cols() == 2);   // n2 - m2
  int ul_cols = 0;
  for (const auto& u : bf.ul) ul_cols += static_cast<int>(u.cols());
  CHECK(ul_cols == 8);        // m2 * n2
  const VerificationReport rep = verify_alignment(ch, bf, 1e-9);
  CHECK(rep.symbols_per_slot == rational(5, 2));
  CHECK(rep.symbols_per_slot == sum_dof_single_dl_user(2, 4));
}

TEST_CASE("random channels align and stay decodable") {
  const ExtendedChannels ch = gen_channels(2, 2, 4, 4, {99});
  const BeamformerSet bf = build_beamformers(ch, {100});
  const VerificationReport rep = verify_alignment(ch, bf, 1e-9);
  CHECK(rep.alignment_residual <= 1e-9);
  CHECK(rep.dl_rank == 4);
  CHECK(rep.bs_rank == 8);
}

TEST_CASE("m2 == n2 boundary has no DL beams") {
  const ExtendedChannels ch = gen_channels(1, 3, 3, 3, {5});
  const BeamformerSet bf = build_beamformers(ch, {5});
  CHECK(bf.dl.cols() == 0);
  const VerificationReport rep = verify_alignment(ch, bf, 1e-9);
  CHECK(rep.dl_rank == 3);  // interference alone fills the space
  CHECK(rep.symbols_per_slot == Rational(3));
}

TEST_CASE("identical diagonal channels give an exactly zero residual") {
  ExtendedChannels ch = gen_channels(1, 2, 3, 3, {11});
  for (int j = 0; j < 3; ++j) ch.h_bar[j] = Eigen::MatrixXd::Identity(3, 3);

  BeamformerSet bf;
  bf.dl = Eigen::MatrixXd::Random(3, 1);
  const Eigen::MatrixXd shared = Eigen::MatrixXd::Random(3, 2);
  bf.ul = {shared, shared, shared};

  const VerificationReport rep = verify_alignment(ch, bf, 1e-9);
  CHECK(rep.alignment_residual == 0.0);
}

TEST_CASE("interference span matches the number of BS receive antennas") {
  for (int n2 = 2; n2 <= 6; ++n2)
    for (int m2 = 1; m2 < n2; ++m2) {
      const ExtendedChannels ch = gen_channels(2, m2, n2, n2, {31u + n2});
      const BeamformerSet bf = build_beamformers(ch, {77u + m2});
      Eigen::MatrixXd aligned(n2, m2);
      for (int k = 0; k < m2; ++k) aligned.col(k) = ch.h_bar[0] * bf.ul[0].col(k);
      CHECK(numeric_rank(aligned, 1e-9) == m2);
      const VerificationReport rep = verify_alignment(ch, bf, 1e-9);
      CHECK(rep.alignment_residual <= 1e-9);
      CHECK(rep.dl_rank == n2);
      CHECK(rep.bs_rank == m2 * n2);
    }
}

TEST_CASE("unsupported and invalid regimes") {
  CHECK(scheme_kind(5, 3) == SchemeKind::uplink_only);
  CHECK(scheme_kind(3, 3) == SchemeKind::aligned_extension);
  CHECK(scheme_kind(2, 4) == SchemeKind::aligned_extension);

  const ExtendedChannels ch = gen_channels(1, 5, 3, 3, {1});
  CHECK_THROWS_AS(build_beamformers(ch, {1}), unsupported_regime);

  const ExtendedChannels wrong_t = gen_channels(1, 2, 3, 4, {1});
  CHECK_THROWS_AS(build_beamformers(wrong_t, {1}), std::invalid_argument);

  const ExtendedChannels no_tx = gen_channels(0, 2, 3, 3, {1});
  CHECK_THROWS_AS(build_beamformers(no_tx, {1}), std::invalid_argument);
}

TEST_CASE("Monte-Carlo aggregation") {
  const MonteCarloReport rep = alignment_monte_carlo(2, 2, 4, 100, {1}, 1e-9);
  CHECK(rep.failures == 0);
  CHECK(rep.max_residual <= 1e-9);
  CHECK(rep.min_dl_rank == 4);
  CHECK(rep.min_bs_rank == 8);
  CHECK(rep.symbols_per_slot == rational(5, 2));

  const MonteCarloReport boundary = alignment_monte_carlo(1, 3, 3, 50, {1}, 1e-9);
  CHECK(boundary.failures == 0);
  CHECK(boundary.symbols_per_slot == Rational(3));

  CHECK_THROWS_AS(alignment_monte_carlo(2, 2, 4, 0, {1}, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(alignment_monte_carlo(1, 5, 3, 10, {1}, 1e-9), unsupported_regime);
}
