#include <doctest.h>

#include "fdcell/figures.hpp"

using namespace fdcell;

namespace {

void check_row_ordering(const FigureData& fig) {
  for (const auto& row : fig.rows) {
    CHECK(row.hd_only <= row.fd_with_si);
    CHECK(row.fd_with_si <= row.fd_bs_hd_user);
    CHECK(row.fd_bs_hd_user <= row.fd_bs_fd_user);
  }
}

}  // namespace

TEST_CASE("symmetric sweep matches min(2M,N) and min(M,N)") {
  const FigureData fig = figure_ex1(5, 20);
  REQUIRE(fig.rows.size() == 20);
  CHECK(fig.sweep_name == "n");
  for (const auto& row : fig.rows) {
    CHECK(row.fd_bs_hd_user == Rational(std::min(10, row.sweep)));
    CHECK(row.hd_only == Rational(std::min(5, row.sweep)));
  }
  check_row_ordering(fig);
}

TEST_CASE("double-UL sweep") {
  const FigureData fig = figure_fd_sweep(16, 8, 25);
  REQUIRE(fig.rows.size() == 25);
  // sweep variable is the total user count 3*n1
  CHECK(fig.rows[0].sweep == 3);
  CHECK(fig.rows[24].sweep == 75);
  // n1 = 10 -> n = 30
  CHECK(fig.rows[9].sweep == 30);
  CHECK(fig.rows[9].fd_with_si == Rational(14));
  CHECK(fig.rows[9].fd_bs_hd_user == Rational(14));
  CHECK(fig.rows[9].hd_only == Rational(10));
  CHECK(fig.rows[9].fd_bs_fd_user == Rational(24));
  check_row_ordering(fig);
}

TEST_CASE("split sweep covers every split") {
  const FigureData fig = figure_split_curve(16, 8, 50);
  REQUIRE(fig.rows.size() == 51);
  CHECK(fig.sweep_name == "n1");
  CHECK(fig.rows.front().sweep == 0);
  CHECK(fig.rows.back().sweep == 50);
  for (const auto& row : fig.rows) CHECK(row.fd_bs_fd_user == Rational(24));
  check_row_ordering(fig);
}

TEST_CASE("optimal-split sweep") {
  const FigureData fig = figure_optimal_split(16, 8, 50);
  REQUIRE(fig.rows.size() == 50);
  for (const auto& row : fig.rows) {
    CHECK(row.fd_with_si == row.hd_only);  // scheduling equality
    CHECK(row.fd_bs_fd_user == Rational(std::min(24, row.sweep)));
  }
  check_row_ordering(fig);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(figure_ex1(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(figure_split_curve(16, 8, -1), std::invalid_argument);
}
