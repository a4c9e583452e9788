#pragma once

#include <cstdint>
#include <stdexcept>

namespace fdcell {

/// Antenna/user counts for the network with a full-duplex base station and
/// half-duplex users split into a downlink set and an uplink set.
///   m1: BS transmit antennas, m2: BS receive antennas,
///   n1: single-antenna DL users, n2: single-antenna UL users.
struct HdSplitConfig {
  int m1 = 0;
  int m2 = 0;
  int n1 = 0;
  int n2 = 0;

  HdSplitConfig() = default;
  HdSplitConfig(int m1_, int m2_, int n1_, int n2_) : m1(m1_), m2(m2_), n1(n1_), n2(n2_) {
    if (m1 < 0 || m2 < 0 || n1 < 0 || n2 < 0)
      throw std::invalid_argument("HdSplitConfig: counts must be nonnegative");
  }
};

/// Counts for the network where both the base station and the n users are
/// full duplex (each user has one transmit and one receive antenna).
struct FdConfig {
  int m1 = 0;
  int m2 = 0;
  int n = 0;

  FdConfig() = default;
  FdConfig(int m1_, int m2_, int n_) : m1(m1_), m2(m2_), n(n_) {
    if (m1 < 0 || m2 < 0 || n < 0)
      throw std::invalid_argument("FdConfig: counts must be nonnegative");
  }
};

/// Seed for reproducible channel draws. Equal seeds with equal parameters
/// give bit-identical realizations within one build.
struct RngSeed {
  std::uint64_t value = 0;
};

/// splitmix64-style mix, used to derive independent per-trial sub-seeds so
/// Monte-Carlo results do not depend on evaluation order.
inline std::uint64_t sub_seed(RngSeed base, std::uint64_t index) {
  std::uint64_t z = base.value + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace fdcell
