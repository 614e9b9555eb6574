#pragma once

#include "sjk/numkit.hpp"

#include <cstdint>

namespace sjk {

/// splitmix64 finaliser; also used to derive per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ (index * 0xd1b54a32d192ed03ULL));
}

// xoshiro256** seeded through splitmix64. Output is defined bit-for-bit, so
// sampled elements do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0, 1).
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int uniform_int(int lo, int hi);  // inclusive

  RMat real_matrix(Eigen::Index rows, Eigen::Index cols, double bound);
  RMat real_symmetric(Eigen::Index n, double bound);
  CMat complex_matrix(Eigen::Index rows, Eigen::Index cols, double bound);
  CMat complex_symmetric(Eigen::Index n, double bound);

 private:
  std::uint64_t s_[4];
};

}  // namespace sjk
