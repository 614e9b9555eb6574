#include "sjk/random.hpp"

namespace sjk {

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    s = mix64(x);
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

RMat Rng::real_matrix(Eigen::Index rows, Eigen::Index cols, double bound) {
  RMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

RMat Rng::real_symmetric(Eigen::Index n, double bound) {
  RMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(-bound, bound);
  return m;
}

CMat Rng::complex_matrix(Eigen::Index rows, Eigen::Index cols, double bound) {
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = uniform(-bound, bound);
      m(i, j) = cplx(re, uniform(-bound, bound));
    }
  return m;
}

CMat Rng::complex_symmetric(Eigen::Index n, double bound) {
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      const double re = uniform(-bound, bound);
      m(i, j) = m(j, i) = cplx(re, uniform(-bound, bound));
    }
  return m;
}

}  // namespace sjk
