#pragma once

// Small builders and assertions shared by the unit tests. Oracles that need
// an independent evaluation path live next to the tests that use them.

#include "doctest.h"
#include "sjk/numkit.hpp"
#include "sjk/random.hpp"

#include <functional>
#include <initializer_list>

namespace sjk::test {

inline CMat cm(std::initializer_list<std::initializer_list<cplx>> rows) {
  CMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const cplx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline RMat rm(std::initializer_list<std::initializer_list<double>> rows) {
  RMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline CMat scalar(cplx v) { return CMat::Constant(1, 1, v); }
inline RMat rscalar(double v) { return RMat::Constant(1, 1, v); }

inline CMat eye(int n) { return CMat::Identity(n, n); }

/// Max absolute entrywise gap.
inline double max_abs(const CMat& a, const CMat& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return a.rows() * a.cols() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

/// Runs fn and reports the ErrorKind it raised, if any.
inline bool raises(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace sjk::test
