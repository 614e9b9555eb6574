#include "sjk/numkit.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace sjk {

namespace {

bool fast_from_env() {
  const char* v = std::getenv("SJK_FAST");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

std::atomic<bool>& validation_flag() {
  static std::atomic<bool> flag{!fast_from_env()};
  return flag;
}

std::string shape_of(const CMat& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::conditioning: return "conditioning error";
    case ErrorKind::numeric: return "numeric error";
    case ErrorKind::consistency: return "consistency error";
    case ErrorKind::range: return "range error";
  }
  return "error";
}

void Tolerance::validate() const {
  if (!(algebraic_rel > 0 && fd_first_rel > 0 && fd_second_rel > 0 &&
        pd_min_eig > 0)) {
    throw Error(ErrorKind::invalid_argument,
                "tolerances must be strictly positive");
  }
}

bool validation_enabled() { return validation_flag().load(); }
void set_validation_enabled(bool enabled) { validation_flag().store(enabled); }

void require_square(const CMat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::dimension,
                std::string(what) + " must be square, got " + shape_of(a));
  }
}

void require_shape(const CMat& a, Eigen::Index rows, Eigen::Index cols,
                   const char* what) {
  if (a.rows() != rows || a.cols() != cols) {
    throw Error(ErrorKind::dimension,
                std::string(what) + " must be " + std::to_string(rows) + "x" +
                    std::to_string(cols) + ", got " + shape_of(a));
  }
}

void require_finite(const CMat& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorKind::numeric, std::string(what) + " has non-finite entries");
  }
}

cplx trace_sigma(const CMat& a) {
  require_square(a, "trace argument");
  return a.trace();
}

CMat bracket(const CMat& a, const CMat& b) {
  require_square(a, "bracket left operand");
  if (b.rows() != a.cols()) {
    throw Error(ErrorKind::dimension, "bracket: A is " + shape_of(a) +
                                          " but B is " + shape_of(b));
  }
  return b.transpose() * a * b;
}

double frobenius(const CMat& a) { return a.norm(); }

double rel_diff(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::dimension,
                "shape mismatch " + shape_of(a) + " vs " + shape_of(b));
  }
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

double rel_diff(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

bool rel_close(const CMat& a, const CMat& b, double tol) {
  return rel_diff(a, b) <= tol;
}

double symmetry_defect(const CMat& a) {
  require_square(a, "symmetry argument");
  return (a - a.transpose()).norm() / std::max(1.0, a.norm());
}

bool is_symmetric(const CMat& a, const Tolerance& tol) {
  return symmetry_defect(a) <= tol.algebraic_rel;
}

double hermitian_min_eig(const CMat& a) {
  require_square(a, "eigenvalue argument");
  const CMat herm = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numeric, "Hermitian eigensolver did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

bool is_hermitian_pd(const CMat& a, const Tolerance& tol) {
  require_square(a, "positivity argument");
  const double scale = std::max(1.0, a.norm());
  if ((a - a.adjoint()).norm() > tol.algebraic_rel * scale) return false;
  return hermitian_min_eig(a) > tol.pd_min_eig;
}

double condition_number(const CMat& a) {
  require_square(a, "condition argument");
  Eigen::JacobiSVD<CMat> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

CMat guarded_inverse(const CMat& a, const char* what) {
  require_square(a, what);
  require_finite(a, what);
  const double cond = condition_number(a);
  if (!(cond <= kConditionLimit)) {
    throw Error(ErrorKind::conditioning,
                std::string(what) + " is ill-conditioned (cond = " +
                    std::to_string(cond) + ")");
  }
  return a.partialPivLu().inverse();
}

CMat guarded_solve(const CMat& a, const CMat& b, const char* what) {
  require_square(a, what);
  require_finite(a, what);
  const double cond = condition_number(a);
  if (!(cond <= kConditionLimit)) {
    throw Error(ErrorKind::conditioning,
                std::string(what) + " is ill-conditioned (cond = " +
                    std::to_string(cond) + ")");
  }
  return a.partialPivLu().solve(b);
}

CMat symmetrize(const CMat& a) { return (a + a.transpose()) / 2.0; }

CMat to_complex(const RMat& a) { return a.cast<cplx>(); }

}  // namespace sjk
