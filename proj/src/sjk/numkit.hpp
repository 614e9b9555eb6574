#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace sjk {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};

/// Largest 2-norm condition number accepted before a linear solve is refused.
inline constexpr double kConditionLimit = 1e12;

enum class ErrorKind {
  invalid_argument,
  dimension,
  domain,
  conditioning,
  numeric,
  consistency,
  range,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Tolerance {
  double algebraic_rel = 1e-9;
  double fd_first_rel = 1e-6;
  double fd_second_rel = 1e-4;
  double pd_min_eig = 1e-12;

  /// Throws invalid_argument unless every field is strictly positive.
  void validate() const;
};

// Invariant re-validation of group products and action outputs. Process-wide;
// initialised from SJK_FAST (SJK_FAST=1 disables it).
bool validation_enabled();
void set_validation_enabled(bool enabled);

cplx trace_sigma(const CMat& a);

/// A[B] = ᵗB·A·B.
CMat bracket(const CMat& a, const CMat& b);

double frobenius(const CMat& a);

/// ‖a−b‖_F / max(1, ‖a‖_F, ‖b‖_F).
double rel_diff(const CMat& a, const CMat& b);
double rel_diff(cplx a, cplx b);
bool rel_close(const CMat& a, const CMat& b, double tol);

bool is_symmetric(const CMat& a, const Tolerance& tol = {});
double symmetry_defect(const CMat& a);

/// Smallest eigenvalue of the Hermitian part of a.
double hermitian_min_eig(const CMat& a);
bool is_hermitian_pd(const CMat& a, const Tolerance& tol = {});

/// Inverse with a 2-norm condition guard; `what` names the matrix in errors.
CMat guarded_inverse(const CMat& a, const char* what);
/// a⁻¹b under the same condition guard.
CMat guarded_solve(const CMat& a, const CMat& b, const char* what);
double condition_number(const CMat& a);

CMat symmetrize(const CMat& a);
CMat to_complex(const RMat& a);

void require_square(const CMat& a, const char* what);
void require_shape(const CMat& a, Eigen::Index rows, Eigen::Index cols,
                   const char* what);
void require_finite(const CMat& a, const char* what);

}  // namespace sjk
