#pragma once

// Canonical automorphic factors of G_*^J: J = χ(a)·ρ(b) with a the κ_*
// summand and b the K_C block, characters χ_M(c) = exp(−2πi σ(Mc)) and the
// representations det^k and the standard one.

#include "sjk/decomp.hpp"

#include <string>

namespace sjk {

/// Real symmetric h×h index matrix with optional half-integrality and
/// semi-definiteness constraints.
struct IndexMatrix {
  RMat m;
  bool half_integral = false;
  bool psd = false;

  int h() const { return static_cast<int>(m.rows()); }
  void validate(const Tolerance& tol = {}) const;
};

struct Representation {
  enum class Kind { det_power, standard };
  Kind kind = Kind::det_power;
  int k = 0;

  static Representation det_power(int k) { return {Kind::det_power, k}; }
  static Representation standard() { return {Kind::standard, 0}; }
  /// "det:k" or "std".
  static Representation parse(const std::string& text);
  std::string to_string() const;
  int dimension(int g) const { return kind == Kind::standard ? g : 1; }
};

/// exp(−2πi σ(Mc)); throws range when the real part of the exponent
/// exceeds 700 in magnitude.
cplx chi_character(const IndexMatrix& idx, const CMat& c);

/// det(P)^k as a 1×1 matrix, or P itself. Throws domain for singular P.
CMat rho_eval(const Representation& rep, const CMat& p);

/// κ_* of the K_C component.
CMat summand_a(const GStarJacobiElement& a, const DiskJacobiPoint& p,
               const Tolerance& tol = {});

struct KBlocks {
  CMat upper;  // P − (PW+Q)(Q̄W+P̄)⁻¹Q̄
  CMat lower;  // Q̄W + P̄
};

KBlocks factor_b(const GStarElement& gs, const DiskPoint& w);
KBlocks factor_b(const GStarJacobiElement& a, const DiskJacobiPoint& p);

/// χ_M(κ_*)·ρ(Q̄W+P̄).
CMat j_factor(const IndexMatrix& idx, const Representation& rep,
              const GStarJacobiElement& a, const DiskJacobiPoint& p,
              const Tolerance& tol = {});

struct CocycleResiduals {
  double additive = 0.0;
  double multiplicative = 0.0;
  double max() const { return std::max(additive, multiplicative); }
};

/// Relative residuals of a(g₁g₂,p) = a(g₁,g₂·p) + a(g₂,p) and
/// J(g₁g₂,p) = J(g₁,g₂·p)·J(g₂,p).
CocycleResiduals cocycle_residuals(const IndexMatrix& idx, const Representation& rep,
                                   const GStarJacobiElement& g1,
                                   const GStarJacobiElement& g2, const DiskJacobiPoint& p,
                                   const Tolerance& tol = {});

double verify_cocycle(const IndexMatrix& idx, const Representation& rep,
                      const GStarJacobiElement& g1, const GStarJacobiElement& g2,
                      const DiskJacobiPoint& p, const Tolerance& tol = {});

/// The fixed half-integral example: 2 on the diagonal, 1/2 off it.
IndexMatrix half_integral_example(int h);

}  // namespace sjk
