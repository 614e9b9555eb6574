#pragma once

// Harish-Chandra factorizations P⁺·K_C·P⁻, for G_* on its own and for the
// G_*^J-translate of a point of the Siegel-Jacobi disk embedded in P_*⁺.

#include "sjk/spaces.hpp"

namespace sjk {

struct HCFactors {
  CMat pplus_w;   // QP̄⁻¹
  CMat k_p;       // P − QP̄⁻¹Q̄
  CMat k_lower;   // P̄
  CMat pminus_w;  // P̄⁻¹Q̄

  /// [[I,pplus_w],[0,I]]·diag(k_p, k_lower)·[[I,0],[pminus_w,I]].
  CMat reconstruct() const;
};

/// Throws conditioning when P̄ is ill-conditioned and domain when QP̄⁻¹ is
/// not a disk point.
HCFactors hc_decompose_gstar(const GStarElement& gs, const Tolerance& tol = {});

struct KComponent {
  CMat k_p;      // P − (PW+Q)(Q̄W+P̄)⁻¹Q̄
  CMat k_lower;  // Q̄W + P̄
  CMat kappa_star;
  /// Relative gap between the two κ_* expressions (transposed vs symmetric
  /// form of (Q̄W+P̄)⁻¹Q̄).
  double kappa_agreement = 0.0;
};

struct PMinusComponent {
  CMat w;   // (Q̄W+P̄)⁻¹Q̄
  CMat xi;  // ξ − (η′+ξW+η)(Q̄W+P̄)⁻¹Q̄
  double symmetry_defect = 0.0;
};

struct JacobiHCFactors {
  DiskJacobiPoint pplus;
  KComponent k;
  PMinusComponent pminus;

  BigComplexGroupElement pplus_factor() const;
  BigComplexGroupElement k_factor() const;
  BigComplexGroupElement pminus_factor() const;
  BigComplexGroupElement reconstruct() const;
};

/// The disk point (W,η) as the ambient element ((I,W;0,I),(0,η;0)).
BigComplexGroupElement embed_disk_point(const DiskJacobiPoint& p);

/// P_*⁺ coordinates of a·embed(p); equals act_jacobi_disk(a, p) by a separate
/// code path.
DiskJacobiPoint pplus_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                const Tolerance& tol = {});

/// Throws consistency when the two κ_* expressions disagree beyond
/// tol.algebraic_rel.
KComponent kc_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                        const Tolerance& tol = {});

/// Throws consistency when (Q̄W+P̄)⁻¹Q̄ is not symmetric.
PMinusComponent pminus_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                 const Tolerance& tol = {});

struct FullDecomposition {
  JacobiHCFactors factors;
  double reconstruction_residual = 0.0;
};

/// All three components together with the residual of
/// P_*⁺·K·P_*⁻ = a·embed(p); throws consistency beyond tol.algebraic_rel.
FullDecomposition decompose_full(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                 const Tolerance& tol = {});

}  // namespace sjk
