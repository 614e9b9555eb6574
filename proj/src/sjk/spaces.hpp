#pragma once

// The Siegel upper half space H_g, the generalized unit disk D_g, their
// Jacobi extensions H_g × C^(h,g) and D_g × C^(h,g), the group actions on
// them, and the (partial) Cayley transforms between the two models.

#include "sjk/groups.hpp"

#include <variant>

namespace sjk {

/// Ω symmetric with Im Ω positive definite.
class SiegelPoint {
 public:
  static SiegelPoint make(const CMat& omega, const Tolerance& tol = {});

  const CMat& omega() const { return omega_; }
  RMat x() const { return omega_.real(); }
  RMat y() const { return omega_.imag(); }
  int degree() const { return static_cast<int>(omega_.rows()); }
  /// Smallest eigenvalue of Y.
  double margin() const { return margin_; }

 private:
  SiegelPoint(CMat omega, double margin) : omega_(std::move(omega)), margin_(margin) {}
  CMat omega_;
  double margin_;
};

/// W symmetric with I − W·W̄ positive definite.
class DiskPoint {
 public:
  static DiskPoint make(const CMat& w, const Tolerance& tol = {});

  const CMat& w() const { return w_; }
  int degree() const { return static_cast<int>(w_.rows()); }
  /// Smallest eigenvalue of I − W·W̄.
  double margin() const { return margin_; }

 private:
  DiskPoint(CMat w, double margin) : w_(std::move(w)), margin_(margin) {}
  CMat w_;
  double margin_;
};

struct SiegelJacobiPoint {
  SiegelPoint base;
  CMat z;  // h×g

  static SiegelJacobiPoint make(const CMat& omega, const CMat& z,
                                const Tolerance& tol = {});
  int g() const { return base.degree(); }
  int h() const { return static_cast<int>(z.rows()); }
  RMat u() const { return z.real(); }
  RMat v() const { return z.imag(); }
};

struct DiskJacobiPoint {
  DiskPoint base;
  CMat eta;  // h×g

  static DiskJacobiPoint make(const CMat& w, const CMat& eta,
                              const Tolerance& tol = {});
  int g() const { return base.degree(); }
  int h() const { return static_cast<int>(eta.rows()); }
};

/// M·Ω = (AΩ+B)(CΩ+D)⁻¹.
SiegelPoint act_siegel(const SymplecticMatrix& m, const SiegelPoint& p,
                       const Tolerance& tol = {});
/// (P,Q)·W = (PW+Q)(Q̄W+P̄)⁻¹.
DiskPoint act_disk(const GStarElement& gs, const DiskPoint& p,
                   const Tolerance& tol = {});
/// (M,(λ,μ;κ))·(Ω,Z) = (M·Ω, (Z+λΩ+μ)(CΩ+D)⁻¹); κ does not enter.
SiegelJacobiPoint act_jacobi(const JacobiElement& a, const SiegelJacobiPoint& p,
                             const Tolerance& tol = {});
/// ((P,Q),(ξ,η;ζ))·(W,η′) = ((PW+Q)(Q̄W+P̄)⁻¹, (η′+ξW+η)(Q̄W+P̄)⁻¹).
DiskJacobiPoint act_jacobi_disk(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                const Tolerance& tol = {});

/// Φ(W) = i(I+W)(I−W)⁻¹.
SiegelPoint cayley(const DiskPoint& p, const Tolerance& tol = {});
/// Φ⁻¹(Ω) = (Ω−iI)(Ω+iI)⁻¹.
DiskPoint cayley_inv(const SiegelPoint& p, const Tolerance& tol = {});
/// Φ_*(W,η) = (i(I+W)(I−W)⁻¹, 2iη(I−W)⁻¹).
SiegelJacobiPoint partial_cayley(const DiskJacobiPoint& p, const Tolerance& tol = {});
/// Φ_*⁻¹(Ω,Z) = ((Ω−iI)(Ω+iI)⁻¹, Z(Ω+iI)⁻¹).
DiskJacobiPoint partial_cayley_inv(const SiegelJacobiPoint& p,
                                   const Tolerance& tol = {});

double point_distance(const SiegelPoint& a, const SiegelPoint& b);
double point_distance(const DiskPoint& a, const DiskPoint& b);
double point_distance(const SiegelJacobiPoint& a, const SiegelJacobiPoint& b);
double point_distance(const DiskJacobiPoint& a, const DiskJacobiPoint& b);

/// Residual of a·Φ_*(p) = Φ_*(Θ(a)·p): max of the base and fiber relative
/// Frobenius gaps.
double check_compatibility(const JacobiElement& a, const DiskJacobiPoint& p,
                           const Tolerance& tol = {});
/// Residual of M·Φ(W) = Φ((T⁻¹MT)·W).
double check_compatibility_classical(const SymplecticMatrix& m, const DiskPoint& p,
                                     const Tolerance& tol = {});

// Seeded sampling. Disk points: W = 0.9·S/(1+‖S‖₂) with S random complex
// symmetric, so ‖W‖₂ < 0.9. Siegel points: X + i(ᵗRR + 0.1·I). Fibers have
// entries with real and imaginary parts in [−scale, scale].
SiegelPoint sample_siegel(Rng& rng, int g, double scale);
DiskPoint sample_disk(Rng& rng, int g);
SiegelJacobiPoint sample_siegel_jacobi(Rng& rng, int g, int h, double scale);
DiskJacobiPoint sample_disk_jacobi(Rng& rng, int g, int h, double scale);

enum class PointKind { siegel, disk, siegel_jacobi, disk_jacobi };

using AnyPoint = std::variant<SiegelPoint, DiskPoint, SiegelJacobiPoint, DiskJacobiPoint>;

AnyPoint sample_point(PointKind kind, int g, int h, std::uint64_t seed,
                      double scale = kDefaultScale);

}  // namespace sjk
