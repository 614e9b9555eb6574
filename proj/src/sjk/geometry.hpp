#pragma once

// Invariant metrics, Laplacians and volume density on the four domains,
// realized numerically: Laplacians act on arbitrary scalar fields through
// finite-difference Wirtinger derivatives, and differentials of the actions
// and Cayley maps are taken by complex-linear central differences.
//
// Derivative conventions:
//  * A symmetric matrix variable is coordinatized by its upper triangle.
//    Moving the (μ,ν) coordinate moves both (μ,ν) and (ν,μ) entries, and
//    ∂/∂Ω carries the weight (1+δ_μν)/2, so σ(A·∂/∂Ω) σ(BΩ) = σ(AB) for
//    symmetric A, B.
//  * ∂/∂Z for Z ∈ C^(h,g) is the g×h matrix whose (j,k) entry is ∂/∂z_kj.

#include "sjk/spaces.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sjk {

struct TangentVector {
  CMat d_base;   // dΩ or dW, symmetric g×g
  CMat d_fiber;  // dZ or dη, h×g; zero rows on base-only spaces
};

struct MetricParams {
  double a = 1.0;
  double b = 1.0;
  void validate() const;
};

/// ds² = σ(Y⁻¹dΩ Y⁻¹dΩ̄).
double metric_siegel(const SiegelPoint& p, const TangentVector& v,
                     const Tolerance& tol = {});
/// ds_*² = 4σ((I−WW̄)⁻¹dW (I−W̄W)⁻¹dW̄).
double metric_disk(const DiskPoint& p, const TangentVector& v, const Tolerance& tol = {});
/// The two-parameter G^J-invariant metric on H_g × C^(h,g).
double metric_sj(const MetricParams& params, const SiegelJacobiPoint& p,
                 const TangentVector& v, const Tolerance& tol = {});
/// metric_sj at Φ_*(p) applied to the numerical pushforward of v.
double pullback_metric_disk(const MetricParams& params, const DiskJacobiPoint& p,
                            const TangentVector& v, const Tolerance& tol = {});

/// (det Y)^{−(g+h+1)}.
double volume_density(const SiegelJacobiPoint& p);

template <class Point>
using ScalarField = std::function<cplx(const Point&)>;

enum class WirtingerPart { base, base_bar, fiber, fiber_bar };

/// metric_dual is the Laplace-Beltrami operator of metric_sj. literal keeps
/// the unsymmetrized V-quadratic fiber term σ(VY⁻¹ᵗV ᵗ(Y∂Z̄)∂Z); the two
/// agree for g = 1 only, and only metric_dual commutes with the action for
/// g ≥ 2.
enum class SjLaplacianForm { metric_dual, literal };

namespace detail {

struct Coords {
  CMat base;
  CMat fiber;  // may have zero rows
};

inline Coords coords_of(const SiegelPoint& p) { return {p.omega(), CMat(0, p.degree())}; }
inline Coords coords_of(const DiskPoint& p) { return {p.w(), CMat(0, p.degree())}; }
inline Coords coords_of(const SiegelJacobiPoint& p) { return {p.base.omega(), p.z}; }
inline Coords coords_of(const DiskJacobiPoint& p) { return {p.base.w(), p.eta}; }

inline double margin_of(const SiegelPoint& p) { return p.margin(); }
inline double margin_of(const DiskPoint& p) { return p.margin(); }
inline double margin_of(const SiegelJacobiPoint& p) { return p.base.margin(); }
inline double margin_of(const DiskJacobiPoint& p) { return p.base.margin(); }

template <class P>
P point_from(const Coords& c, const Tolerance& tol);
template <>
inline SiegelPoint point_from<SiegelPoint>(const Coords& c, const Tolerance& tol) {
  return SiegelPoint::make(c.base, tol);
}
template <>
inline DiskPoint point_from<DiskPoint>(const Coords& c, const Tolerance& tol) {
  return DiskPoint::make(c.base, tol);
}
template <>
inline SiegelJacobiPoint point_from<SiegelJacobiPoint>(const Coords& c,
                                                       const Tolerance& tol) {
  return SiegelJacobiPoint::make(c.base, c.fiber, tol);
}
template <>
inline DiskJacobiPoint point_from<DiskJacobiPoint>(const Coords& c, const Tolerance& tol) {
  return DiskJacobiPoint::make(c.base, c.fiber, tol);
}

using CoordField = std::function<cplx(const Coords&)>;
using CoordMap = std::function<Coords(const Coords&)>;

double coords_norm(const Coords& c);

/// Step for first-order differences: 1e-6·max(1,‖p‖), capped at 1e-3·margin.
double first_step(const Coords& c, double margin);
/// Step for second-order differences: 1e-4·max(1,‖p‖), capped at margin/100.
double second_step(const Coords& c, double margin);

/// Unweighted ∂f/∂c_k (conjugate = false) or ∂f/∂c̄_k for every complex
/// coordinate c_k: upper-triangle base entries first, then fiber entries
/// row-major.
std::vector<cplx> wirtinger_first(const CoordField& f, const Coords& at, double step);
/// M(a,b) = ∂²f/∂c̄_a∂c_b.
CMat wirtinger_mixed(const CoordField& f, const Coords& at, double step);
/// Weighted gradient arranged as a matrix (see the header comment).
CMat arrange_gradient(const std::vector<cplx>& d, int g, int h, bool fiber);

cplx laplacian_siegel_coeffs(const CMat& mixed, const SiegelPoint& p);
cplx laplacian_disk_coeffs(const CMat& mixed, const DiskPoint& p);
cplx laplacian_sj_coeffs(const CMat& mixed, const MetricParams& params,
                         const SiegelJacobiPoint& p,
                         SjLaplacianForm form = SjLaplacianForm::metric_dual);

Coords pushforward_coords(const CoordMap& map, const Coords& at, const Coords& v,
                          double step);
/// Real Jacobian determinant of the map in the (X, Y, U, V) real coordinates.
double jacobian_det_coords(const CoordMap& map, const Coords& at, double step);

double real_part_checked(cplx value, double tol, const char* what);

template <class P>
CoordField lift(const ScalarField<P>& f, const Tolerance& tol) {
  return [f, tol](const Coords& c) {
    std::optional<P> q;
    try {
      q.emplace(point_from<P>(c, tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::domain) throw;
      throw Error(ErrorKind::domain,
                  std::string("finite-difference stencil left the domain: ") + e.what());
    }
    return f(*q);
  };
}

template <class P, class Q>
CoordMap lift_map(const std::function<Q(const P&)>& map, const Tolerance& tol) {
  return [map, tol](const Coords& c) {
    std::optional<P> q;
    try {
      q.emplace(point_from<P>(c, tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::domain) throw;
      throw Error(ErrorKind::domain,
                  std::string("finite-difference stencil left the domain: ") + e.what());
    }
    return coords_of(map(*q));
  };
}

}  // namespace detail

/// Weighted Wirtinger derivatives of f at p by central differences.
template <class P>
CMat wirtinger_gradient(const ScalarField<P>& f, const P& p, WirtingerPart which,
                        const Tolerance& tol = {}) {
  const detail::Coords c = detail::coords_of(p);
  const double step = detail::first_step(c, detail::margin_of(p));
  const std::vector<cplx> d = detail::wirtinger_first(detail::lift(f, tol), c, step);
  const int g = static_cast<int>(c.base.rows());
  const int h = static_cast<int>(c.fiber.rows());
  const bool fiber = which == WirtingerPart::fiber || which == WirtingerPart::fiber_bar;
  if (fiber && h == 0) throw Error(ErrorKind::invalid_argument, "point has no fiber");
  const bool bar = which == WirtingerPart::base_bar || which == WirtingerPart::fiber_bar;
  // d holds (∂/∂c_k, ∂/∂c̄_k) pairs.
  std::vector<cplx> part(d.size() / 2);
  for (std::size_t k = 0; k < part.size(); ++k) part[k] = d[2 * k + (bar ? 1 : 0)];
  return detail::arrange_gradient(part, g, h, fiber);
}

/// Δ = 4σ(Y ᵗ(Y ∂/∂Ω̄) ∂/∂Ω), complex-valued for complex f.
cplx laplacian_siegel_complex(const ScalarField<SiegelPoint>& f, const SiegelPoint& p,
                              const Tolerance& tol = {});
/// Real Δf; throws numeric if the imaginary residual exceeds fd_second_rel.
double laplacian_siegel(const ScalarField<SiegelPoint>& f, const SiegelPoint& p,
                        const Tolerance& tol = {});

/// Δ_* = σ((I−WW̄) ᵗ((I−WW̄) ∂/∂W̄) ∂/∂W).
cplx laplacian_disk_complex(const ScalarField<DiskPoint>& f, const DiskPoint& p,
                            const Tolerance& tol = {});
double laplacian_disk(const ScalarField<DiskPoint>& f, const DiskPoint& p,
                      const Tolerance& tol = {});

/// (4/A){σ(Y ᵗ(Y∂Ω̄)∂Ω) + T + σ(V ᵗ(Y∂Ω̄)∂Z) + σ(ᵗV ᵗ(Y∂Z̄)∂Ω)}
///   + (4/B)σ(Y ∂Z ᵗ(∂Z̄)),
/// with T = ½{σ(VY⁻¹ᵗV ᵗ(Y∂Z̄)∂Z) + σ(V ∂Z̄ V ∂Z)} (metric_dual) or
/// T = σ(VY⁻¹ᵗV ᵗ(Y∂Z̄)∂Z) (literal).
cplx laplacian_sj_complex(const MetricParams& params,
                          const ScalarField<SiegelJacobiPoint>& f,
                          const SiegelJacobiPoint& p, const Tolerance& tol = {},
                          SjLaplacianForm form = SjLaplacianForm::metric_dual);
double laplacian_sj(const MetricParams& params, const ScalarField<SiegelJacobiPoint>& f,
                    const SiegelJacobiPoint& p, const Tolerance& tol = {},
                    SjLaplacianForm form = SjLaplacianForm::metric_dual);

/// Differential of a holomorphic map at p applied to v:
/// (map(p+hv) − map(p−hv))/(2h), base re-symmetrized.
template <class P, class Q>
TangentVector pushforward(const std::function<Q(const P&)>& map, const P& p,
                          const TangentVector& v, const Tolerance& tol = {}) {
  const detail::Coords c = detail::coords_of(p);
  detail::Coords dv{v.d_base, v.d_fiber};
  // A missing fiber component on a Jacobi space means dZ = 0.
  if (dv.fiber.rows() == 0) dv.fiber = CMat::Zero(c.fiber.rows(), c.fiber.cols());
  require_shape(dv.base, c.base.rows(), c.base.cols(), "tangent base");
  require_shape(dv.fiber, c.fiber.rows(), c.fiber.cols(), "tangent fiber");
  const double scale = std::max(1.0, detail::coords_norm(dv));
  const double step = detail::first_step(c, detail::margin_of(p)) / scale;
  const detail::Coords out =
      detail::pushforward_coords(detail::lift_map(map, tol), c, dv, step);
  return {out.base, out.fiber};
}

/// |det| of the real Jacobian of map at p in (X, Y, U, V) coordinates.
template <class P, class Q>
double jacobian_determinant(const std::function<Q(const P&)>& map, const P& p,
                            const Tolerance& tol = {}) {
  const detail::Coords c = detail::coords_of(p);
  return detail::jacobian_det_coords(detail::lift_map(map, tol), c,
                                     detail::first_step(c, detail::margin_of(p)));
}

TangentVector pushforward_cayley(const DiskPoint& p, const TangentVector& v,
                                 const Tolerance& tol = {});
TangentVector pushforward_partial_cayley(const DiskJacobiPoint& p, const TangentVector& v,
                                         const Tolerance& tol = {});
TangentVector pushforward_jacobi_action(const JacobiElement& a, const SiegelJacobiPoint& p,
                                        const TangentVector& v, const Tolerance& tol = {});

// Fixed test-field corpus. Every field is a function of (Ω, Z) on the
// Siegel-Jacobi space; σ(Z) for rectangular Z sums the leading diagonal.
enum class FieldId {
  sigma_re_omega,   // σ(Re Ω)
  log_det_y,        // log det Y
  sigma_y_vtv,      // σ(Y ᵗV V)
  re_sigma_z,       // Re σ(Z)
  abs_sigma_z_sq,   // |σ(Z)|²
  log_det_disk,     // log det(I − WW̄), W = Φ⁻¹(Ω)
};

inline constexpr FieldId kAllFields[] = {
    FieldId::sigma_re_omega, FieldId::log_det_y,      FieldId::sigma_y_vtv,
    FieldId::re_sigma_z,     FieldId::abs_sigma_z_sq, FieldId::log_det_disk};

const char* field_name(FieldId id);
FieldId field_from_name(const std::string& name);

cplx field_value(FieldId id, const CMat& omega, const CMat& z);
/// The field on H_g (Z = 0).
ScalarField<SiegelPoint> siegel_field(FieldId id);
/// The field transported to D_g through Φ (log_det_disk is evaluated directly).
ScalarField<DiskPoint> disk_field(FieldId id);
ScalarField<SiegelJacobiPoint> sj_field(FieldId id);

}  // namespace sjk
