#include "sjk/geometry.hpp"

#include <cmath>
#include <string>

namespace sjk {

void MetricParams::validate() const {
  if (!(a > 0 && b > 0 && std::isfinite(a) && std::isfinite(b))) {
    throw Error(ErrorKind::invalid_argument, "metric parameters A, B must be positive");
  }
}

namespace detail {

namespace {

int base_count(int g) { return g * (g + 1) / 2; }

int base_index(int g, int i, int j) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 of the upper triangle hold g + (g-1) + ... entries
  return i * g - i * (i - 1) / 2 + (j - i);
}

struct OpEntry {
  int index;
  double weight;
};

// Matrix of first-order operators; entry (r,c) is weight·∂/∂c_index.
struct OpMat {
  int rows;
  int cols;
  std::vector<OpEntry> entries;
  const OpEntry& operator()(int r, int c) const { return entries[r * cols + c]; }
};

OpMat base_op(int g) {
  OpMat m{g, g, {}};
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) m.entries.push_back({base_index(g, i, j), i == j ? 1.0 : 0.5});
  return m;
}

// g×h, (j,k) ↦ ∂/∂z_kj.
OpMat fiber_op(int g, int h) {
  OpMat m{g, h, {}};
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < h; ++k) m.entries.push_back({base_count(g) + k * g + j, 1.0});
  return m;
}

// σ(L ᵗ(R D̄) D) = Σ L_ab R_ce D̄_eb D_ca with the coefficients outside every
// derivative; mixed(a,b) = ∂²/∂c̄_a∂c_b.
cplx trace_term(const CMat& l, const CMat& r, const OpMat& dbar, const OpMat& d,
                const CMat& mixed) {
  const auto m = l.rows();
  const auto n = l.cols();
  const auto p = r.rows();
  const auto q = r.cols();
  if (dbar.rows != q || dbar.cols != n || d.rows != p || d.cols != m) {
    throw Error(ErrorKind::dimension, "Laplacian term has non-conforming shapes");
  }
  cplx sum = 0.0;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      if (l(a, b) == 0.0) continue;
      for (Eigen::Index c = 0; c < p; ++c)
        for (Eigen::Index e = 0; e < q; ++e) {
          const OpEntry& x = dbar(static_cast<int>(e), static_cast<int>(b));
          const OpEntry& y = d(static_cast<int>(c), static_cast<int>(a));
          sum += l(a, b) * r(c, e) * x.weight * y.weight * mixed(x.index, y.index);
        }
    }
  return sum;
}

Coords direction(const Coords& shape, int coord, bool imaginary) {
  Coords d{CMat::Zero(shape.base.rows(), shape.base.cols()),
           CMat::Zero(shape.fiber.rows(), shape.fiber.cols())};
  const cplx unit = imaginary ? kI : cplx(1.0, 0.0);
  const int g = static_cast<int>(shape.base.rows());
  const int nb = base_count(g);
  if (coord < nb) {
    int i = 0;
    while (coord >= base_index(g, i, g - 1) + 1) ++i;
    const int j = i + (coord - base_index(g, i, i));
    d.base(i, j) = unit;
    d.base(j, i) = unit;
  } else {
    const int f = coord - nb;
    d.fiber(f / g, f % g) = unit;
  }
  return d;
}

Coords axpy(const Coords& x, double t, const Coords& d) {
  return {x.base + t * d.base, x.fiber + t * d.fiber};
}

Coords axpy2(const Coords& x, double s, const Coords& d1, double t, const Coords& d2) {
  return {x.base + s * d1.base + t * d2.base, x.fiber + s * d1.fiber + t * d2.fiber};
}

int coord_count(const Coords& c) {
  return base_count(static_cast<int>(c.base.rows())) +
         static_cast<int>(c.fiber.rows() * c.fiber.cols());
}

// Real coordinates in (X, Y, U, V) order.
Eigen::VectorXd real_coords(const Coords& c) {
  const int g = static_cast<int>(c.base.rows());
  const int nb = base_count(g);
  const auto nf = c.fiber.size();
  Eigen::VectorXd out(2 * nb + 2 * nf);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      out(base_index(g, i, j)) = c.base(i, j).real();
      out(nb + base_index(g, i, j)) = c.base(i, j).imag();
    }
  for (Eigen::Index k = 0; k < c.fiber.rows(); ++k)
    for (Eigen::Index l = 0; l < c.fiber.cols(); ++l) {
      const auto idx = k * c.fiber.cols() + l;
      out(2 * nb + idx) = c.fiber(k, l).real();
      out(2 * nb + nf + idx) = c.fiber(k, l).imag();
    }
  return out;
}

}  // namespace

double coords_norm(const Coords& c) {
  return std::sqrt(c.base.squaredNorm() + c.fiber.squaredNorm());
}

double first_step(const Coords& c, double margin) {
  return std::min(1e-6 * std::max(1.0, coords_norm(c)), 1e-3 * margin);
}

double second_step(const Coords& c, double margin) {
  return std::min(1e-4 * std::max(1.0, coords_norm(c)), 1e-2 * margin);
}

std::vector<cplx> wirtinger_first(const CoordField& f, const Coords& at, double step) {
  const int n = coord_count(at);
  std::vector<cplx> out(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Coords dx = direction(at, k, false);
    const Coords dy = direction(at, k, true);
    const cplx fx = (f(axpy(at, step, dx)) - f(axpy(at, -step, dx))) / (2.0 * step);
    const cplx fy = (f(axpy(at, step, dy)) - f(axpy(at, -step, dy))) / (2.0 * step);
    out[2 * k] = 0.5 * (fx - kI * fy);
    out[2 * k + 1] = 0.5 * (fx + kI * fy);
  }
  return out;
}

CMat wirtinger_mixed(const CoordField& f, const Coords& at, double step) {
  const int n = coord_count(at);
  const int nr = 2 * n;  // real direction r = 2k + (imaginary ? 1 : 0)
  std::vector<Coords> dirs;
  dirs.reserve(nr);
  for (int k = 0; k < n; ++k) {
    dirs.push_back(direction(at, k, false));
    dirs.push_back(direction(at, k, true));
  }
  CMat hess(nr, nr);
  const double h = step;
  for (int r = 0; r < nr; ++r)
    for (int s = r; s < nr; ++s) {
      const cplx v = (f(axpy2(at, h, dirs[r], h, dirs[s])) -
                      f(axpy2(at, h, dirs[r], -h, dirs[s])) -
                      f(axpy2(at, -h, dirs[r], h, dirs[s])) +
                      f(axpy2(at, -h, dirs[r], -h, dirs[s]))) /
                     (4.0 * h * h);
      hess(r, s) = v;
      hess(s, r) = v;
    }
  CMat mixed(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // ∂c̄_a∂c_b = ¼(∂x_a + i∂y_a)(∂x_b − i∂y_b)
      mixed(a, b) = 0.25 * ((hess(2 * a, 2 * b) + hess(2 * a + 1, 2 * b + 1)) +
                            kI * (hess(2 * a + 1, 2 * b) - hess(2 * a, 2 * b + 1)));
    }
  return mixed;
}

CMat arrange_gradient(const std::vector<cplx>& d, int g, int h, bool fiber) {
  if (!fiber) {
    CMat m(g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) m(i, j) = (i == j ? 1.0 : 0.5) * d[base_index(g, i, j)];
    return m;
  }
  CMat m(g, h);
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < h; ++k) m(j, k) = d[base_count(g) + k * g + j];
  return m;
}

cplx laplacian_siegel_coeffs(const CMat& mixed, const SiegelPoint& p) {
  const CMat y = to_complex(p.y());
  const OpMat d = base_op(p.degree());
  return 4.0 * trace_term(y, y, d, d, mixed);
}

cplx laplacian_disk_coeffs(const CMat& mixed, const DiskPoint& p) {
  const auto g = p.degree();
  const CMat l = CMat::Identity(g, g) - p.w() * p.w().conjugate();
  const OpMat d = base_op(g);
  return trace_term(l, l, d, d, mixed);
}

cplx laplacian_sj_coeffs(const CMat& mixed, const MetricParams& params,
                         const SiegelJacobiPoint& p, SjLaplacianForm form) {
  params.validate();
  const int g = p.g();
  const int h = p.h();
  const CMat y = to_complex(p.base.y());
  const CMat v = to_complex(p.v());
  const CMat yinv = to_complex(p.base.y().inverse());
  const OpMat dom = base_op(g);
  const OpMat dz = fiber_op(g, h);

  const cplx vv_literal = trace_term(v * yinv * v.transpose(), y, dz, dz, mixed);
  cplx vv_term = vv_literal;
  if (form == SjLaplacianForm::metric_dual) {
    // The Ω-direction dual to the metric is ∂Ω + sym(∂Z·VY⁻¹); the
    // symmetrization contributes σ(V ∂Z̄ V ∂Z) = Σ V_ab V_ce ∂Z̄_bc ∂Z_ea.
    cplx cross = 0.0;
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < g; ++b)
        for (int c = 0; c < h; ++c)
          for (int e = 0; e < g; ++e)
            cross += v(a, b) * v(c, e) * mixed(dz(b, c).index, dz(e, a).index);
    vv_term = 0.5 * (vv_literal + cross);
  }
  const cplx braces = trace_term(y, y, dom, dom, mixed) + vv_term +
                      trace_term(v, y, dom, dz, mixed) +
                      trace_term(v.transpose(), y, dz, dom, mixed);
  // σ(Y ∂Z ᵗ(∂Z̄)) = Σ Y_ab ∂Z_bc ∂Z̄_ac
  cplx fiber_term = 0.0;
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < h; ++c)
        fiber_term += y(a, b) * mixed(dz(a, c).index, dz(b, c).index);
  return 4.0 / params.a * braces + 4.0 / params.b * fiber_term;
}

Coords pushforward_coords(const CoordMap& map, const Coords& at, const Coords& v,
                          double step) {
  const Coords plus = map(axpy(at, step, v));
  const Coords minus = map(axpy(at, -step, v));
  return {symmetrize((plus.base - minus.base) / (2.0 * step)),
          (plus.fiber - minus.fiber) / (2.0 * step)};
}

double jacobian_det_coords(const CoordMap& map, const Coords& at, double step) {
  const int n = coord_count(at);
  const int g = static_cast<int>(at.base.rows());
  const int nb = base_count(g);
  const int nf = n - nb;
  // Input directions in (X, Y, U, V) order.
  std::vector<Coords> dirs;
  for (int k = 0; k < nb; ++k) dirs.push_back(direction(at, k, false));
  for (int k = 0; k < nb; ++k) dirs.push_back(direction(at, k, true));
  for (int k = 0; k < nf; ++k) dirs.push_back(direction(at, nb + k, false));
  for (int k = 0; k < nf; ++k) dirs.push_back(direction(at, nb + k, true));
  RMat jac(2 * n, 2 * n);
  for (int col = 0; col < 2 * n; ++col) {
    const Eigen::VectorXd plus = real_coords(map(axpy(at, step, dirs[col])));
    const Eigen::VectorXd minus = real_coords(map(axpy(at, -step, dirs[col])));
    jac.col(col) = (plus - minus) / (2.0 * step);
  }
  return std::abs(jac.determinant());
}

double real_part_checked(cplx value, double tol, const char* what) {
  if (!(std::abs(value.imag()) <= tol * std::max(1.0, std::abs(value.real())))) {
    throw Error(ErrorKind::numeric, std::string(what) + " has imaginary residual " +
                                        std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace detail

namespace {

void require_tangent(const TangentVector& v, int g, int h, bool need_fiber) {
  require_shape(v.d_base, g, g, "tangent base");
  require_finite(v.d_base, "tangent base");
  if (symmetry_defect(v.d_base) > Tolerance{}.algebraic_rel) {
    throw Error(ErrorKind::domain, "tangent base component is not symmetric");
  }
  if (need_fiber && v.d_fiber.rows() != 0) {
    require_shape(v.d_fiber, h, g, "tangent fiber");
    require_finite(v.d_fiber, "tangent fiber");
  }
}

CMat fiber_or_zero(const TangentVector& v, int g, int h) {
  return v.d_fiber.rows() == 0 ? CMat(CMat::Zero(h, g)) : v.d_fiber;
}

double checked_metric(cplx value, double magnitude, const Tolerance& tol) {
  if (!(std::abs(value.imag()) <= tol.algebraic_rel * std::max(1.0, magnitude))) {
    throw Error(ErrorKind::numeric, "metric value is not real (imaginary part " +
                                        std::to_string(value.imag()) + ")");
  }
  return value.real();
}

}  // namespace

double metric_siegel(const SiegelPoint& p, const TangentVector& v, const Tolerance& tol) {
  require_tangent(v, p.degree(), 0, false);
  const CMat yinv = to_complex(p.y().inverse());
  const cplx val = (yinv * v.d_base * yinv * v.d_base.conjugate()).trace();
  return checked_metric(val, std::abs(val), tol);
}

double metric_disk(const DiskPoint& p, const TangentVector& v, const Tolerance& tol) {
  require_tangent(v, p.degree(), 0, false);
  const auto g = p.degree();
  const CMat id = CMat::Identity(g, g);
  const CMat& w = p.w();
  const CMat left = guarded_inverse(id - w * w.conjugate(), "I-W*conj(W)");
  const CMat right = guarded_inverse(id - w.conjugate() * w, "I-conj(W)*W");
  const cplx val = 4.0 * (left * v.d_base * right * v.d_base.conjugate()).trace();
  return checked_metric(val, std::abs(val), tol);
}

double metric_sj(const MetricParams& params, const SiegelJacobiPoint& p,
                 const TangentVector& v, const Tolerance& tol) {
  params.validate();
  const int g = p.g();
  const int h = p.h();
  require_tangent(v, g, h, true);
  const CMat yinv = to_complex(p.base.y().inverse());
  const CMat vv = to_complex(p.v());
  const CMat& dom = v.d_base;
  const CMat dombar = dom.conjugate();
  const CMat dz = fiber_or_zero(v, g, h);
  const CMat dzbar = dz.conjugate();

  const cplx t0 = (yinv * dom * yinv * dombar).trace();
  const cplx t1 = (yinv * vv.transpose() * vv * yinv * dom * yinv * dombar).trace();
  const cplx t2 = (yinv * dz.transpose() * dzbar).trace();
  const cplx t3 = (vv * yinv * dom * yinv * dzbar.transpose()).trace();
  const cplx t4 = (vv * yinv * dombar * yinv * dz.transpose()).trace();
  const cplx val = params.a * t0 + params.b * (t1 + t2 - t3 - t4);
  const double magnitude =
      params.a * std::abs(t0) +
      params.b * (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4));
  return checked_metric(val, magnitude, tol);
}

double pullback_metric_disk(const MetricParams& params, const DiskJacobiPoint& p,
                            const TangentVector& v, const Tolerance& tol) {
  const TangentVector pushed = pushforward_partial_cayley(p, v, tol);
  return metric_sj(params, partial_cayley(p, tol), pushed, tol);
}

double volume_density(const SiegelJacobiPoint& p) {
  const double det = p.base.y().determinant();
  return std::pow(det, -static_cast<double>(p.g() + p.h() + 1));
}

cplx laplacian_siegel_complex(const ScalarField<SiegelPoint>& f, const SiegelPoint& p,
                              const Tolerance& tol) {
  const detail::Coords c = detail::coords_of(p);
  const CMat mixed =
      detail::wirtinger_mixed(detail::lift(f, tol), c, detail::second_step(c, p.margin()));
  return detail::laplacian_siegel_coeffs(mixed, p);
}

double laplacian_siegel(const ScalarField<SiegelPoint>& f, const SiegelPoint& p,
                        const Tolerance& tol) {
  return detail::real_part_checked(laplacian_siegel_complex(f, p, tol), tol.fd_second_rel,
                                   "Laplacian");
}

cplx laplacian_disk_complex(const ScalarField<DiskPoint>& f, const DiskPoint& p,
                            const Tolerance& tol) {
  const detail::Coords c = detail::coords_of(p);
  const CMat mixed =
      detail::wirtinger_mixed(detail::lift(f, tol), c, detail::second_step(c, p.margin()));
  return detail::laplacian_disk_coeffs(mixed, p);
}

double laplacian_disk(const ScalarField<DiskPoint>& f, const DiskPoint& p,
                      const Tolerance& tol) {
  return detail::real_part_checked(laplacian_disk_complex(f, p, tol), tol.fd_second_rel,
                                   "Laplacian");
}

cplx laplacian_sj_complex(const MetricParams& params,
                          const ScalarField<SiegelJacobiPoint>& f,
                          const SiegelJacobiPoint& p, const Tolerance& tol,
                          SjLaplacianForm form) {
  const detail::Coords c = detail::coords_of(p);
  const CMat mixed = detail::wirtinger_mixed(detail::lift(f, tol), c,
                                             detail::second_step(c, p.base.margin()));
  return detail::laplacian_sj_coeffs(mixed, params, p, form);
}

double laplacian_sj(const MetricParams& params, const ScalarField<SiegelJacobiPoint>& f,
                    const SiegelJacobiPoint& p, const Tolerance& tol,
                    SjLaplacianForm form) {
  return detail::real_part_checked(laplacian_sj_complex(params, f, p, tol, form),
                                   tol.fd_second_rel, "Laplacian");
}

TangentVector pushforward_cayley(const DiskPoint& p, const TangentVector& v,
                                 const Tolerance& tol) {
  const std::function<SiegelPoint(const DiskPoint&)> map =
      [tol](const DiskPoint& q) { return cayley(q, tol); };
  return pushforward(map, p, v, tol);
}

TangentVector pushforward_partial_cayley(const DiskJacobiPoint& p, const TangentVector& v,
                                         const Tolerance& tol) {
  const std::function<SiegelJacobiPoint(const DiskJacobiPoint&)> map =
      [tol](const DiskJacobiPoint& q) { return partial_cayley(q, tol); };
  return pushforward(map, p, v, tol);
}

TangentVector pushforward_jacobi_action(const JacobiElement& a, const SiegelJacobiPoint& p,
                                        const TangentVector& v, const Tolerance& tol) {
  const std::function<SiegelJacobiPoint(const SiegelJacobiPoint&)> map =
      [a, tol](const SiegelJacobiPoint& q) { return act_jacobi(a, q, tol); };
  return pushforward(map, p, v, tol);
}

// --- test-field corpus -----------------------------------------------------

const char* field_name(FieldId id) {
  switch (id) {
    case FieldId::sigma_re_omega: return "sigma-re-omega";
    case FieldId::log_det_y: return "log-det-y";
    case FieldId::sigma_y_vtv: return "sigma-y-vtv";
    case FieldId::re_sigma_z: return "re-sigma-z";
    case FieldId::abs_sigma_z_sq: return "abs-sigma-z-sq";
    case FieldId::log_det_disk: return "log-det-disk";
  }
  return "?";
}

FieldId field_from_name(const std::string& name) {
  for (FieldId id : kAllFields)
    if (name == field_name(id)) return id;
  throw Error(ErrorKind::invalid_argument, "unknown field '" + name + "'");
}

namespace {

double log_det_pd(const CMat& m) {
  Eigen::LLT<CMat> llt((m + m.adjoint()) / 2.0);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::domain, "log det of a matrix that is not positive definite");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) sum += std::log(llt.matrixL()(i, i).real());
  return 2.0 * sum;
}

cplx leading_trace(const CMat& z) {
  cplx s = 0.0;
  for (Eigen::Index k = 0; k < std::min(z.rows(), z.cols()); ++k) s += z(k, k);
  return s;
}

double log_det_disk_at(const CMat& w) {
  const auto g = w.rows();
  return log_det_pd(CMat::Identity(g, g) - w * w.conjugate());
}

}  // namespace

cplx field_value(FieldId id, const CMat& omega, const CMat& z) {
  switch (id) {
    case FieldId::sigma_re_omega: return omega.real().trace();
    case FieldId::log_det_y: return log_det_pd(to_complex(omega.imag()));
    case FieldId::sigma_y_vtv: {
      const RMat v = z.imag();
      return (RMat(omega.imag()) * v.transpose() * v).trace();
    }
    case FieldId::re_sigma_z: return leading_trace(z).real();
    case FieldId::abs_sigma_z_sq: return std::norm(leading_trace(z));
    case FieldId::log_det_disk: {
      const auto g = omega.rows();
      const CMat id = CMat::Identity(g, g);
      const CMat w = (omega - kI * id) * (omega + kI * id).inverse();
      return log_det_disk_at(w);
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown field");
}

ScalarField<SiegelPoint> siegel_field(FieldId id) {
  return [id](const SiegelPoint& p) {
    return field_value(id, p.omega(), CMat(0, p.degree()));
  };
}

ScalarField<DiskPoint> disk_field(FieldId id) {
  return [id](const DiskPoint& p) -> cplx {
    if (id == FieldId::log_det_disk) return log_det_disk_at(p.w());
    return field_value(id, cayley(p).omega(), CMat(0, p.degree()));
  };
}

ScalarField<SiegelJacobiPoint> sj_field(FieldId id) {
  return [id](const SiegelJacobiPoint& p) { return field_value(id, p.base.omega(), p.z); };
}

}  // namespace sjk
