#include "sjk/spaces.hpp"

#include <string>

namespace sjk {

namespace {

CMat symmetric_output(const CMat& m, const char* what, const Tolerance& tol) {
  if (validation_enabled()) {
    const double defect = symmetry_defect(m);
    if (!(defect <= tol.algebraic_rel)) {
      throw Error(ErrorKind::consistency, std::string(what) +
                                              " lost symmetry (defect " +
                                              std::to_string(defect) + ")");
    }
  }
  return symmetrize(m);
}

void require_fiber(const CMat& fiber, int g, const char* what) {
  if (fiber.rows() == 0 || fiber.cols() != g) {
    throw Error(ErrorKind::dimension,
                std::string(what) + " must be h x " + std::to_string(g));
  }
  require_finite(fiber, what);
}

void require_degree_match(int a, int b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::dimension, std::string(op) + ": degree mismatch (" +
                                          std::to_string(a) + " vs " +
                                          std::to_string(b) + ")");
  }
}

}  // namespace

SiegelPoint SiegelPoint::make(const CMat& omega, const Tolerance& tol) {
  require_square(omega, "Omega");
  require_finite(omega, "Omega");
  if (!is_symmetric(omega, tol)) {
    throw Error(ErrorKind::domain, "Omega is not symmetric");
  }
  CMat sym = symmetrize(omega);
  const double margin = hermitian_min_eig(to_complex(sym.imag()));
  if (!(margin > tol.pd_min_eig)) {
    throw Error(ErrorKind::domain, "Im Omega is not positive definite (min eig " +
                                       std::to_string(margin) + ")");
  }
  return SiegelPoint(std::move(sym), margin);
}

DiskPoint DiskPoint::make(const CMat& w, const Tolerance& tol) {
  require_square(w, "W");
  require_finite(w, "W");
  if (!is_symmetric(w, tol)) throw Error(ErrorKind::domain, "W is not symmetric");
  CMat sym = symmetrize(w);
  const auto g = sym.rows();
  const double margin =
      hermitian_min_eig(CMat::Identity(g, g) - sym * sym.conjugate());
  if (!(margin > tol.pd_min_eig)) {
    throw Error(ErrorKind::domain, "I - W*conj(W) is not positive definite (min eig " +
                                       std::to_string(margin) + ")");
  }
  return DiskPoint(std::move(sym), margin);
}

SiegelJacobiPoint SiegelJacobiPoint::make(const CMat& omega, const CMat& z,
                                          const Tolerance& tol) {
  SiegelPoint base = SiegelPoint::make(omega, tol);
  require_fiber(z, base.degree(), "Z");
  return {std::move(base), z};
}

DiskJacobiPoint DiskJacobiPoint::make(const CMat& w, const CMat& eta,
                                      const Tolerance& tol) {
  DiskPoint base = DiskPoint::make(w, tol);
  require_fiber(eta, base.degree(), "eta");
  return {std::move(base), eta};
}

SiegelPoint act_siegel(const SymplecticMatrix& m, const SiegelPoint& p,
                       const Tolerance& tol) {
  require_degree_match(m.degree(), p.degree(), "act_siegel");
  const CMat& om = p.omega();
  const CMat denom = guarded_inverse(to_complex(m.c()) * om + to_complex(m.d()), "C*Omega+D");
  const CMat out = (to_complex(m.a()) * om + to_complex(m.b())) * denom;
  return SiegelPoint::make(symmetric_output(out, "act_siegel", tol), tol);
}

DiskPoint act_disk(const GStarElement& gs, const DiskPoint& p, const Tolerance& tol) {
  require_degree_match(gs.degree(), p.degree(), "act_disk");
  const CMat& w = p.w();
  const CMat denom =
      guarded_inverse(gs.q.conjugate() * w + gs.p.conjugate(), "conj(Q)W+conj(P)");
  const CMat out = (gs.p * w + gs.q) * denom;
  return DiskPoint::make(symmetric_output(out, "act_disk", tol), tol);
}

SiegelJacobiPoint act_jacobi(const JacobiElement& a, const SiegelJacobiPoint& p,
                             const Tolerance& tol) {
  require_degree_match(a.g(), p.g(), "act_jacobi");
  require_degree_match(a.h(), p.h(), "act_jacobi (h)");
  const CMat& om = p.base.omega();
  const CMat denom =
      guarded_inverse(to_complex(a.m.c()) * om + to_complex(a.m.d()), "C*Omega+D");
  const CMat base = (to_complex(a.m.a()) * om + to_complex(a.m.b())) * denom;
  const CMat z =
      (p.z + to_complex(a.hs.lambda) * om + to_complex(a.hs.mu)) * denom;
  return SiegelJacobiPoint::make(symmetric_output(base, "act_jacobi", tol), z, tol);
}

DiskJacobiPoint act_jacobi_disk(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                const Tolerance& tol) {
  require_degree_match(a.g(), p.g(), "act_jacobi_disk");
  require_degree_match(a.h(), p.h(), "act_jacobi_disk (h)");
  const CMat& w = p.base.w();
  const CMat denom = guarded_inverse(a.gs.q.conjugate() * w + a.gs.p.conjugate(),
                                     "conj(Q)W+conj(P)");
  const CMat base = (a.gs.p * w + a.gs.q) * denom;
  const CMat eta = (p.eta + a.hc.xi * w + a.hc.eta) * denom;
  return DiskJacobiPoint::make(symmetric_output(base, "act_jacobi_disk", tol), eta, tol);
}

SiegelPoint cayley(const DiskPoint& p, const Tolerance& tol) {
  const auto g = p.degree();
  const CMat id = CMat::Identity(g, g);
  // (I+W) and (I−W)⁻¹ commute; a solve is more accurate than an inverse.
  const CMat out = kI * guarded_solve(id - p.w(), id + p.w(), "I-W");
  return SiegelPoint::make(symmetric_output(out, "cayley", tol), tol);
}

DiskPoint cayley_inv(const SiegelPoint& p, const Tolerance& tol) {
  const auto g = p.degree();
  const CMat id = CMat::Identity(g, g);
  const CMat out =
      (p.omega() - kI * id) * guarded_inverse(p.omega() + kI * id, "Omega+iI");
  return DiskPoint::make(symmetric_output(out, "cayley_inv", tol), tol);
}

SiegelJacobiPoint partial_cayley(const DiskJacobiPoint& p, const Tolerance& tol) {
  const auto g = p.g();
  const CMat id = CMat::Identity(g, g);
  const CMat inv = guarded_inverse(id - p.base.w(), "I-W");
  const CMat base = kI * (id + p.base.w()) * inv;
  return SiegelJacobiPoint::make(symmetric_output(base, "partial_cayley", tol),
                                 2.0 * kI * p.eta * inv, tol);
}

DiskJacobiPoint partial_cayley_inv(const SiegelJacobiPoint& p, const Tolerance& tol) {
  const auto g = p.g();
  const CMat id = CMat::Identity(g, g);
  const CMat& om = p.base.omega();
  const CMat inv = guarded_inverse(om + kI * id, "Omega+iI");
  return DiskJacobiPoint::make(symmetric_output((om - kI * id) * inv,
                                                "partial_cayley_inv", tol),
                               p.z * inv, tol);
}

double point_distance(const SiegelPoint& a, const SiegelPoint& b) {
  return rel_diff(a.omega(), b.omega());
}
double point_distance(const DiskPoint& a, const DiskPoint& b) {
  return rel_diff(a.w(), b.w());
}
double point_distance(const SiegelJacobiPoint& a, const SiegelJacobiPoint& b) {
  return std::max(point_distance(a.base, b.base), rel_diff(a.z, b.z));
}
double point_distance(const DiskJacobiPoint& a, const DiskJacobiPoint& b) {
  return std::max(point_distance(a.base, b.base), rel_diff(a.eta, b.eta));
}

double check_compatibility(const JacobiElement& a, const DiskJacobiPoint& p,
                           const Tolerance& tol) {
  const SiegelJacobiPoint lhs = act_jacobi(a, partial_cayley(p, tol), tol);
  const SiegelJacobiPoint rhs = partial_cayley(act_jacobi_disk(theta(a), p, tol), tol);
  return point_distance(lhs, rhs);
}

double check_compatibility_classical(const SymplecticMatrix& m, const DiskPoint& p,
                                     const Tolerance& tol) {
  const SiegelPoint lhs = act_siegel(m, cayley(p, tol), tol);
  const SiegelPoint rhs = cayley(act_disk(conjugate_by_T(m), p, tol), tol);
  return point_distance(lhs, rhs);
}

SiegelPoint sample_siegel(Rng& rng, int g, double scale) {
  if (g < 1) throw Error(ErrorKind::invalid_argument, "g must be >= 1");
  const RMat x = rng.real_symmetric(g, scale);
  const RMat r = rng.real_matrix(g, g, scale);
  const RMat y = r.transpose() * r + 0.1 * RMat::Identity(g, g);
  CMat om(g, g);
  om.real() = x;
  om.imag() = y;
  return SiegelPoint::make(om);
}

DiskPoint sample_disk(Rng& rng, int g) {
  if (g < 1) throw Error(ErrorKind::invalid_argument, "g must be >= 1");
  const CMat s = rng.complex_symmetric(g, 1.0);
  const double norm2 = Eigen::JacobiSVD<CMat>(s).singularValues()(0);
  return DiskPoint::make(0.9 * s / (1.0 + norm2));
}

SiegelJacobiPoint sample_siegel_jacobi(Rng& rng, int g, int h, double scale) {
  if (h < 1) throw Error(ErrorKind::invalid_argument, "h must be >= 1");
  SiegelPoint base = sample_siegel(rng, g, scale);
  return {std::move(base), rng.complex_matrix(h, g, scale)};
}

DiskJacobiPoint sample_disk_jacobi(Rng& rng, int g, int h, double scale) {
  if (h < 1) throw Error(ErrorKind::invalid_argument, "h must be >= 1");
  DiskPoint base = sample_disk(rng, g);
  return {std::move(base), rng.complex_matrix(h, g, scale)};
}

AnyPoint sample_point(PointKind kind, int g, int h, std::uint64_t seed, double scale) {
  if (!(scale > 0)) throw Error(ErrorKind::invalid_argument, "scale must be positive");
  Rng rng(seed);
  switch (kind) {
    case PointKind::siegel: return sample_siegel(rng, g, scale);
    case PointKind::disk: return sample_disk(rng, g);
    case PointKind::siegel_jacobi: return sample_siegel_jacobi(rng, g, h, scale);
    case PointKind::disk_jacobi: return sample_disk_jacobi(rng, g, h, scale);
  }
  throw Error(ErrorKind::invalid_argument, "unknown point kind");
}

}  // namespace sjk
