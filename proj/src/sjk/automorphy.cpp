#include "sjk/automorphy.hpp"

#include <cmath>
#include <numbers>

namespace sjk {

namespace {

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

}  // namespace

void IndexMatrix::validate(const Tolerance& tol) const {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension, "index matrix must be square");
  if (!m.allFinite()) throw Error(ErrorKind::invalid_argument, "index matrix is not finite");
  if (symmetry_defect(to_complex(m)) > tol.algebraic_rel) {
    throw Error(ErrorKind::domain, "index matrix is not symmetric");
  }
  if (half_integral) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const bool ok = i == j ? near_integer(m(i, j), tol.algebraic_rel)
                               : near_integer(2.0 * m(i, j), tol.algebraic_rel);
        if (!ok) throw Error(ErrorKind::domain, "index matrix is not half-integral");
      }
  }
  if (psd && m.rows() > 0) {
    Eigen::SelfAdjointEigenSolver<RMat> es(m);
    if (es.eigenvalues().minCoeff() < -tol.pd_min_eig) {
      throw Error(ErrorKind::domain, "index matrix is not positive semi-definite");
    }
  }
}

Representation Representation::parse(const std::string& text) {
  if (text == "std" || text == "standard") return standard();
  if (text.rfind("det:", 0) == 0) {
    const std::string rest = text.substr(4);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (!rest.empty() && used == rest.size()) return det_power(k);
  }
  throw Error(ErrorKind::invalid_argument,
              "representation must be 'det:k' or 'std', got '" + text + "'");
}

std::string Representation::to_string() const {
  return kind == Kind::standard ? "std" : "det:" + std::to_string(k);
}

cplx chi_character(const IndexMatrix& idx, const CMat& c) {
  require_shape(c, idx.h(), idx.h(), "character argument");
  require_finite(c, "character argument");
  const cplx s = (to_complex(idx.m) * c).trace();
  // exp(−2πi s) has modulus exp(2π Im s).
  const double exponent = 2.0 * std::numbers::pi * s.imag();
  if (std::abs(exponent) > 700.0) {
    throw Error(ErrorKind::range, "character exponent out of range (" +
                                      std::to_string(exponent) + ")");
  }
  return std::exp(-2.0 * std::numbers::pi * kI * s);
}

CMat rho_eval(const Representation& rep, const CMat& p) {
  require_square(p, "representation argument");
  require_finite(p, "representation argument");
  if (p.rows() > 0 && !(condition_number(p) <= kConditionLimit)) {
    throw Error(ErrorKind::domain, "representation argument is singular");
  }
  if (rep.kind == Representation::Kind::standard) return p;
  CMat out(1, 1);
  out(0, 0) = std::pow(p.determinant(), rep.k);
  return out;
}

CMat summand_a(const GStarJacobiElement& a, const DiskJacobiPoint& p,
               const Tolerance& tol) {
  return kc_component(a, p, tol).kappa_star;
}

KBlocks factor_b(const GStarElement& gs, const DiskPoint& w) {
  if (gs.degree() != w.degree()) throw Error(ErrorKind::dimension, "degree mismatch");
  const CMat qbar = gs.q.conjugate();
  const CMat lower = qbar * w.w() + gs.p.conjugate();
  const CMat upper =
      gs.p - (gs.p * w.w() + gs.q) * guarded_inverse(lower, "conj(Q)W+conj(P)") * qbar;
  return {upper, lower};
}

KBlocks factor_b(const GStarJacobiElement& a, const DiskJacobiPoint& p) {
  return factor_b(a.gs, p.base);
}

CMat j_factor(const IndexMatrix& idx, const Representation& rep,
              const GStarJacobiElement& a, const DiskJacobiPoint& p,
              const Tolerance& tol) {
  if (a.g() != p.g() || a.h() != p.h() || idx.h() != a.h()) {
    throw Error(ErrorKind::dimension, "automorphic factor arguments have mismatched sizes");
  }
  return chi_character(idx, summand_a(a, p, tol)) * rho_eval(rep, factor_b(a, p).lower);
}

CocycleResiduals cocycle_residuals(const IndexMatrix& idx, const Representation& rep,
                                   const GStarJacobiElement& g1,
                                   const GStarJacobiElement& g2, const DiskJacobiPoint& p,
                                   const Tolerance& tol) {
  const GStarJacobiElement g12 = gstarj_mul(g1, g2);
  const DiskJacobiPoint moved = act_jacobi_disk(g2, p, tol);
  CocycleResiduals r;
  r.additive = rel_diff(summand_a(g12, p, tol),
                        summand_a(g1, moved, tol) + summand_a(g2, p, tol));
  r.multiplicative = rel_diff(j_factor(idx, rep, g12, p, tol),
                              j_factor(idx, rep, g1, moved, tol) *
                                  j_factor(idx, rep, g2, p, tol));
  return r;
}

double verify_cocycle(const IndexMatrix& idx, const Representation& rep,
                      const GStarJacobiElement& g1, const GStarJacobiElement& g2,
                      const DiskJacobiPoint& p, const Tolerance& tol) {
  return cocycle_residuals(idx, rep, g1, g2, p, tol).max();
}

IndexMatrix half_integral_example(int h) {
  RMat m = RMat::Constant(h, h, 0.5);
  m.diagonal().setConstant(2.0);
  return {m, true, true};
}

}  // namespace sjk
