#include "sjk/decomp.hpp"

#include <string>

namespace sjk {

namespace {

CMat block2(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  CMat m(a.rows() + c.rows(), a.cols() + b.cols());
  m << a, b, c, d;
  return m;
}

// Shared pieces of the three components: D = Q̄W+P̄, D⁻¹ and N = η′+ξW+η.
struct Translate {
  CMat denom;
  CMat denom_inv;
  CMat shifted;
};

Translate translate(const GStarJacobiElement& a, const DiskJacobiPoint& p) {
  if (a.g() != p.g() || a.h() != p.h()) {
    throw Error(ErrorKind::dimension, "element and point have different (g,h)");
  }
  const CMat& w = p.base.w();
  CMat denom = a.gs.q.conjugate() * w + a.gs.p.conjugate();
  CMat inv = guarded_inverse(denom, "conj(Q)W+conj(P)");
  return {std::move(denom), std::move(inv), p.eta + a.hc.xi * w + a.hc.eta};
}

}  // namespace

CMat HCFactors::reconstruct() const {
  const auto g = k_p.rows();
  const CMat id = CMat::Identity(g, g);
  const CMat zero = CMat::Zero(g, g);
  return block2(id, pplus_w, zero, id) * block2(k_p, zero, zero, k_lower) *
         block2(id, zero, pminus_w, id);
}

HCFactors hc_decompose_gstar(const GStarElement& gs, const Tolerance& tol) {
  const CMat pbar = gs.p.conjugate();
  const CMat pbar_inv = guarded_inverse(pbar, "conj(P)");
  HCFactors f{gs.q * pbar_inv, gs.p - gs.q * pbar_inv * gs.q.conjugate(), pbar,
              pbar_inv * gs.q.conjugate()};
  // QP̄⁻¹ must be a point of D_g; make() enforces symmetry and I − WW̄ > 0.
  DiskPoint::make(f.pplus_w, tol);
  if (validation_enabled() && symmetry_defect(f.pminus_w) > tol.algebraic_rel) {
    throw Error(ErrorKind::consistency, "P-minus coordinate is not symmetric");
  }
  return f;
}

BigComplexGroupElement embed_disk_point(const DiskJacobiPoint& p) {
  const auto g = p.g();
  const auto h = p.h();
  const CMat id = CMat::Identity(g, g);
  return {block2(id, p.base.w(), CMat::Zero(g, g), id),
          {CMat::Zero(h, g), p.eta, CMat::Zero(h, h)}};
}

DiskJacobiPoint pplus_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                const Tolerance& tol) {
  // Upper-right block and η-part of a·embed(p), right-multiplied by the
  // inverse of the lower-right block.
  const BigComplexGroupElement prod = big_mul(to_big(a), embed_disk_point(p));
  const auto g = a.g();
  const CMat s_inv = guarded_inverse(prod.block.bottomRightCorner(g, g), "S block");
  const CMat w = prod.block.topRightCorner(g, g) * s_inv;
  const double defect = symmetry_defect(w);
  if (validation_enabled() && defect > tol.algebraic_rel) {
    throw Error(ErrorKind::consistency, "P-plus coordinate is not symmetric");
  }
  return DiskJacobiPoint::make(symmetrize(w), prod.hc.eta * s_inv, tol);
}

KComponent kc_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                        const Tolerance& tol) {
  const Translate t = translate(a, p);
  const CMat qbar = a.gs.q.conjugate();
  const CMat& lam = a.hc.xi;
  const CMat base = a.hc.zeta + lam * p.eta.transpose() + t.shifted * lam.transpose();
  const CMat first =
      base - t.shifted * qbar.transpose() * t.denom_inv.transpose() * t.shifted.transpose();
  const CMat second = base - t.shifted * t.denom_inv * qbar * t.shifted.transpose();

  KComponent k{a.gs.p - (a.gs.p * p.base.w() + a.gs.q) * t.denom_inv * qbar, t.denom,
               second, rel_diff(first, second)};
  if (!(k.kappa_agreement <= tol.algebraic_rel)) {
    throw Error(ErrorKind::consistency, "the two kappa_* expressions disagree (" +
                                            std::to_string(k.kappa_agreement) + ")");
  }
  return k;
}

PMinusComponent pminus_component(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                 const Tolerance& tol) {
  const Translate t = translate(a, p);
  const CMat w = t.denom_inv * a.gs.q.conjugate();
  PMinusComponent out{w, a.hc.xi - t.shifted * w, symmetry_defect(w)};
  if (!(out.symmetry_defect <= tol.algebraic_rel)) {
    throw Error(ErrorKind::consistency, "(conj(Q)W+conj(P))^-1 conj(Q) is not symmetric");
  }
  return out;
}

BigComplexGroupElement JacobiHCFactors::pplus_factor() const {
  return embed_disk_point(pplus);
}

BigComplexGroupElement JacobiHCFactors::k_factor() const {
  const auto g = k.k_p.rows();
  const auto h = k.kappa_star.rows();
  const CMat zero = CMat::Zero(g, g);
  return {block2(k.k_p, zero, zero, k.k_lower),
          {CMat::Zero(h, g), CMat::Zero(h, g), k.kappa_star}};
}

BigComplexGroupElement JacobiHCFactors::pminus_factor() const {
  const auto g = pminus.w.rows();
  const auto h = pminus.xi.rows();
  const CMat id = CMat::Identity(g, g);
  return {block2(id, CMat::Zero(g, g), pminus.w, id),
          {pminus.xi, CMat::Zero(h, g), CMat::Zero(h, h)}};
}

BigComplexGroupElement JacobiHCFactors::reconstruct() const {
  return big_mul(big_mul(pplus_factor(), k_factor()), pminus_factor());
}

FullDecomposition decompose_full(const GStarJacobiElement& a, const DiskJacobiPoint& p,
                                 const Tolerance& tol) {
  FullDecomposition out{{pplus_component(a, p, tol), kc_component(a, p, tol),
                         pminus_component(a, p, tol)},
                        0.0};
  const BigComplexGroupElement target = big_mul(to_big(a), embed_disk_point(p));
  out.reconstruction_residual = big_distance(out.factors.reconstruct(), target);
  if (!(out.reconstruction_residual <= tol.algebraic_rel)) {
    throw Error(ErrorKind::consistency,
                "P+ K P- product does not reproduce the element (residual " +
                    std::to_string(out.reconstruction_residual) + ")");
  }
  return out;
}

}  // namespace sjk
