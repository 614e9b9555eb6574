#include "sjk/groups.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sjk {

namespace {

void require_degree(int g, const char* what) {
  if (g < 1) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be >= 1");
}

void require_same_gh(int g1, int h1, int g2, int h2, const char* op) {
  if (g1 != g2 || h1 != h2) {
    throw Error(ErrorKind::dimension,
                std::string(op) + ": operands have (g,h) = (" + std::to_string(g1) +
                    "," + std::to_string(h1) + ") and (" + std::to_string(g2) + "," +
                    std::to_string(h2) + ")");
  }
}

void require_real_shape(const RMat& m, Eigen::Index rows, Eigen::Index cols,
                        const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorKind::dimension, std::string(what) + " must be " +
                                          std::to_string(rows) + "x" +
                                          std::to_string(cols));
  }
}

double rel_residual(const RMat& a, const RMat& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

void check_output(double defect, const char* what) {
  if (validation_enabled() && !(defect <= Tolerance{}.algebraic_rel)) {
    throw Error(ErrorKind::consistency,
                std::string(what) + " violates its invariant (defect " +
                    std::to_string(defect) + ")");
  }
}

// Heisenberg-type central update shared by every semidirect law:
// ζ + ζ′ + ξ̃ ᵗη′ − η̃ ᵗξ′.
template <class M>
M central(const M& z1, const M& z2, const M& xt, const M& et, const M& x2,
          const M& e2) {
  return z1 + z2 + xt * e2.transpose() - et * x2.transpose();
}

}  // namespace

RMat symplectic_form(int n) {
  RMat j = RMat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = RMat::Identity(n, n);
  j.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
  return j;
}

// --- SymplecticMatrix ------------------------------------------------------

SymplecticMatrix SymplecticMatrix::identity(int g) {
  require_degree(g, "degree g");
  return SymplecticMatrix(RMat::Identity(2 * g, 2 * g));
}

SymplecticMatrix SymplecticMatrix::standard_j(int g) {
  require_degree(g, "degree g");
  return SymplecticMatrix(symplectic_form(g));
}

SymplecticMatrix SymplecticMatrix::from_matrix(const RMat& m, const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(ErrorKind::dimension, "symplectic matrix must be 2g x 2g");
  }
  if (!m.allFinite()) throw Error(ErrorKind::numeric, "symplectic matrix is not finite");
  SymplecticMatrix s(m);
  if (s.defect() > tol.algebraic_rel) {
    throw Error(ErrorKind::domain, "matrix is not symplectic (defect " +
                                       std::to_string(s.defect()) + ")");
  }
  return s;
}

SymplecticMatrix SymplecticMatrix::from_blocks(const RMat& a, const RMat& b,
                                               const RMat& c, const RMat& d,
                                               const Tolerance& tol) {
  const auto g = a.rows();
  require_real_shape(a, g, g, "A");
  require_real_shape(b, g, g, "B");
  require_real_shape(c, g, g, "C");
  require_real_shape(d, g, g, "D");
  RMat m(2 * g, 2 * g);
  m << a, b, c, d;
  return from_matrix(m, tol);
}

double SymplecticMatrix::defect() const {
  const RMat j = symplectic_form(degree());
  return rel_residual(m_.transpose() * j * m_, j);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const RMat j = symplectic_form(degree());
  return SymplecticMatrix(-j * m_.transpose() * j);
}

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  if (x.degree() != y.degree()) {
    throw Error(ErrorKind::dimension, "symplectic product: degree mismatch");
  }
  SymplecticMatrix out(x.m_ * y.m_);
  check_output(out.defect(), "symplectic product");
  return out;
}

// --- Heisenberg ------------------------------------------------------------

HeisenbergElement HeisenbergElement::identity(int g, int h) {
  require_degree(g, "g");
  require_degree(h, "h");
  return {RMat::Zero(h, g), RMat::Zero(h, g), RMat::Zero(h, h)};
}

double HeisenbergElement::defect() const {
  const RMat s = kappa + mu * lambda.transpose();
  return (s - s.transpose()).norm() / std::max(1.0, s.norm());
}

void HeisenbergElement::validate(const Tolerance& tol) const {
  const auto h = lambda.rows();
  const auto g = lambda.cols();
  if (h == 0 || g == 0) throw Error(ErrorKind::dimension, "empty Heisenberg element");
  require_real_shape(mu, h, g, "mu");
  require_real_shape(kappa, h, h, "kappa");
  if (!lambda.allFinite() || !mu.allFinite() || !kappa.allFinite()) {
    throw Error(ErrorKind::numeric, "Heisenberg element is not finite");
  }
  if (defect() > tol.algebraic_rel) {
    throw Error(ErrorKind::domain, "kappa + mu*t(lambda) is not symmetric");
  }
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& a,
                                 const HeisenbergElement& b) {
  require_same_gh(a.g(), a.h(), b.g(), b.h(), "heisenberg_mul");
  HeisenbergElement out{a.lambda + b.lambda, a.mu + b.mu,
                        central(a.kappa, b.kappa, a.lambda, a.mu, b.lambda, b.mu)};
  check_output(out.defect(), "Heisenberg product");
  return out;
}

HeisenbergElement heisenberg_inv(const HeisenbergElement& a) {
  const RMat l = -a.lambda;
  const RMat m = -a.mu;
  return {l, m, -a.kappa + l * m.transpose() - m * l.transpose()};
}

// --- Jacobi group ----------------------------------------------------------

JacobiElement JacobiElement::identity(int g, int h) {
  return {SymplecticMatrix::identity(g), HeisenbergElement::identity(g, h)};
}

JacobiElement jacobi_mul(const JacobiElement& a, const JacobiElement& b) {
  require_same_gh(a.g(), a.h(), b.g(), b.h(), "jacobi_mul");
  const int g = a.g();
  RMat row(a.h(), 2 * g);
  row << a.hs.lambda, a.hs.mu;
  const RMat moved = row * b.m.matrix();  // (λ̃, μ̃) = (λ, μ)M′
  const RMat lt = moved.leftCols(g);
  const RMat mt = moved.rightCols(g);
  JacobiElement out{a.m * b.m,
                    {lt + b.hs.lambda, mt + b.hs.mu,
                     central(a.hs.kappa, b.hs.kappa, lt, mt, b.hs.lambda, b.hs.mu)}};
  check_output(out.hs.defect(), "Jacobi product");
  return out;
}

JacobiElement jacobi_inv(const JacobiElement& a) {
  const SymplecticMatrix minv = a.m.inverse();
  const int g = a.g();
  RMat row(a.h(), 2 * g);
  row << a.hs.lambda, a.hs.mu;
  const RMat moved = -row * minv.matrix();
  const RMat l = moved.leftCols(g);
  const RMat m = moved.rightCols(g);
  return {minv, {l, m, -a.hs.kappa + l * m.transpose() - m * l.transpose()}};
}

// --- complex groups --------------------------------------------------------

ComplexHeisenbergElement ComplexHeisenbergElement::identity(int g, int h) {
  require_degree(g, "g");
  require_degree(h, "h");
  return {CMat::Zero(h, g), CMat::Zero(h, g), CMat::Zero(h, h)};
}

double ComplexHeisenbergElement::defect() const {
  return symmetry_defect(zeta + eta * xi.transpose());
}

GStarElement GStarElement::identity(int g) {
  require_degree(g, "g");
  return {CMat::Identity(g, g), CMat::Zero(g, g)};
}

CMat GStarElement::full() const {
  const auto g = p.rows();
  CMat m(2 * g, 2 * g);
  m << p, q, q.conjugate(), p.conjugate();
  return m;
}

double GStarElement::defect() const {
  const auto g = p.rows();
  const CMat id = CMat::Identity(g, g);
  const double d1 = rel_diff(p.transpose() * p.conjugate() -
                                 q.conjugate().transpose() * q, id);
  const double d2 = rel_diff(p.transpose() * q.conjugate(),
                             q.conjugate().transpose() * p);
  return std::max(d1, d2);
}

void GStarElement::validate(const Tolerance& tol) const {
  require_square(p, "P");
  require_shape(q, p.rows(), p.cols(), "Q");
  require_finite(p, "P");
  require_finite(q, "Q");
  if (defect() > tol.algebraic_rel) {
    throw Error(ErrorKind::domain, "(P,Q) does not satisfy the G_* block relations");
  }
}

GStarJacobiElement GStarJacobiElement::identity(int g, int h) {
  return {GStarElement::identity(g), ComplexHeisenbergElement::identity(g, h)};
}

double GStarJacobiElement::defect() const {
  const double shape = std::max(
      rel_diff(hc.eta, hc.xi.conjugate()),
      hc.zeta.real().norm() / std::max(1.0, hc.zeta.norm()));
  return std::max({gs.defect(), hc.defect(), shape});
}

void GStarJacobiElement::validate(const Tolerance& tol) const {
  gs.validate(tol);
  const auto g = gs.p.rows();
  const auto h = hc.xi.rows();
  if (h == 0) throw Error(ErrorKind::dimension, "empty Heisenberg part");
  require_shape(hc.xi, h, g, "xi");
  require_shape(hc.eta, h, g, "eta");
  require_shape(hc.zeta, h, h, "zeta");
  if (defect() > tol.algebraic_rel) {
    throw Error(ErrorKind::domain, "element is not of the form (G_*, (xi, conj xi; i kappa))");
  }
}

BigComplexGroupElement BigComplexGroupElement::identity(int g, int h) {
  return {CMat::Identity(2 * g, 2 * g), ComplexHeisenbergElement::identity(g, h)};
}

BigComplexGroupElement big_mul(const BigComplexGroupElement& a,
                               const BigComplexGroupElement& b) {
  require_same_gh(a.g(), a.h(), b.g(), b.h(), "big_mul");
  const auto g = a.g();
  CMat row(a.h(), 2 * g);
  row << a.hc.xi, a.hc.eta;
  const CMat moved = row * b.block;  // ξ̃ = ξP′+ηR′, η̃ = ξQ′+ηS′
  const CMat xt = moved.leftCols(g);
  const CMat et = moved.rightCols(g);
  return {a.block * b.block,
          {xt + b.hc.xi, et + b.hc.eta,
           central(a.hc.zeta, b.hc.zeta, xt, et, b.hc.xi, b.hc.eta)}};
}

BigComplexGroupElement big_inv(const BigComplexGroupElement& a) {
  const auto g = a.g();
  const CMat inv = guarded_inverse(a.block, "group block");
  CMat row(a.h(), 2 * g);
  row << a.hc.xi, a.hc.eta;
  const CMat moved = -row * inv;
  const CMat x = moved.leftCols(g);
  const CMat e = moved.rightCols(g);
  return {inv, {x, e, -a.hc.zeta + x * e.transpose() - e * x.transpose()}};
}

double heisenberg_distance(const HeisenbergElement& a, const HeisenbergElement& b) {
  return std::max({rel_diff(to_complex(a.lambda), to_complex(b.lambda)),
                   rel_diff(to_complex(a.mu), to_complex(b.mu)),
                   rel_diff(to_complex(a.kappa), to_complex(b.kappa))});
}

double jacobi_distance(const JacobiElement& a, const JacobiElement& b) {
  return std::max(rel_diff(to_complex(a.m.matrix()), to_complex(b.m.matrix())),
                  heisenberg_distance(a.hs, b.hs));
}

double big_distance(const BigComplexGroupElement& a, const BigComplexGroupElement& b) {
  return std::max({rel_diff(a.block, b.block), rel_diff(a.hc.xi, b.hc.xi),
                   rel_diff(a.hc.eta, b.hc.eta), rel_diff(a.hc.zeta, b.hc.zeta)});
}

BigComplexGroupElement to_big(const GStarJacobiElement& a) {
  return {a.gs.full(), a.hc};
}

GStarJacobiElement from_big(const BigComplexGroupElement& a, const Tolerance& tol) {
  const auto g = a.g();
  GStarJacobiElement out{{a.block.topLeftCorner(g, g), a.block.topRightCorner(g, g)},
                         a.hc};
  if (validation_enabled()) {
    const double lower = std::max(
        rel_diff(a.block.bottomLeftCorner(g, g), out.gs.q.conjugate()),
        rel_diff(a.block.bottomRightCorner(g, g), out.gs.p.conjugate()));
    const double d = std::max(lower, out.defect());
    if (!(d <= tol.algebraic_rel)) {
      throw Error(ErrorKind::consistency,
                  "product left G_*^J (defect " + std::to_string(d) + ")");
    }
  }
  return out;
}

GStarJacobiElement gstarj_mul(const GStarJacobiElement& a, const GStarJacobiElement& b) {
  return from_big(big_mul(to_big(a), to_big(b)));
}

GStarJacobiElement gstarj_inv(const GStarJacobiElement& a) {
  return from_big(big_inv(to_big(a)));
}

double gstarj_distance(const GStarJacobiElement& a, const GStarJacobiElement& b) {
  return big_distance(to_big(a), to_big(b));
}

// --- conjugations ----------------------------------------------------------

CMat cayley_matrix(int n) {
  require_degree(n, "size");
  const CMat id = CMat::Identity(n, n);
  CMat t(2 * n, 2 * n);
  t << id, id, kI * id, -kI * id;
  return t / std::sqrt(2.0);
}

GStarElement conjugate_by_T(const SymplecticMatrix& m) {
  const CMat a = to_complex(m.a());
  const CMat b = to_complex(m.b());
  const CMat c = to_complex(m.c());
  const CMat d = to_complex(m.d());
  GStarElement out{0.5 * ((a + d) + kI * (b - c)), 0.5 * ((a - d) - kI * (b + c))};
  check_output(out.defect(), "T-conjugate");
  return out;
}

GStarJacobiElement theta(const JacobiElement& a) {
  const CMat l = to_complex(a.hs.lambda);
  const CMat m = to_complex(a.hs.mu);
  return {conjugate_by_T(a.m),
          {0.5 * (l + kI * m), 0.5 * (l - kI * m), -0.5 * kI * to_complex(a.hs.kappa)}};
}

RMat embed_sp_gph(const JacobiElement& a) {
  const int g = a.g();
  const int h = a.h();
  const RMat A = a.m.a(), B = a.m.b(), C = a.m.c(), D = a.m.d();
  const RMat& l = a.hs.lambda;
  const RMat& mu = a.hs.mu;
  const RMat ih = RMat::Identity(h, h);
  RMat e = RMat::Zero(2 * (g + h), 2 * (g + h));
  // row blocks: (A 0 B Aᵗμ−Bᵗλ), (λ I μ κ), (C 0 D Cᵗμ−Dᵗλ), (0 0 0 I)
  e.block(0, 0, g, g) = A;
  e.block(0, g + h, g, g) = B;
  e.block(0, 2 * g + h, g, h) = A * mu.transpose() - B * l.transpose();
  e.block(g, 0, h, g) = l;
  e.block(g, g, h, h) = ih;
  e.block(g, g + h, h, g) = mu;
  e.block(g, 2 * g + h, h, h) = a.hs.kappa;
  e.block(g + h, 0, g, g) = C;
  e.block(g + h, g + h, g, g) = D;
  e.block(g + h, 2 * g + h, g, h) = C * mu.transpose() - D * l.transpose();
  e.block(2 * g + h, 2 * g + h, h, h) = ih;
  return e;
}

TStarBlocks tstar_conjugate_oracle(const JacobiElement& a, const Tolerance& tol) {
  const int g = a.g();
  const int h = a.h();
  const int n = g + h;
  const CMat ts = cayley_matrix(n);
  // T_* is unitary, so T_*⁻¹ = T_*ᴴ.
  const CMat conj = ts.adjoint() * to_complex(embed_sp_gph(a)) * ts;

  const GStarElement pq = conjugate_by_T(a.m);
  const CMat l = to_complex(a.hs.lambda);
  const CMat m = to_complex(a.hs.mu);
  const CMat k = to_complex(a.hs.kappa);
  const CMat plus = l + kI * m;
  const CMat minus = l - kI * m;
  CMat p_star(n, n), q_star(n, n);
  p_star << pq.p, 0.5 * (pq.q * plus.transpose() - pq.p * minus.transpose()),
      0.5 * plus, CMat::Identity(h, h) + 0.5 * kI * k;
  q_star << pq.q, 0.5 * (pq.p * minus.transpose() - pq.q * plus.transpose()),
      0.5 * minus, -0.5 * kI * k;

  TStarBlocks out{conj.topLeftCorner(n, n), conj.topRightCorner(n, n), 0.0};
  out.closed_form_residual =
      std::max({rel_diff(out.p_star, p_star), rel_diff(out.q_star, q_star),
                rel_diff(conj.bottomLeftCorner(n, n), q_star.conjugate()),
                rel_diff(conj.bottomRightCorner(n, n), p_star.conjugate())});
  if (!(out.closed_form_residual <= tol.algebraic_rel)) {
    throw Error(ErrorKind::consistency,
                "T_* conjugation disagrees with the closed-form blocks (residual " +
                    std::to_string(out.closed_form_residual) + ")");
  }
  return out;
}

// --- sampling --------------------------------------------------------------

SymplecticMatrix sample_symplectic(Rng& rng, int g, double scale) {
  require_degree(g, "g");
  if (!(scale > 0)) throw Error(ErrorKind::invalid_argument, "scale must be positive");
  const RMat id = RMat::Identity(g, g);
  const RMat zero = RMat::Zero(g, g);
  RMat m = RMat::Identity(2 * g, 2 * g);
  const int count = rng.uniform_int(4, 8);
  for (int i = 0; i < count; ++i) {
    RMat gen(2 * g, 2 * g);
    switch (rng.uniform_int(0, 3)) {
      case 0:
        gen << id, rng.real_symmetric(g, scale), zero, id;
        break;
      case 1:
        gen << id, zero, rng.real_symmetric(g, scale), id;
        break;
      case 2: {
        const RMat a = id + rng.real_matrix(g, g, scale / (2.0 * g));
        gen << a, zero, zero, a.inverse().transpose();
        break;
      }
      default:
        gen = symplectic_form(g);
        break;
    }
    m = m * gen;
  }
  return SymplecticMatrix::from_matrix(m);
}

HeisenbergElement sample_heisenberg(Rng& rng, int g, int h, double scale) {
  require_degree(g, "g");
  require_degree(h, "h");
  RMat l = rng.real_matrix(h, g, scale);
  RMat m = rng.real_matrix(h, g, scale);
  const RMat s = rng.real_symmetric(h, scale);
  // κ = S − μᵗλ + (μᵗλ + λᵗμ)/2, so κ + μᵗλ = S + sym(μᵗλ) is symmetric.
  RMat k = s - m * l.transpose() + 0.5 * (m * l.transpose() + l * m.transpose());
  return {std::move(l), std::move(m), std::move(k)};
}

JacobiElement sample_jacobi(Rng& rng, int g, int h, double scale) {
  SymplecticMatrix m = sample_symplectic(rng, g, scale);
  return {std::move(m), sample_heisenberg(rng, g, h, scale)};
}

GStarElement sample_gstar(Rng& rng, int g, double scale) {
  return conjugate_by_T(sample_symplectic(rng, g, scale));
}

GStarJacobiElement sample_gstarj(Rng& rng, int g, int h, double scale) {
  return theta(sample_jacobi(rng, g, h, scale));
}

GStarJacobiElement sample_kstarj(Rng& rng, int g, int h, double scale) {
  require_degree(g, "g");
  require_degree(h, "h");
  const CMat z = rng.complex_matrix(g, g, 1.0) + CMat::Identity(g, g);
  const CMat u = z.householderQr().householderQ() * CMat::Identity(g, g);
  return {{u, CMat::Zero(g, g)},
          {CMat::Zero(h, g), CMat::Zero(h, g), kI * to_complex(rng.real_symmetric(h, scale))}};
}

AnyElement sample_element(ElementKind kind, int g, int h, std::uint64_t seed,
                          double scale) {
  Rng rng(seed);
  switch (kind) {
    case ElementKind::sp: return sample_symplectic(rng, g, scale);
    case ElementKind::heisenberg: return sample_heisenberg(rng, g, h, scale);
    case ElementKind::jacobi: return sample_jacobi(rng, g, h, scale);
    case ElementKind::gstar: return sample_gstar(rng, g, scale);
    case ElementKind::gstarj: return sample_gstarj(rng, g, h, scale);
    case ElementKind::kstarj: return sample_kstarj(rng, g, h, scale);
  }
  throw Error(ErrorKind::invalid_argument, "unknown element kind");
}

}  // namespace sjk
