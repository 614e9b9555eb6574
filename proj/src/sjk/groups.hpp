#pragma once

// Group elements and laws: Sp(g,R), the real and complex Heisenberg groups,
// the Jacobi group G^J, its disk-model conjugate G_*^J, and the ambient
// SL(2g,C) ⋉ H_C^(g,h) in which the Harish-Chandra factorizations live.
//
// Row-vector convention throughout: a Heisenberg pair (λ,μ) is an h×2g block
// row, and the semidirect products act on it from the right.

#include "sjk/numkit.hpp"
#include "sjk/random.hpp"

#include <cstdint>
#include <variant>

namespace sjk {

/// J_n = [[0, I_n], [−I_n, 0]].
RMat symplectic_form(int n);

class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(int g);
  static SymplecticMatrix standard_j(int g);
  /// Validates ᵗM·J·M = J within tol.algebraic_rel.
  static SymplecticMatrix from_matrix(const RMat& m, const Tolerance& tol = {});
  static SymplecticMatrix from_blocks(const RMat& a, const RMat& b, const RMat& c,
                                      const RMat& d, const Tolerance& tol = {});

  int degree() const { return static_cast<int>(m_.rows() / 2); }
  const RMat& matrix() const { return m_; }
  RMat a() const { return m_.topLeftCorner(degree(), degree()); }
  RMat b() const { return m_.topRightCorner(degree(), degree()); }
  RMat c() const { return m_.bottomLeftCorner(degree(), degree()); }
  RMat d() const { return m_.bottomRightCorner(degree(), degree()); }

  /// ‖ᵗM J M − J‖ relative.
  double defect() const;
  /// M⁻¹ = −J·ᵗM·J, exact for symplectic M.
  SymplecticMatrix inverse() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& x,
                                    const SymplecticMatrix& y);

 private:
  explicit SymplecticMatrix(RMat m) : m_(std::move(m)) {}
  RMat m_;
};

/// (λ, μ; κ) with λ, μ real h×g, κ real h×h, κ + μᵗλ symmetric.
struct HeisenbergElement {
  RMat lambda;
  RMat mu;
  RMat kappa;

  static HeisenbergElement identity(int g, int h);
  int g() const { return static_cast<int>(lambda.cols()); }
  int h() const { return static_cast<int>(lambda.rows()); }
  double defect() const;
  void validate(const Tolerance& tol = {}) const;
};

struct JacobiElement {
  SymplecticMatrix m;
  HeisenbergElement hs;

  static JacobiElement identity(int g, int h);
  int g() const { return m.degree(); }
  int h() const { return hs.h(); }
};

/// Element of G_* = T⁻¹Sp(g,R)T stored as its top block row (P, Q); the
/// bottom row (Q̄, P̄) is implied.
struct GStarElement {
  CMat p;
  CMat q;

  static GStarElement identity(int g);
  int degree() const { return static_cast<int>(p.rows()); }
  CMat full() const;
  /// Max of the two block relations ᵗPP̄ − ᵗQ̄Q = I and ᵗPQ̄ = ᵗQ̄P.
  double defect() const;
  void validate(const Tolerance& tol = {}) const;
};

/// (ξ, η; ζ) with ξ, η complex h×g and ζ complex h×h, ζ + ηᵗξ symmetric.
struct ComplexHeisenbergElement {
  CMat xi;
  CMat eta;
  CMat zeta;

  static ComplexHeisenbergElement identity(int g, int h);
  int g() const { return static_cast<int>(xi.cols()); }
  int h() const { return static_cast<int>(xi.rows()); }
  double defect() const;
};

/// Element of G_*^J: a G_* block with Heisenberg part (ξ, ξ̄; iκ), κ real.
struct GStarJacobiElement {
  GStarElement gs;
  ComplexHeisenbergElement hc;

  static GStarJacobiElement identity(int g, int h);
  int g() const { return gs.degree(); }
  int h() const { return hc.h(); }
  /// Max of the G_* defect, the Heisenberg symmetry defect and the
  /// (ξ, ξ̄; iκ) shape defect.
  double defect() const;
  void validate(const Tolerance& tol = {}) const;
};

/// Element of SL(2g,C) ⋉ H_C^(g,h); only invertibility of the block is required.
struct BigComplexGroupElement {
  CMat block;
  ComplexHeisenbergElement hc;

  static BigComplexGroupElement identity(int g, int h);
  int g() const { return static_cast<int>(block.rows() / 2); }
  int h() const { return hc.h(); }
};

HeisenbergElement heisenberg_mul(const HeisenbergElement& a,
                                 const HeisenbergElement& b);
HeisenbergElement heisenberg_inv(const HeisenbergElement& a);

JacobiElement jacobi_mul(const JacobiElement& a, const JacobiElement& b);
JacobiElement jacobi_inv(const JacobiElement& a);

/// Max relative Frobenius gap over the components.
double heisenberg_distance(const HeisenbergElement& a, const HeisenbergElement& b);
double jacobi_distance(const JacobiElement& a, const JacobiElement& b);

BigComplexGroupElement big_mul(const BigComplexGroupElement& a,
                               const BigComplexGroupElement& b);
BigComplexGroupElement big_inv(const BigComplexGroupElement& a);
double big_distance(const BigComplexGroupElement& a,
                    const BigComplexGroupElement& b);

BigComplexGroupElement to_big(const GStarJacobiElement& a);
/// Reads a G_*^J element back out of the ambient group; throws consistency
/// when the block is not of the form (P,Q;Q̄,P̄) or the Heisenberg part is not
/// (ξ, ξ̄; iκ).
GStarJacobiElement from_big(const BigComplexGroupElement& a,
                            const Tolerance& tol = {});

GStarJacobiElement gstarj_mul(const GStarJacobiElement& a,
                              const GStarJacobiElement& b);
GStarJacobiElement gstarj_inv(const GStarJacobiElement& a);
double gstarj_distance(const GStarJacobiElement& a, const GStarJacobiElement& b);

/// T = (1/√2)[[I, I], [iI, −iI]] of size 2n.
CMat cayley_matrix(int n);

/// T⁻¹MT via P = ½{(A+D) + i(B−C)}, Q = ½{(A−D) − i(B+C)}.
GStarElement conjugate_by_T(const SymplecticMatrix& m);

/// Θ(M,(λ,μ;κ)) = (T⁻¹MT, (½(λ+iμ), ½(λ−iμ); −iκ/2)).
GStarJacobiElement theta(const JacobiElement& a);

/// The image of G^J in Sp(g+h,R), coordinates ordered (g, h, g, h).
RMat embed_sp_gph(const JacobiElement& a);

struct TStarBlocks {
  CMat p_star;
  CMat q_star;
  /// Relative gap between the numeric conjugation and the closed forms.
  double closed_form_residual = 0.0;
};

/// T_*⁻¹·embed(a)·T_* by explicit multiplication, cross-checked against the
/// closed-form P_*, Q_* blocks. Throws consistency when they disagree.
TStarBlocks tstar_conjugate_oracle(const JacobiElement& a,
                                   const Tolerance& tol = {});

// Seeded sampling. Symplectic samples are products of 4–8 generators
//   [[I,B],[0,I]], [[I,0],[C,I]]   B, C symmetric, entries in [−scale, scale]
//   [[A,0],[0,ᵗA⁻¹]]               A = I + E, entries of E in ±scale/(2g)
//   J_g
// so ‖E‖₂ < 1 and every factor is well conditioned.
SymplecticMatrix sample_symplectic(Rng& rng, int g, double scale);
HeisenbergElement sample_heisenberg(Rng& rng, int g, int h, double scale);
JacobiElement sample_jacobi(Rng& rng, int g, int h, double scale);
GStarElement sample_gstar(Rng& rng, int g, double scale);
/// Θ of a sampled Jacobi element.
GStarJacobiElement sample_gstarj(Rng& rng, int g, int h, double scale);
/// Isotropy element: P unitary, Q = 0, Heisenberg part (0, 0; iκ).
GStarJacobiElement sample_kstarj(Rng& rng, int g, int h, double scale);

enum class ElementKind { sp, heisenberg, jacobi, gstar, gstarj, kstarj };

using AnyElement = std::variant<SymplecticMatrix, HeisenbergElement,
                                JacobiElement, GStarElement, GStarJacobiElement>;

inline constexpr double kDefaultScale = 0.8;

AnyElement sample_element(ElementKind kind, int g, int h, std::uint64_t seed,
                          double scale = kDefaultScale);

}  // namespace sjk
