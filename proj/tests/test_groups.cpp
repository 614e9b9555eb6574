#include "support.hpp"

#include "sjk/groups.hpp"

#include <cmath>

using namespace sjk;
using sjk::test::cm;
using sjk::test::raises;
using sjk::test::rm;
using sjk::test::rscalar;

namespace {

// Independent oracles written straight from the group laws.

HeisenbergElement law_heisenberg(const HeisenbergElement& a, const HeisenbergElement& b) {
  return {a.lambda + b.lambda, a.mu + b.mu,
          a.kappa + b.kappa + a.lambda * b.mu.transpose() - a.mu * b.lambda.transpose()};
}

JacobiElement law_jacobi(const JacobiElement& a, const JacobiElement& b) {
  const int g = a.g();
  const int h = a.h();
  RMat row(h, 2 * g);
  row << a.hs.lambda, a.hs.mu;
  const RMat t = row * b.m.matrix();
  const RMat lt = t.leftCols(g), mt = t.rightCols(g);
  HeisenbergElement hs{lt + b.hs.lambda, mt + b.hs.mu,
                       a.hs.kappa + b.hs.kappa + lt * b.hs.mu.transpose() -
                           mt * b.hs.lambda.transpose()};
  return {a.m * b.m, hs};
}

CMat hand_t(int n) {
  const CMat id = CMat::Identity(n, n);
  CMat t(2 * n, 2 * n);
  t << id, id, kI * id, -kI * id;
  return t / std::sqrt(2.0);
}

JacobiElement random_jacobi(std::uint64_t seed, int g, int h) {
  Rng rng(seed);
  return sample_jacobi(rng, g, h, kDefaultScale);
}

}  // namespace

TEST_CASE("Heisenberg law") {
  Rng rng(1);
  const HeisenbergElement a = sample_heisenberg(rng, 2, 2, 0.8);
  const HeisenbergElement e = HeisenbergElement::identity(2, 2);
  CHECK(heisenberg_distance(heisenberg_mul(a, e), a) < 1e-15);

  const HeisenbergElement x{rscalar(1), rscalar(0), rscalar(0)};
  const HeisenbergElement y{rscalar(0), rscalar(1), rscalar(0)};
  const HeisenbergElement xy = heisenberg_mul(x, y);
  CHECK(xy.lambda(0, 0) == 1.0);
  CHECK(xy.mu(0, 0) == 1.0);
  CHECK(xy.kappa(0, 0) == 1.0);

  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng r(100 + s);
    const HeisenbergElement p = sample_heisenberg(r, 2, 3, 0.8);
    const HeisenbergElement q = sample_heisenberg(r, 2, 3, 0.8);
    const HeisenbergElement pq = heisenberg_mul(p, q);
    CHECK(heisenberg_distance(pq, law_heisenberg(p, q)) < 1e-14);
    CHECK(pq.defect() < 1e-12);
    CHECK(heisenberg_distance(heisenberg_mul(p, heisenberg_inv(p)),
                              HeisenbergElement::identity(2, 3)) < 1e-13);
  }
}

TEST_CASE("Heisenberg symmetry invariant is enforced") {
  HeisenbergElement bad{RMat::Zero(2, 1), RMat::Zero(2, 1), rm({{0, 1}, {0, 0}})};
  CHECK(raises(ErrorKind::domain, [&] { bad.validate(); }));
  Rng rng(2);
  CHECK_NOTHROW(sample_heisenberg(rng, 3, 2, 0.8).validate());
}

TEST_CASE("symplectic matrices") {
  CHECK(raises(ErrorKind::domain, [] { SymplecticMatrix::from_matrix(2.0 * RMat::Identity(2, 2)); }));
  const SymplecticMatrix j = SymplecticMatrix::standard_j(1);
  CHECK(j.matrix().isApprox(rm({{0, 1}, {-1, 0}})));
  const auto sp = std::get<SymplecticMatrix>(sample_element(ElementKind::sp, 2, 1, 7));
  CHECK(sp.defect() < 1e-9);
  CHECK((sp * sp.inverse()).matrix().isApprox(RMat::Identity(4, 4), 1e-12));
}

TEST_CASE("Jacobi law against the written-out law and the embedding") {
  const JacobiElement e = JacobiElement::identity(2, 1);
  const JacobiElement a = random_jacobi(3, 2, 1);
  CHECK(jacobi_distance(jacobi_mul(a, e), a) < 1e-15);
  CHECK(jacobi_distance(jacobi_mul(e, a), a) < 1e-15);

  // With M' = I the law reduces to the Heisenberg law.
  Rng rng(4);
  const JacobiElement x{SymplecticMatrix::identity(2), sample_heisenberg(rng, 2, 2, 0.8)};
  const JacobiElement y{SymplecticMatrix::identity(2), sample_heisenberg(rng, 2, 2, 0.8)};
  CHECK(heisenberg_distance(jacobi_mul(x, y).hs, heisenberg_mul(x.hs, y.hs)) < 1e-15);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const JacobiElement p = random_jacobi(200 + s, 2, 1);
    const JacobiElement q = random_jacobi(300 + s, 2, 1);
    const JacobiElement pq = jacobi_mul(p, q);
    CHECK(jacobi_distance(pq, law_jacobi(p, q)) < 1e-12);
    // 6×6 real matrix multiplication oracle.
    const RMat prod = embed_sp_gph(p) * embed_sp_gph(q);
    CHECK((embed_sp_gph(pq) - prod).norm() / prod.norm() < 1e-12);
  }
}

TEST_CASE("Jacobi inverse") {
  const JacobiElement e = JacobiElement::identity(1, 1);
  CHECK(jacobi_distance(jacobi_inv(e), e) == 0.0);
  const JacobiElement pure{SymplecticMatrix::identity(1),
                           {rscalar(0.3), rscalar(-0.7), rscalar(1.1)}};
  const JacobiElement inv = jacobi_inv(pure);
  CHECK(inv.hs.lambda(0, 0) == doctest::Approx(-0.3));
  CHECK(inv.hs.mu(0, 0) == doctest::Approx(0.7));
  CHECK(inv.hs.kappa(0, 0) == doctest::Approx(-1.1));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const JacobiElement a = random_jacobi(400 + s, 1, 1);
    CHECK(jacobi_distance(jacobi_mul(a, jacobi_inv(a)), e) < 1e-12);
    const JacobiElement b = random_jacobi(500 + s, 2, 3);
    CHECK(jacobi_distance(jacobi_mul(jacobi_inv(b), b), JacobiElement::identity(2, 3)) <
          1e-11);
  }
}

TEST_CASE("conjugation by T") {
  const GStarElement id = conjugate_by_T(SymplecticMatrix::identity(2));
  CHECK(id.p.isApprox(CMat::Identity(2, 2)));
  CHECK(id.q.isZero());

  const GStarElement j = conjugate_by_T(SymplecticMatrix::standard_j(1));
  const CMat oracle = hand_t(1).inverse() * to_complex(rm({{0, 1}, {-1, 0}})) * hand_t(1);
  CHECK(std::abs(oracle(0, 0) - kI) < 1e-15);
  CHECK(std::abs(j.p(0, 0) - kI) < 1e-15);
  CHECK(std::abs(j.q(0, 0)) < 1e-15);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto m = std::get<SymplecticMatrix>(sample_element(ElementKind::sp, 2, 1, 600 + s));
    const CMat full = hand_t(2).inverse() * to_complex(m.matrix()) * hand_t(2);
    const GStarElement gs = conjugate_by_T(m);
    CHECK(rel_diff(gs.full(), full) < 1e-13);
    CHECK(gs.defect() < 1e-12);
  }
  CHECK(rel_diff(cayley_matrix(3), hand_t(3)) < 1e-15);
}

TEST_CASE("theta") {
  CHECK(gstarj_distance(theta(JacobiElement::identity(2, 2)),
                        GStarJacobiElement::identity(2, 2)) == 0.0);
  Rng rng(7);
  const HeisenbergElement hs = sample_heisenberg(rng, 2, 1, 0.8);
  const GStarJacobiElement t = theta({SymplecticMatrix::identity(2), hs});
  CHECK(t.gs.p.isApprox(CMat::Identity(2, 2)));
  CHECK(t.gs.q.isZero());
  const CMat l = to_complex(hs.lambda), m = to_complex(hs.mu), k = to_complex(hs.kappa);
  CHECK(sjk::test::max_abs(t.hc.xi, 0.5 * (l + kI * m)) < 1e-15);
  CHECK(sjk::test::max_abs(t.hc.eta, 0.5 * (l - kI * m)) < 1e-15);
  CHECK(sjk::test::max_abs(t.hc.zeta, -0.5 * kI * k) < 1e-15);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const JacobiElement a = random_jacobi(700 + s, 2, 2);
    const JacobiElement b = random_jacobi(800 + s, 2, 2);
    CHECK(gstarj_distance(theta(jacobi_mul(a, b)), gstarj_mul(theta(a), theta(b))) < 1e-12);
    CHECK(theta(a).defect() < 1e-12);
  }
}

TEST_CASE("embedding into Sp(g+h)") {
  CHECK(embed_sp_gph(JacobiElement::identity(2, 1)).isIdentity());
  const RMat jf = symplectic_form(3);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const RMat e = embed_sp_gph(random_jacobi(900 + s, 2, 1));
    CHECK((e.transpose() * jf * e - jf).norm() < 1e-12);
  }
}

TEST_CASE("T_* conjugation against closed-form blocks") {
  const TStarBlocks id = tstar_conjugate_oracle(JacobiElement::identity(1, 2));
  CHECK(id.p_star.isApprox(CMat::Identity(3, 3)));
  CHECK(id.q_star.norm() < 1e-15);

  const double lam = 0.4, mu = -0.9, kap = 0.25;
  const TStarBlocks pure =
      tstar_conjugate_oracle({SymplecticMatrix::identity(1), {rscalar(lam), rscalar(mu), rscalar(kap)}});
  // P = I, Q = 0 substituted into the closed forms.
  const CMat expect = cm({{1, -0.5 * cplx(lam, -mu)}, {0.5 * cplx(lam, mu), 1.0 + 0.5 * kI * kap}});
  CHECK(sjk::test::max_abs(pure.p_star, expect) < 1e-15);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const TStarBlocks b = tstar_conjugate_oracle(random_jacobi(1000 + s, 1, 2));
    CHECK(b.closed_form_residual < 1e-12);
  }
}

TEST_CASE("complex ambient group") {
  Rng rng(11);
  const BigComplexGroupElement x = to_big(sample_gstarj(rng, 1, 1, 0.8));
  const BigComplexGroupElement y = to_big(sample_gstarj(rng, 1, 1, 0.8));
  const BigComplexGroupElement z = to_big(sample_gstarj(rng, 1, 1, 0.8));
  const BigComplexGroupElement e = BigComplexGroupElement::identity(1, 1);
  CHECK(big_distance(big_mul(x, e), x) == 0.0);
  CHECK(big_distance(big_mul(big_mul(x, y), z), big_mul(x, big_mul(y, z))) < 1e-13);
  CHECK(big_distance(big_mul(x, big_inv(x)), e) < 1e-13);

  BigComplexGroupElement c1 = e, c2 = e;
  c1.hc.zeta = cm({{{0.5, 1}}});
  c2.hc.zeta = cm({{{-2, 0.25}}});
  c2.hc.xi = cm({{{0.3, 0.1}}});
  const BigComplexGroupElement c = big_mul(c1, c2);
  CHECK(std::abs(c.hc.zeta(0, 0) - cplx(-1.5, 1.25)) < 1e-15);
}

TEST_CASE("G_*^J law") {
  Rng rng(12);
  const GStarJacobiElement a = sample_gstarj(rng, 2, 1, 0.8);
  CHECK(gstarj_distance(gstarj_mul(a, GStarJacobiElement::identity(2, 1)), a) < 1e-15);
  CHECK(gstarj_distance(gstarj_mul(a, gstarj_inv(a)), GStarJacobiElement::identity(2, 1)) <
        1e-12);

  for (int s = 0; s < 20; ++s) {
    const GStarJacobiElement k1 = sample_kstarj(rng, 2, 2, 0.8);
    const GStarJacobiElement k2 = sample_kstarj(rng, 2, 2, 0.8);
    const GStarJacobiElement k = gstarj_mul(k1, k2);
    CHECK((k.gs.p.adjoint() * k.gs.p - CMat::Identity(2, 2)).norm() < 1e-13);
    CHECK(k.gs.q.norm() < 1e-15);
    CHECK(k.hc.xi.norm() < 1e-15);
  }

  // A block outside G_* is caught when the product is read back.
  GStarJacobiElement bad = GStarJacobiElement::identity(1, 1);
  bad.gs.p = cm({{2}});
  const bool saved = validation_enabled();
  set_validation_enabled(true);
  CHECK(raises(ErrorKind::consistency, [&] { gstarj_mul(bad, bad); }));
  set_validation_enabled(saved);
  CHECK(raises(ErrorKind::dimension, [&] {
    gstarj_mul(GStarJacobiElement::identity(1, 1), GStarJacobiElement::identity(2, 1));
  }));
}

TEST_CASE("samplers") {
  const auto h = std::get<HeisenbergElement>(sample_element(ElementKind::heisenberg, 2, 2, 5));
  CHECK(h.defect() < 1e-12);
  for (auto kind : {ElementKind::sp, ElementKind::heisenberg, ElementKind::jacobi,
                    ElementKind::gstar, ElementKind::gstarj, ElementKind::kstarj}) {
    const AnyElement x = sample_element(kind, 2, 2, 99);
    const AnyElement y = sample_element(kind, 2, 2, 99);
    CHECK(x.index() == y.index());
    std::visit(
        [&](const auto& u) {
          using T = std::decay_t<decltype(u)>;
          const T& v = std::get<T>(y);
          if constexpr (std::is_same_v<T, SymplecticMatrix>) CHECK(u.matrix() == v.matrix());
          if constexpr (std::is_same_v<T, HeisenbergElement>) CHECK(u.kappa == v.kappa);
          if constexpr (std::is_same_v<T, JacobiElement>) CHECK(u.m.matrix() == v.m.matrix());
          if constexpr (std::is_same_v<T, GStarElement>) CHECK(u.p == v.p);
          if constexpr (std::is_same_v<T, GStarJacobiElement>) CHECK(u.hc.xi == v.hc.xi);
        },
        x);
  }
  CHECK(raises(ErrorKind::invalid_argument, [] { sample_element(ElementKind::sp, 0, 1, 1); }));
  CHECK(raises(ErrorKind::invalid_argument,
               [] { sample_element(ElementKind::sp, 1, 1, 1, -1.0); }));
}
