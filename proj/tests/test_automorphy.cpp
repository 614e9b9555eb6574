#include "support.hpp"

#include "sjk/automorphy.hpp"

#include <cmath>
#include <numbers>

using namespace sjk;
using sjk::test::cm;
using sjk::test::max_abs;
using sjk::test::raises;
using sjk::test::rm;
using sjk::test::scalar;

namespace {

IndexMatrix index_of(const RMat& m) { return {m, false, false}; }

struct Triple {
  GStarJacobiElement g1, g2;
  DiskJacobiPoint p;
};

Triple random_triple(std::uint64_t seed, int g, int h) {
  Rng rng(seed);
  GStarJacobiElement a = sample_gstarj(rng, g, h, 0.8);
  GStarJacobiElement b = sample_gstarj(rng, g, h, 0.8);
  return {a, b, sample_disk_jacobi(rng, g, h, 0.8)};
}

}  // namespace

TEST_CASE("index matrix validation") {
  CHECK_NOTHROW(half_integral_example(3).validate());
  CHECK(half_integral_example(2).m.isApprox(rm({{2, 0.5}, {0.5, 2}})));
  IndexMatrix bad{rm({{1, 0.3}, {0.3, 1}}), true, false};
  CHECK(raises(ErrorKind::domain, [&] { bad.validate(); }));
  IndexMatrix neg{rm({{-1}}), false, true};
  CHECK(raises(ErrorKind::domain, [&] { neg.validate(); }));
  IndexMatrix asym{rm({{1, 2}, {0, 1}}), false, false};
  CHECK(raises(ErrorKind::domain, [&] { asym.validate(); }));
}

TEST_CASE("representation parsing") {
  CHECK(Representation::parse("det:2").k == 2);
  CHECK(Representation::parse("std").kind == Representation::Kind::standard);
  CHECK(Representation::parse("det:-1").to_string() == "det:-1");
  CHECK(raises(ErrorKind::invalid_argument, [] { Representation::parse("sym:2"); }));
  CHECK(Representation::standard().dimension(3) == 3);
}

TEST_CASE("character") {
  const IndexMatrix one = index_of(rm({{1}}));
  CHECK(std::abs(chi_character(one, scalar(0)) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(chi_character(one, scalar(0.5)) - cplx(-1, 0)) < 1e-15);
  const cplx big = chi_character(one, scalar(kI));
  CHECK(big.real() == doctest::Approx(std::exp(2 * std::numbers::pi)).epsilon(1e-14));
  CHECK(big.real() == doctest::Approx(535.4917).epsilon(1e-7));
  CHECK(std::abs(big.imag()) < 1e-10);
  CHECK(raises(ErrorKind::range, [&] { chi_character(one, scalar(200.0 * kI)); }));

  Rng rng(41);
  const IndexMatrix m = half_integral_example(2);
  for (int s = 0; s < 50; ++s) {
    const CMat c1 = rng.complex_matrix(2, 2, 0.3), c2 = rng.complex_matrix(2, 2, 0.3);
    const cplx lhs = chi_character(m, c1 + c2);
    CHECK(std::abs(lhs - chi_character(m, c1) * chi_character(m, c2)) <
          1e-12 * std::abs(lhs));
  }
}

TEST_CASE("representations") {
  Rng rng(42);
  const CMat p = rng.complex_matrix(2, 2, 1.0) + 2.0 * CMat::Identity(2, 2);
  CHECK(std::abs(rho_eval(Representation::det_power(0), p)(0, 0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(rho_eval(Representation::det_power(2), 2.0 * CMat::Identity(2, 2))(0, 0) -
                 cplx(16, 0)) < 1e-13);
  CHECK(max_abs(rho_eval(Representation::standard(), p), p) == 0.0);
  CHECK(raises(ErrorKind::domain,
               [] { rho_eval(Representation::det_power(1), CMat::Zero(2, 2)); }));

  for (int s = 0; s < 20; ++s) {
    const CMat a = rng.complex_matrix(2, 2, 1.0) + CMat::Identity(2, 2);
    const CMat b = rng.complex_matrix(2, 2, 1.0) + CMat::Identity(2, 2);
    for (const Representation& r : {Representation::det_power(3), Representation::standard()}) {
      const CMat lhs = rho_eval(r, a * b);
      CHECK(rel_diff(lhs, rho_eval(r, a) * rho_eval(r, b)) < 1e-12);
    }
  }
}

TEST_CASE("summand and K block") {
  const Triple t = random_triple(1, 2, 2);
  CHECK(summand_a(GStarJacobiElement::identity(2, 2), t.p).norm() < 1e-15);
  const KBlocks id = factor_b(GStarJacobiElement::identity(2, 2), t.p);
  CHECK(id.upper.isApprox(CMat::Identity(2, 2)));
  CHECK(id.lower.isApprox(CMat::Identity(2, 2)));

  // λ = 0, Q = 0: the summand is the central part.
  GStarJacobiElement k = GStarJacobiElement::identity(1, 1);
  k.gs.p = scalar(std::polar(1.0, 0.4));
  k.hc.zeta = scalar({0, 0.9});
  const DiskJacobiPoint q = DiskJacobiPoint::make(scalar(0.2), scalar({0.1, 0.3}));
  CHECK(std::abs(summand_a(k, q)(0, 0) - cplx(0, 0.9)) < 1e-15);

  // Q = 0 gives (P, P̄).
  Rng rng(43);
  const GStarJacobiElement rot = sample_kstarj(rng, 2, 1, 0.8);
  const DiskJacobiPoint p = sample_disk_jacobi(rng, 2, 1, 0.8);
  const KBlocks kb = factor_b(rot.gs, p.base);
  CHECK(max_abs(kb.upper, rot.gs.p) < 1e-14);
  CHECK(max_abs(kb.lower, rot.gs.p.conjugate()) < 1e-14);

  // Independent of η and of the Heisenberg part.
  const Triple r = random_triple(2, 2, 1);
  DiskJacobiPoint moved = r.p;
  moved.eta = rng.complex_matrix(1, 2, 0.5);
  GStarJacobiElement shifted = r.g1;
  shifted.hc.zeta += kI * CMat::Identity(1, 1);
  const KBlocks b1 = factor_b(r.g1, r.p);
  const KBlocks b2 = factor_b(shifted, moved);
  CHECK(b1.upper == b2.upper);
  CHECK(b1.lower == b2.lower);
}

TEST_CASE("automorphic factor") {
  const Triple t = random_triple(3, 2, 2);
  const CMat id = j_factor(half_integral_example(2), Representation::standard(),
                           GStarJacobiElement::identity(2, 2), t.p);
  CHECK(max_abs(id, CMat::Identity(2, 2)) < 1e-14);

  const double th = 0.6;
  GStarJacobiElement rot = GStarJacobiElement::identity(1, 1);
  rot.gs.p = scalar(std::polar(1.0, th));
  const CMat j = j_factor(index_of(rm({{0}})), Representation::det_power(1), rot,
                          DiskJacobiPoint::make(scalar({0.3, 0.1}), scalar(0.2)));
  CHECK(std::abs(j(0, 0) - std::polar(1.0, -th)) < 1e-15);

  // M = 0 with det^k is det(Q̄W+P̄)^k, evaluated independently.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Triple r = random_triple(100 + s, 2, 1);
    const CMat expect = r.g1.gs.q.conjugate() * r.p.base.w() + r.g1.gs.p.conjugate();
    const cplx d = expect.determinant();
    const CMat got = j_factor(index_of(rm({{0}})), Representation::det_power(2), r.g1, r.p);
    CHECK(std::abs(got(0, 0) - d * d) < 1e-12 * std::norm(d));
  }
}

TEST_CASE("cocycle identities") {
  const Triple t = random_triple(4, 2, 2);
  const GStarJacobiElement e = GStarJacobiElement::identity(2, 2);
  const IndexMatrix m = half_integral_example(2);
  CHECK(verify_cocycle(m, Representation::standard(), e, e, t.p) < 1e-15);
  CHECK(verify_cocycle(m, Representation::det_power(1), t.g1, e, t.p) < 1e-13);

  double worst = 0.0;
  for (int g = 1; g <= 2; ++g)
    for (int h = 1; h <= 2; ++h)
      for (std::uint64_t s = 0; s < 25; ++s) {
        const Triple r = random_triple(derive_seed(500, s), g, h);
        for (const IndexMatrix& idx :
             {index_of(RMat::Zero(h, h)), index_of(RMat::Identity(h, h)), half_integral_example(h)})
          for (const Representation& rep :
               {Representation::det_power(0), Representation::det_power(1),
                Representation::det_power(2), Representation::standard()})
            worst = std::max(worst, verify_cocycle(idx, rep, r.g1, r.g2, r.p));
      }
  CHECK(worst < 1e-8);

  CHECK(raises(ErrorKind::dimension, [&] {
    j_factor(half_integral_example(3), Representation::standard(), t.g1, t.p);
  }));
}
