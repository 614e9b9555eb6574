#include "support.hpp"

#include "sjk/spaces.hpp"

#include <cmath>

using namespace sjk;
using sjk::test::cm;
using sjk::test::max_abs;
using sjk::test::raises;
using sjk::test::rm;
using sjk::test::scalar;

namespace {

// Scalar Möbius oracle for g = 1.
cplx moebius(const RMat& m, cplx z) {
  return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

}  // namespace

TEST_CASE("point constructors enforce the domains") {
  CHECK(raises(ErrorKind::domain, [] { SiegelPoint::make(scalar({0, -1})); }));
  CHECK(raises(ErrorKind::domain, [] { SiegelPoint::make(cm({{{0, 1}, 1}, {0, {0, 1}}})); }));
  CHECK(raises(ErrorKind::domain, [] { DiskPoint::make(scalar(1.2)); }));
  CHECK(raises(ErrorKind::dimension,
               [] { SiegelJacobiPoint::make(scalar(kI), CMat::Zero(1, 2)); }));
  CHECK(SiegelPoint::make(scalar({0, 2})).margin() == doctest::Approx(2.0));
}

TEST_CASE("Siegel action") {
  const SiegelPoint i1 = SiegelPoint::make(scalar(kI));
  CHECK(point_distance(act_siegel(SymplecticMatrix::identity(1), i1), i1) == 0.0);
  const auto shift = SymplecticMatrix::from_matrix(rm({{1, 1}, {0, 1}}));
  CHECK(std::abs(act_siegel(shift, i1).omega()(0, 0) - cplx(1, 1)) < 1e-15);
  CHECK(std::abs(act_siegel(SymplecticMatrix::standard_j(1), i1).omega()(0, 0) - kI) < 1e-15);

  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(s);
    const SymplecticMatrix m = sample_symplectic(rng, 1, 0.8);
    const SiegelPoint p = sample_siegel(rng, 1, 0.8);
    const cplx got = act_siegel(m, p).omega()(0, 0);
    CHECK(std::abs(got - moebius(m.matrix(), p.omega()(0, 0))) < 1e-12 * (1 + std::abs(got)));
  }
}

TEST_CASE("disk action") {
  const DiskPoint w = DiskPoint::make(scalar(0.3));
  CHECK(point_distance(act_disk(GStarElement::identity(1), w), w) == 0.0);
  const GStarElement j = conjugate_by_T(SymplecticMatrix::standard_j(1));
  CHECK(std::abs(act_disk(j, w).w()(0, 0) - cplx(-0.3, 0)) < 1e-15);
  const double th = 0.7;
  const GStarElement rot{scalar(std::polar(1.0, th)), scalar(0)};
  const DiskPoint w2 = DiskPoint::make(scalar({0.2, -0.4}));
  CHECK(std::abs(act_disk(rot, w2).w()(0, 0) - std::polar(1.0, 2 * th) * w2.w()(0, 0)) <
        1e-15);
}

TEST_CASE("Jacobi action") {
  Rng rng(21);
  const SiegelJacobiPoint p = sample_siegel_jacobi(rng, 2, 2, 0.8);
  CHECK(point_distance(act_jacobi(JacobiElement::identity(2, 2), p), p) == 0.0);

  const HeisenbergElement hs = sample_heisenberg(rng, 2, 2, 0.8);
  const SiegelJacobiPoint q = act_jacobi({SymplecticMatrix::identity(2), hs}, p);
  const CMat expect = p.z + to_complex(hs.lambda) * p.base.omega() + to_complex(hs.mu);
  CHECK(max_abs(q.z, expect) < 1e-14);
  CHECK(point_distance(q.base, p.base) == 0.0);
  HeisenbergElement hs2 = hs;
  hs2.kappa += RMat::Identity(2, 2);
  CHECK(point_distance(act_jacobi({SymplecticMatrix::identity(2), hs2}, p), q) == 0.0);

  const cplx z{0.3, -0.2};
  const SiegelJacobiPoint r =
      act_jacobi({SymplecticMatrix::standard_j(1), HeisenbergElement::identity(1, 1)},
                 SiegelJacobiPoint::make(scalar(kI), scalar(z)));
  CHECK(std::abs(r.base.omega()(0, 0) - kI) < 1e-15);
  CHECK(std::abs(r.z(0, 0) - kI * z) < 1e-15);
}

TEST_CASE("Jacobi action on the disk") {
  Rng rng(22);
  const DiskJacobiPoint p = sample_disk_jacobi(rng, 2, 1, 0.8);
  CHECK(point_distance(act_jacobi_disk(GStarJacobiElement::identity(2, 1), p), p) == 0.0);
  GStarJacobiElement a = GStarJacobiElement::identity(2, 1);
  a.hc.xi = rng.complex_matrix(1, 2, 0.5);
  a.hc.eta = a.hc.xi.conjugate();
  const DiskJacobiPoint q = act_jacobi_disk(a, p);
  CHECK(max_abs(q.eta, p.eta + a.hc.xi * p.base.w() + a.hc.eta) < 1e-15);
}

TEST_CASE("Cayley transform") {
  CHECK(max_abs(cayley(DiskPoint::make(CMat::Zero(2, 2))).omega(), kI * CMat::Identity(2, 2)) <
        1e-15);
  CHECK(std::abs(cayley(DiskPoint::make(scalar(0.5 * kI))).omega()(0, 0) - cplx(-0.8, 0.6)) <
        1e-15);
  CHECK(max_abs(cayley(DiskPoint::make(0.5 * CMat::Identity(2, 2))).omega(),
                3.0 * kI * CMat::Identity(2, 2)) < 1e-14);

  CHECK(cayley_inv(SiegelPoint::make(kI * CMat::Identity(2, 2))).w().norm() < 1e-15);
  CHECK(std::abs(cayley_inv(SiegelPoint::make(scalar({-0.8, 0.6}))).w()(0, 0) - 0.5 * kI) <
        1e-15);
  CHECK(std::abs(cayley_inv(SiegelPoint::make(scalar({1, 1}))).w()(0, 0) - cplx(0.2, -0.4)) <
        1e-15);
}

TEST_CASE("partial Cayley transform") {
  const DiskJacobiPoint origin = DiskJacobiPoint::make(CMat::Zero(2, 2), CMat::Zero(1, 2));
  const SiegelJacobiPoint o = partial_cayley(origin);
  CHECK(max_abs(o.base.omega(), kI * CMat::Identity(2, 2)) < 1e-15);
  CHECK(o.z.norm() == 0.0);

  const CMat eta = cm({{{0.1, 0.2}, {-0.3, 0.05}}});
  CHECK(max_abs(partial_cayley(DiskJacobiPoint::make(CMat::Zero(2, 2), eta)).z,
                2.0 * kI * eta) < 1e-15);

  const SiegelJacobiPoint h = partial_cayley(DiskJacobiPoint::make(scalar(0.5 * kI), scalar(1)));
  CHECK(std::abs(h.base.omega()(0, 0) - cplx(-0.8, 0.6)) < 1e-15);
  CHECK(std::abs(h.z(0, 0) - cplx(-0.8, 1.6)) < 1e-15);

  const CMat z = cm({{{0.4, -1}, {2, 0.5}}});
  const DiskJacobiPoint back =
      partial_cayley_inv(SiegelJacobiPoint::make(kI * CMat::Identity(2, 2), z));
  CHECK(back.base.w().norm() < 1e-15);
  CHECK(max_abs(back.eta, -0.5 * kI * z) < 1e-15);

  const DiskJacobiPoint r = partial_cayley_inv(h);
  CHECK(std::abs(r.base.w()(0, 0) - 0.5 * kI) < 1e-15);
  CHECK(std::abs(r.eta(0, 0) - cplx(1, 0)) < 1e-15);
}

TEST_CASE("Cayley roundtrips on random points") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(77, s));
    const DiskJacobiPoint p = sample_disk_jacobi(rng, 2, 2, 0.8);
    CHECK(point_distance(partial_cayley_inv(partial_cayley(p)), p) < 1e-10);
    const SiegelJacobiPoint q = sample_siegel_jacobi(rng, 2, 2, 0.8);
    CHECK(point_distance(partial_cayley(partial_cayley_inv(q)), q) < 1e-10);
    CHECK(point_distance(cayley_inv(cayley(p.base)), p.base) < 1e-10);
  }
}

TEST_CASE("compatibility of the actions with the Cayley maps") {
  const DiskJacobiPoint origin = DiskJacobiPoint::make(CMat::Zero(1, 1), CMat::Zero(1, 1));
  CHECK(check_compatibility(JacobiElement::identity(1, 1), origin) < 1e-15);
  const JacobiElement j{SymplecticMatrix::standard_j(1), HeisenbergElement::identity(1, 1)};
  CHECK(check_compatibility(j, origin) < 1e-15);
  CHECK(std::abs(act_jacobi(j, partial_cayley(origin)).base.omega()(0, 0) - kI) < 1e-15);

  double worst = 0.0;
  for (int g = 1; g <= 2; ++g)
    for (int h = 1; h <= 2; ++h)
      for (std::uint64_t s = 0; s < 100; ++s) {
        Rng rng(derive_seed(1234, s));
        const JacobiElement a = sample_jacobi(rng, g, h, 0.8);
        const DiskJacobiPoint p = sample_disk_jacobi(rng, g, h, 0.8);
        worst = std::max(worst, check_compatibility(a, p));
        worst = std::max(worst, check_compatibility_classical(a.m, p.base));
      }
  CHECK(worst < 1e-9);
}

TEST_CASE("point samplers") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const DiskPoint d = sample_disk(rng, 3);
    Eigen::JacobiSVD<CMat> svd(d.w());
    CHECK(svd.singularValues()(0) < 0.9);
    const SiegelPoint p = sample_siegel(rng, 3, 0.8);
    CHECK(p.margin() >= 0.1 - 1e-12);
  }
  const auto a = std::get<DiskJacobiPoint>(sample_point(PointKind::disk_jacobi, 2, 2, 8));
  const auto b = std::get<DiskJacobiPoint>(sample_point(PointKind::disk_jacobi, 2, 2, 8));
  CHECK(a.base.w() == b.base.w());
  CHECK(a.eta == b.eta);
}
