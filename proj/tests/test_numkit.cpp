#include "support.hpp"

#include "sjk/numkit.hpp"
#include "sjk/random.hpp"

using namespace sjk;
using sjk::test::cm;
using sjk::test::raises;

TEST_CASE("trace sums the diagonal") {
  CHECK(trace_sigma(CMat::Identity(3, 3)) == cplx(3, 0));
  CHECK(trace_sigma(CMat::Zero(2, 2)) == cplx(0, 0));
  const CMat a = cm({{{1, 1}, 0}, {0, {2, -1}}});
  CHECK(std::abs(trace_sigma(a) - cplx(3, 0)) < 1e-15);
  CHECK(raises(ErrorKind::dimension, [] { trace_sigma(CMat::Zero(2, 3)); }));
}

TEST_CASE("bracket is B transpose times A times B") {
  CHECK(bracket(CMat::Identity(2, 2), CMat::Identity(2, 2)).isApprox(CMat::Identity(2, 2)));
  CHECK(bracket(CMat::Identity(2, 2), CMat::Zero(2, 2)).isZero());
  CHECK(std::abs(bracket(cm({{2}}), cm({{3}}))(0, 0) - cplx(18, 0)) < 1e-14);
  // Entrywise oracle on a rectangular B.
  Rng rng(5);
  const CMat a = rng.complex_matrix(3, 3, 1.0);
  const CMat b = rng.complex_matrix(3, 2, 1.0);
  const CMat got = bracket(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx s = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += b(k, i) * a(k, l) * b(l, j);
      CHECK(std::abs(got(i, j) - s) < 1e-13);
    }
  CHECK(raises(ErrorKind::dimension, [] { bracket(CMat::Zero(2, 2), CMat::Zero(3, 1)); }));
}

TEST_CASE("symmetry test") {
  CHECK(is_symmetric(CMat::Identity(2, 2)));
  CHECK_FALSE(is_symmetric(cm({{0, 1}, {-1, 0}})));
  CHECK(is_symmetric(cm({{1, {2, 1}}, {{2, 1}, 3}})));
}

TEST_CASE("Hermitian positive definiteness") {
  CHECK(is_hermitian_pd(CMat::Identity(2, 2)));
  CHECK_FALSE(is_hermitian_pd(-CMat::Identity(2, 2)));
  const CMat w = 0.3 * CMat::Identity(2, 2);
  const CMat m = CMat::Identity(2, 2) - w * w.conjugate();
  CHECK(is_hermitian_pd(m));
  CHECK(hermitian_min_eig(m) == doctest::Approx(0.91).epsilon(1e-14));
}

TEST_CASE("relative closeness") {
  const CMat id = CMat::Identity(2, 2);
  CHECK(rel_close(id, id, 1e-9));
  CHECK_FALSE(rel_close(id, 2.0 * id, 1e-9));
  CHECK(rel_close(id, id + 1e-12 * CMat::Ones(2, 2), 1e-9));
}

TEST_CASE("guarded inverse refuses ill-conditioned input") {
  const CMat a = cm({{2, 1}, {1, 1}});
  CHECK((guarded_inverse(a, "a") * a).isApprox(CMat::Identity(2, 2)));
  const CMat singular = cm({{1, 1}, {1, 1 + 1e-15}});
  CHECK(raises(ErrorKind::conditioning, [&] { guarded_inverse(singular, "s"); }));
  CHECK(raises(ErrorKind::conditioning,
               [&] { guarded_solve(singular, CMat::Identity(2, 2), "s"); }));
}

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.fd_first_rel = 0.0;
  CHECK(raises(ErrorKind::invalid_argument, [&] { t.validate(); }));
}

TEST_CASE("seed derivation and generator are deterministic") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng u(3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    const int k = u.uniform_int(-2, 2);
    CHECK(k >= -2);
    CHECK(k <= 2);
  }
  CHECK(is_symmetric(u.complex_symmetric(4, 1.0)));
}
