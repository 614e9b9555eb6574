// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sjk/sjk.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct Ctx {
  sjk_context* c = sjk_context_create();
  ~Ctx() { sjk_context_destroy(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  sjk_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status helpers") {
  CHECK(std::strlen(sjk_version()) > 0);
  CHECK(std::string(sjk_status_name(SJK_OK)) == "ok");
  CHECK(sjk_exit_code(SJK_OK) == 0);
  CHECK(sjk_exit_code(SJK_VERIFY_FAILED) == 1);
  CHECK(sjk_exit_code(SJK_INVALID_ARGUMENT) == 2);
  CHECK(sjk_exit_code(SJK_DIMENSION) == 2);
  CHECK(sjk_exit_code(SJK_DOMAIN) == 3);
  CHECK(sjk_exit_code(SJK_CONDITIONING) == 4);
}

TEST_CASE("Jacobi elements and the action") {
  Ctx ctx;
  const double j1[] = {0, 1, -1, 0};
  sjk_jacobi* a = nullptr;
  REQUIRE(sjk_jacobi_create(ctx.c, 1, 1, j1, nullptr, nullptr, nullptr, &a) == SJK_OK);

  const double omega[] = {0, 1};
  const double z[] = {0.3, -0.2};
  sjk_siegel_jacobi_point* p = nullptr;
  REQUIRE(sjk_siegel_jacobi_point_create(ctx.c, 1, 1, omega, z, &p) == SJK_OK);
  sjk_siegel_jacobi_point* q = nullptr;
  REQUIRE(sjk_act_jacobi(ctx.c, a, p, &q) == SJK_OK);
  double out_omega[2], out_z[2];
  int g = 0, h = 0;
  REQUIRE(sjk_siegel_jacobi_point_get(ctx.c, q, &g, &h, out_omega, out_z) == SJK_OK);
  CHECK(g == 1);
  CHECK(h == 1);
  CHECK(std::abs(out_omega[0]) < 1e-15);
  CHECK(std::abs(out_omega[1] - 1.0) < 1e-15);
  // i·z = 0.2 + 0.3i
  CHECK(std::abs(out_z[0] - 0.2) < 1e-15);
  CHECK(std::abs(out_z[1] - 0.3) < 1e-15);

  sjk_jacobi* b = nullptr;
  sjk_jacobi* inv = nullptr;
  sjk_jacobi* prod = nullptr;
  REQUIRE(sjk_jacobi_sample(ctx.c, 2, 2, 5, 0.8, &b) == SJK_OK);
  REQUIRE(sjk_jacobi_inv(ctx.c, b, &inv) == SJK_OK);
  REQUIRE(sjk_jacobi_mul(ctx.c, b, inv, &prod) == SJK_OK);
  std::vector<double> m(16), lam(4), mu(4), kap(4);
  REQUIRE(sjk_jacobi_get(ctx.c, prod, nullptr, nullptr, m.data(), lam.data(), mu.data(),
                         kap.data()) == SJK_OK);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(std::abs(m[i * 4 + k] - (i == k ? 1.0 : 0.0)) < 1e-12);
  for (double x : lam) CHECK(std::abs(x) < 1e-12);
  for (double x : kap) CHECK(std::abs(x) < 1e-12);

  sjk_jacobi_destroy(prod);
  sjk_jacobi_destroy(inv);
  sjk_jacobi_destroy(b);
  sjk_siegel_jacobi_point_destroy(q);
  sjk_siegel_jacobi_point_destroy(p);
  sjk_jacobi_destroy(a);
}

TEST_CASE("partial Cayley map and compatibility") {
  Ctx ctx;
  const double w[] = {0, 0.5};
  const double eta[] = {1, 0};
  sjk_disk_jacobi_point* p = nullptr;
  REQUIRE(sjk_disk_jacobi_point_create(ctx.c, 1, 1, w, eta, &p) == SJK_OK);
  sjk_siegel_jacobi_point* q = nullptr;
  REQUIRE(sjk_partial_cayley(ctx.c, p, &q) == SJK_OK);
  double omega[2], z[2];
  REQUIRE(sjk_siegel_jacobi_point_get(ctx.c, q, nullptr, nullptr, omega, z) == SJK_OK);
  CHECK(std::abs(omega[0] + 0.8) < 1e-15);
  CHECK(std::abs(omega[1] - 0.6) < 1e-15);
  CHECK(std::abs(z[0] + 0.8) < 1e-15);
  CHECK(std::abs(z[1] - 1.6) < 1e-15);

  sjk_disk_jacobi_point* back = nullptr;
  REQUIRE(sjk_partial_cayley_inv(ctx.c, q, &back) == SJK_OK);
  double w2[2], eta2[2];
  REQUIRE(sjk_disk_jacobi_point_get(ctx.c, back, nullptr, nullptr, w2, eta2) == SJK_OK);
  CHECK(std::abs(w2[1] - 0.5) < 1e-15);
  CHECK(std::abs(eta2[0] - 1.0) < 1e-15);

  for (uint64_t seed = 0; seed < 20; ++seed) {
    sjk_jacobi* a = nullptr;
    sjk_disk_jacobi_point* r = nullptr;
    REQUIRE(sjk_jacobi_sample(ctx.c, 2, 1, seed, 0.8, &a) == SJK_OK);
    REQUIRE(sjk_disk_jacobi_point_sample(ctx.c, 2, 1, seed + 100, 0.8, &r) == SJK_OK);
    double residual = 1.0;
    REQUIRE(sjk_compatibility_residual(ctx.c, a, r, &residual) == SJK_OK);
    CHECK(residual < 1e-9);
    sjk_disk_jacobi_point_destroy(r);
    sjk_jacobi_destroy(a);
  }
  sjk_disk_jacobi_point_destroy(back);
  sjk_siegel_jacobi_point_destroy(q);
  sjk_disk_jacobi_point_destroy(p);
}

TEST_CASE("errors are reported through status codes") {
  Ctx ctx;
  const double not_symplectic[] = {2, 0, 0, 2};
  sjk_jacobi* a = nullptr;
  CHECK(sjk_jacobi_create(ctx.c, 1, 1, not_symplectic, nullptr, nullptr, nullptr, &a) ==
        SJK_DOMAIN);
  CHECK(a == nullptr);
  CHECK(std::strlen(sjk_last_error(ctx.c)) > 0);

  const double outside[] = {1.5, 0};
  sjk_disk_jacobi_point* p = nullptr;
  CHECK(sjk_disk_jacobi_point_create(ctx.c, 1, 1, outside, nullptr, &p) == SJK_DOMAIN);
  CHECK(sjk_jacobi_identity(ctx.c, 1, 1, nullptr) == SJK_INVALID_ARGUMENT);
  CHECK(sjk_jacobi_identity(ctx.c, 0, 1, &a) == SJK_INVALID_ARGUMENT);

  char* out = nullptr;
  CHECK(sjk_cmd_transform(ctx.c, "cayley", "{bad json", nullptr, &out) ==
        SJK_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(sjk_context_set_tolerance(ctx.c, 0.0, -1, -1, -1) == SJK_INVALID_ARGUMENT);
  CHECK(sjk_context_set_tolerance(ctx.c, 1e-8, -1, -1, -1) == SJK_OK);
}

TEST_CASE("JSON commands") {
  Ctx ctx;
  char* out = nullptr;
  REQUIRE(sjk_cmd_transform(ctx.c, "partial-cayley", R"({"w":[[[0,0]]],"eta":[[[0,0]]]})",
                            nullptr, &out) == SJK_OK);
  CHECK(take(out) == R"({"omega":[[[0,1]]],"z":[[[0,0]]]})");

  REQUIRE(sjk_cmd_metric(ctx.c, "disk", R"({"w":[[[0,0]]],"d_w":[[[1,0]]]})", 1, 1, &out) ==
          SJK_OK);
  CHECK(take(out) == R"({"value":4})");

  REQUIRE(sjk_cmd_sample(ctx.c, "jacobi", 2, 1, 3, 0.8, &out) == SJK_OK);
  const std::string s = take(out);
  REQUIRE(sjk_cmd_sample(ctx.c, "jacobi", 2, 1, 3, 0.8, &out) == SJK_OK);
  CHECK(take(out) == s);
}

TEST_CASE("verify reports do not depend on threading") {
  Ctx ctx;
  sjk_verify_options o{"all", 2, 1, 5, 42, 0.0, 1};
  char* out = nullptr;
  REQUIRE(sjk_cmd_verify(ctx.c, &o, &out) == SJK_OK);
  const std::string serial = take(out);
  o.threads = 0;
  REQUIRE(sjk_cmd_verify(ctx.c, &o, &out) == SJK_OK);
  CHECK(take(out) == serial);

  sjk_verify_options bad{"compat-37", 1, 1, 3, 42, 1e-300, 1};
  CHECK(sjk_cmd_verify(ctx.c, &bad, &out) == SJK_VERIFY_FAILED);
  CHECK(take(out).find("\"passed\":false") != std::string::npos);

  sjk_verify_options unknown{"nope", 1, 1, 3, 42, 0.0, 1};
  out = nullptr;
  CHECK(sjk_cmd_verify(ctx.c, &unknown, &out) == SJK_INVALID_ARGUMENT);
  CHECK(out == nullptr);
}
