#include "sjk/sjk.h"

#include "sjk/commands.hpp"
#include "sjk/geometry.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct sjk_context {
  sjk::Tolerance tol;
  std::string last_error;
};

struct sjk_jacobi {
  sjk::JacobiElement value;
};

struct sjk_siegel_jacobi_point {
  sjk::SiegelJacobiPoint value;
};

struct sjk_disk_jacobi_point {
  sjk::DiskJacobiPoint value;
};

namespace {

sjk_status status_of(sjk::ErrorKind kind) {
  switch (kind) {
    case sjk::ErrorKind::invalid_argument: return SJK_INVALID_ARGUMENT;
    case sjk::ErrorKind::dimension: return SJK_DIMENSION;
    case sjk::ErrorKind::domain: return SJK_DOMAIN;
    case sjk::ErrorKind::conditioning: return SJK_CONDITIONING;
    case sjk::ErrorKind::numeric: return SJK_NUMERIC;
    case sjk::ErrorKind::consistency: return SJK_CONSISTENCY;
    case sjk::ErrorKind::range: return SJK_RANGE;
  }
  return SJK_INTERNAL;
}

template <class F>
sjk_status guarded(sjk_context* ctx, F&& body) {
  if (!ctx) return SJK_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const sjk::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return SJK_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SJK_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw sjk::Error(sjk::ErrorKind::invalid_argument, what);
}

void require_sizes(int g, int h) {
  require(g >= 1 && h >= 1 && g <= 64 && h <= 64, "g and h must lie in 1..64");
}

sjk::RMat read_real(const double* p, int rows, int cols) {
  sjk::RMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = p ? p[r * cols + c] : 0.0;
  return m;
}

sjk::CMat read_complex(const double* p, int rows, int cols) {
  sjk::CMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = 2 * static_cast<std::size_t>(r * cols + c);
      m(r, c) = p ? sjk::cplx(p[k], p[k + 1]) : sjk::cplx(0.0, 0.0);
    }
  return m;
}

void write_real(const sjk::RMat& m, double* out) {
  if (!out) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[r * m.cols() + c] = m(r, c);
}

void write_complex(const sjk::CMat& m, double* out) {
  if (!out) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out[2 * (r * m.cols() + c)] = m(r, c).real();
      out[2 * (r * m.cols() + c) + 1] = m(r, c).imag();
    }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sjk_status emit(const std::string& s, char** out) {
  *out = copy_string(s);
  return SJK_OK;
}

std::string opt_string(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* sjk_version(void) { return "1.0.0"; }

const char* sjk_status_name(sjk_status status) {
  switch (status) {
    case SJK_OK: return "ok";
    case SJK_VERIFY_FAILED: return "verify_failed";
    case SJK_INVALID_ARGUMENT: return "invalid_argument";
    case SJK_DIMENSION: return "dimension";
    case SJK_DOMAIN: return "domain";
    case SJK_CONDITIONING: return "conditioning";
    case SJK_NUMERIC: return "numeric";
    case SJK_CONSISTENCY: return "consistency";
    case SJK_RANGE: return "range";
    case SJK_INTERNAL: return "internal";
  }
  return "unknown";
}

int sjk_exit_code(sjk_status status) {
  switch (status) {
    case SJK_OK: return 0;
    case SJK_INVALID_ARGUMENT:
    case SJK_DIMENSION: return 2;
    case SJK_DOMAIN:
    case SJK_RANGE: return 3;
    case SJK_CONDITIONING:
    case SJK_NUMERIC: return 4;
    case SJK_VERIFY_FAILED:
    case SJK_CONSISTENCY:
    case SJK_INTERNAL: return 1;
  }
  return 1;
}

sjk_context* sjk_context_create(void) { return new (std::nothrow) sjk_context(); }

void sjk_context_destroy(sjk_context* ctx) { delete ctx; }

const char* sjk_last_error(const sjk_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

sjk_status sjk_context_set_tolerance(sjk_context* ctx, double algebraic_rel,
                                     double fd_first_rel, double fd_second_rel,
                                     double pd_min_eig) {
  return guarded(ctx, [&] {
    sjk::Tolerance t = ctx->tol;
    if (algebraic_rel >= 0) t.algebraic_rel = algebraic_rel;
    if (fd_first_rel >= 0) t.fd_first_rel = fd_first_rel;
    if (fd_second_rel >= 0) t.fd_second_rel = fd_second_rel;
    if (pd_min_eig >= 0) t.pd_min_eig = pd_min_eig;
    t.validate();
    ctx->tol = t;
    return SJK_OK;
  });
}

void sjk_set_validation(int enabled) { sjk::set_validation_enabled(enabled != 0); }

void sjk_string_free(char* s) { std::free(s); }

sjk_status sjk_jacobi_create(sjk_context* ctx, int g, int h, const double* m,
                             const double* lambda, const double* mu, const double* kappa,
                             sjk_jacobi** out) {
  return guarded(ctx, [&] {
    require(out && m, "null argument");
    require_sizes(g, h);
    sjk::HeisenbergElement hs{read_real(lambda, h, g), read_real(mu, h, g),
                              read_real(kappa, h, h)};
    hs.validate(ctx->tol);
    *out = new sjk_jacobi{
        {sjk::SymplecticMatrix::from_matrix(read_real(m, 2 * g, 2 * g), ctx->tol), hs}};
    return SJK_OK;
  });
}

sjk_status sjk_jacobi_identity(sjk_context* ctx, int g, int h, sjk_jacobi** out) {
  return guarded(ctx, [&] {
    require(out, "null argument");
    require_sizes(g, h);
    *out = new sjk_jacobi{sjk::JacobiElement::identity(g, h)};
    return SJK_OK;
  });
}

sjk_status sjk_jacobi_sample(sjk_context* ctx, int g, int h, uint64_t seed, double scale,
                             sjk_jacobi** out) {
  return guarded(ctx, [&] {
    require(out, "null argument");
    require_sizes(g, h);
    require(scale > 0.0, "scale must be positive");
    *out = new sjk_jacobi{
        std::get<sjk::JacobiElement>(sjk::sample_element(sjk::ElementKind::jacobi, g, h, seed, scale))};
    return SJK_OK;
  });
}

sjk_status sjk_jacobi_mul(sjk_context* ctx, const sjk_jacobi* a, const sjk_jacobi* b,
                          sjk_jacobi** out) {
  return guarded(ctx, [&] {
    require(a && b && out, "null argument");
    *out = new sjk_jacobi{sjk::jacobi_mul(a->value, b->value)};
    return SJK_OK;
  });
}

sjk_status sjk_jacobi_inv(sjk_context* ctx, const sjk_jacobi* a, sjk_jacobi** out) {
  return guarded(ctx, [&] {
    require(a && out, "null argument");
    *out = new sjk_jacobi{sjk::jacobi_inv(a->value)};
    return SJK_OK;
  });
}

sjk_status sjk_jacobi_get(sjk_context* ctx, const sjk_jacobi* a, int* g, int* h, double* m,
                          double* lambda, double* mu, double* kappa) {
  return guarded(ctx, [&] {
    require(a, "null argument");
    if (g) *g = a->value.g();
    if (h) *h = a->value.h();
    write_real(a->value.m.matrix(), m);
    write_real(a->value.hs.lambda, lambda);
    write_real(a->value.hs.mu, mu);
    write_real(a->value.hs.kappa, kappa);
    return SJK_OK;
  });
}

void sjk_jacobi_destroy(sjk_jacobi* a) { delete a; }

sjk_status sjk_siegel_jacobi_point_create(sjk_context* ctx, int g, int h, const double* omega,
                                          const double* z, sjk_siegel_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(out && omega, "null argument");
    require_sizes(g, h);
    *out = new sjk_siegel_jacobi_point{
        sjk::SiegelJacobiPoint::make(read_complex(omega, g, g), read_complex(z, h, g), ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_siegel_jacobi_point_get(sjk_context* ctx, const sjk_siegel_jacobi_point* p,
                                       int* g, int* h, double* omega, double* z) {
  return guarded(ctx, [&] {
    require(p, "null argument");
    if (g) *g = p->value.g();
    if (h) *h = p->value.h();
    write_complex(p->value.base.omega(), omega);
    write_complex(p->value.z, z);
    return SJK_OK;
  });
}

void sjk_siegel_jacobi_point_destroy(sjk_siegel_jacobi_point* p) { delete p; }

sjk_status sjk_disk_jacobi_point_create(sjk_context* ctx, int g, int h, const double* w,
                                        const double* eta, sjk_disk_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(out && w, "null argument");
    require_sizes(g, h);
    *out = new sjk_disk_jacobi_point{
        sjk::DiskJacobiPoint::make(read_complex(w, g, g), read_complex(eta, h, g), ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_disk_jacobi_point_sample(sjk_context* ctx, int g, int h, uint64_t seed,
                                        double scale, sjk_disk_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(out, "null argument");
    require_sizes(g, h);
    require(scale > 0.0, "scale must be positive");
    *out = new sjk_disk_jacobi_point{std::get<sjk::DiskJacobiPoint>(
        sjk::sample_point(sjk::PointKind::disk_jacobi, g, h, seed, scale))};
    return SJK_OK;
  });
}

sjk_status sjk_disk_jacobi_point_get(sjk_context* ctx, const sjk_disk_jacobi_point* p, int* g,
                                     int* h, double* w, double* eta) {
  return guarded(ctx, [&] {
    require(p, "null argument");
    if (g) *g = p->value.g();
    if (h) *h = p->value.h();
    write_complex(p->value.base.w(), w);
    write_complex(p->value.eta, eta);
    return SJK_OK;
  });
}

void sjk_disk_jacobi_point_destroy(sjk_disk_jacobi_point* p) { delete p; }

sjk_status sjk_partial_cayley(sjk_context* ctx, const sjk_disk_jacobi_point* p,
                              sjk_siegel_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = new sjk_siegel_jacobi_point{sjk::partial_cayley(p->value, ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_partial_cayley_inv(sjk_context* ctx, const sjk_siegel_jacobi_point* p,
                                  sjk_disk_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = new sjk_disk_jacobi_point{sjk::partial_cayley_inv(p->value, ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_act_jacobi(sjk_context* ctx, const sjk_jacobi* a,
                          const sjk_siegel_jacobi_point* p, sjk_siegel_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(a && p && out, "null argument");
    *out = new sjk_siegel_jacobi_point{sjk::act_jacobi(a->value, p->value, ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_act_jacobi_disk(sjk_context* ctx, const sjk_jacobi* a,
                               const sjk_disk_jacobi_point* p, sjk_disk_jacobi_point** out) {
  return guarded(ctx, [&] {
    require(a && p && out, "null argument");
    *out = new sjk_disk_jacobi_point{
        sjk::act_jacobi_disk(sjk::theta(a->value), p->value, ctx->tol)};
    return SJK_OK;
  });
}

sjk_status sjk_compatibility_residual(sjk_context* ctx, const sjk_jacobi* a,
                                      const sjk_disk_jacobi_point* p, double* residual) {
  return guarded(ctx, [&] {
    require(a && p && residual, "null argument");
    *residual = sjk::check_compatibility(a->value, p->value, ctx->tol);
    return SJK_OK;
  });
}

sjk_status sjk_cmd_transform(sjk_context* ctx, const char* map, const char* input_json,
                             const char* element_json, char** out) {
  return guarded(ctx, [&] {
    require(map && input_json && out, "null argument");
    return emit(sjk::commands::transform(map, input_json, opt_string(element_json), ctx->tol),
                out);
  });
}

sjk_status sjk_cmd_sample(sjk_context* ctx, const char* kind, int g, int h, uint64_t seed,
                          double scale, char** out) {
  return guarded(ctx, [&] {
    require(kind && out, "null argument");
    return emit(sjk::commands::sample(kind, g, h, seed, scale), out);
  });
}

sjk_status sjk_cmd_metric(sjk_context* ctx, const char* space, const char* input_json,
                          double a, double b, char** out) {
  return guarded(ctx, [&] {
    require(space && input_json && out, "null argument");
    return emit(sjk::commands::metric(space, input_json, {a, b}, ctx->tol), out);
  });
}

sjk_status sjk_cmd_laplacian(sjk_context* ctx, const char* space, const char* field,
                             const char* input_json, double a, double b, char** out) {
  return guarded(ctx, [&] {
    require(space && field && input_json && out, "null argument");
    return emit(sjk::commands::laplacian(space, field, input_json, {a, b}, ctx->tol), out);
  });
}

sjk_status sjk_cmd_decompose(sjk_context* ctx, const char* element_json,
                             const char* input_json, char** out) {
  return guarded(ctx, [&] {
    require(input_json && out, "null argument");
    return emit(sjk::commands::decompose(opt_string(element_json), input_json, ctx->tol), out);
  });
}

sjk_status sjk_cmd_jfactor(sjk_context* ctx, const char* index_json, const char* rep,
                           const char* element_json, const char* input_json, char** out) {
  return guarded(ctx, [&] {
    require(rep && input_json && out, "null argument");
    return emit(sjk::commands::jfactor(opt_string(index_json), rep, opt_string(element_json),
                                       input_json, ctx->tol),
                out);
  });
}

sjk_status sjk_cmd_verify(sjk_context* ctx, const sjk_verify_options* opts, char** out) {
  return guarded(ctx, [&] {
    require(opts && opts->suite && out, "null argument");
    sjk::VerifyOptions o;
    o.suite = opts->suite;
    o.g = opts->g;
    o.h = opts->h;
    o.trials = opts->trials;
    o.seed = opts->seed;
    if (opts->tol > 0.0) o.tol = opts->tol;
    o.threads = opts->threads;
    const sjk::commands::VerifyResult r = sjk::commands::verify(o);
    *out = copy_string(r.json);
    if (!r.passed) {
      ctx->last_error = "verification failed";
      return SJK_VERIFY_FAILED;
    }
    return SJK_OK;
  });
}

}  // extern "C"
