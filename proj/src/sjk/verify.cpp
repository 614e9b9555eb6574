#include "sjk/verify.hpp"

#include "sjk/automorphy.hpp"
#include "sjk/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace sjk {

namespace {

constexpr double kAlgebraic = 1e-9;
constexpr double kStrict = 1e-10;
constexpr double kCocycle = 1e-8;
constexpr double kMetric = 1e-5;
constexpr double kLaplacian = 1e-3;
constexpr double kClosed = 1e-4;
constexpr double kVolume = 1e-4;
constexpr double kImagResidual = 1e-4;

struct Check {
  std::string name;
  double residual;
  double tolerance;
};

class Trial {
 public:
  Trial(std::uint64_t seed, const std::optional<double>& override_tol)
      : rng(seed), override_(override_tol) {
    if (override_) lib.algebraic_rel = std::max(lib.algebraic_rel, *override_);
  }

  Rng rng;
  Tolerance lib;
  std::vector<Check> checks;
  double min_margin = std::numeric_limits<double>::infinity();

  void check(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual, override_ ? *override_ : tolerance});
  }

  template <class P>
  const P& note(const P& p) {
    min_margin = std::min(min_margin, detail::margin_of(p));
    return p;
  }

 private:
  std::optional<double> override_;
};

double rel_scalar(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::numeric_limits<double>::min());
}

double rel_floor(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

TangentVector sample_tangent(Rng& rng, int g, int h) {
  return {symmetrize(rng.complex_matrix(g, g, 1.0)),
          h > 0 ? rng.complex_matrix(h, g, 1.0) : CMat(0, g)};
}

// --- suites ----------------------------------------------------------------

void trial_group_axioms(Trial& t, int g, int h) {
  {
    const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
    const JacobiElement b = sample_jacobi(t.rng, g, h, kDefaultScale);
    const JacobiElement c = sample_jacobi(t.rng, g, h, kDefaultScale);
    const JacobiElement e = JacobiElement::identity(g, h);
    const JacobiElement ai = jacobi_inv(a);
    const JacobiElement ab = jacobi_mul(a, b);
    t.check("jacobi:identity",
            std::max(jacobi_distance(jacobi_mul(a, e), a), jacobi_distance(jacobi_mul(e, a), a)),
            kAlgebraic);
    t.check("jacobi:associativity",
            jacobi_distance(jacobi_mul(ab, c), jacobi_mul(a, jacobi_mul(b, c))), kAlgebraic);
    t.check("jacobi:inverse",
            std::max(jacobi_distance(jacobi_mul(a, ai), e), jacobi_distance(jacobi_mul(ai, a), e)),
            kAlgebraic);
    t.check("jacobi:closure", std::max(ab.m.defect(), ab.hs.defect()), kAlgebraic);
  }
  {
    const HeisenbergElement a = sample_heisenberg(t.rng, g, h, kDefaultScale);
    const HeisenbergElement b = sample_heisenberg(t.rng, g, h, kDefaultScale);
    const HeisenbergElement c = sample_heisenberg(t.rng, g, h, kDefaultScale);
    const HeisenbergElement e = HeisenbergElement::identity(g, h);
    const HeisenbergElement ai = heisenberg_inv(a);
    t.check("heisenberg:identity",
            std::max(heisenberg_distance(heisenberg_mul(a, e), a),
                     heisenberg_distance(heisenberg_mul(e, a), a)),
            kAlgebraic);
    t.check("heisenberg:associativity",
            heisenberg_distance(heisenberg_mul(heisenberg_mul(a, b), c),
                                heisenberg_mul(a, heisenberg_mul(b, c))),
            kAlgebraic);
    t.check("heisenberg:inverse",
            std::max(heisenberg_distance(heisenberg_mul(a, ai), e),
                     heisenberg_distance(heisenberg_mul(ai, a), e)),
            kAlgebraic);
    t.check("heisenberg:closure", heisenberg_mul(a, b).defect(), kAlgebraic);
  }
  {
    const GStarJacobiElement a = sample_gstarj(t.rng, g, h, kDefaultScale);
    const GStarJacobiElement b = sample_gstarj(t.rng, g, h, kDefaultScale);
    const GStarJacobiElement c = sample_gstarj(t.rng, g, h, kDefaultScale);
    const GStarJacobiElement e = GStarJacobiElement::identity(g, h);
    const GStarJacobiElement ai = gstarj_inv(a);
    t.check("gstarj:identity",
            std::max(gstarj_distance(gstarj_mul(a, e), a), gstarj_distance(gstarj_mul(e, a), a)),
            kAlgebraic);
    t.check("gstarj:associativity",
            gstarj_distance(gstarj_mul(gstarj_mul(a, b), c), gstarj_mul(a, gstarj_mul(b, c))),
            kAlgebraic);
    t.check("gstarj:inverse",
            std::max(gstarj_distance(gstarj_mul(a, ai), e), gstarj_distance(gstarj_mul(ai, a), e)),
            kAlgebraic);
    t.check("gstarj:closure", gstarj_mul(a, b).defect(), kAlgebraic);
  }
}

void trial_theta_hom(Trial& t, int g, int h) {
  const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
  const JacobiElement b = sample_jacobi(t.rng, g, h, kDefaultScale);
  const JacobiElement ab = jacobi_mul(a, b);
  t.check("theta:homomorphism", gstarj_distance(theta(ab), gstarj_mul(theta(a), theta(b))),
          kAlgebraic);
  t.check("theta:image", theta(a).defect(), kAlgebraic);
  t.check("embed:homomorphism",
          rel_diff(to_complex(embed_sp_gph(ab)),
                   to_complex(embed_sp_gph(a) * embed_sp_gph(b))),
          kAlgebraic);
  t.check("tstar:closed-form", tstar_conjugate_oracle(a, t.lib).closed_form_residual,
          kAlgebraic);
}

void trial_classical_compat(Trial& t, int g, int h) {
  const SymplecticMatrix m = sample_symplectic(t.rng, g, kDefaultScale);
  const DiskPoint w = sample_disk(t.rng, g);
  t.check("classical", check_compatibility_classical(m, w, t.lib), kAlgebraic);
  t.note(act_siegel(m, t.note(cayley(w, t.lib)), t.lib));
  t.note(act_disk(conjugate_by_T(m), w, t.lib));

  // The same identity as the η = 0 slice of the Jacobi compatibility with no
  // Heisenberg translation.
  const JacobiElement a{m, HeisenbergElement::identity(g, h)};
  const DiskJacobiPoint p = DiskJacobiPoint::make(w.w(), CMat::Zero(h, g), t.lib);
  t.check("jacobi-degenerate", check_compatibility(a, p, t.lib), kAlgebraic);
  t.note(act_jacobi_disk(theta(a), p, t.lib));
}

void trial_jacobi_compat(Trial& t, int g, int h) {
  const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
  const DiskJacobiPoint p = sample_disk_jacobi(t.rng, g, h, kDefaultScale);
  t.check("compatibility", check_compatibility(a, p, t.lib), kAlgebraic);
  t.note(act_jacobi(a, t.note(partial_cayley(p, t.lib)), t.lib));
  t.note(act_jacobi_disk(theta(a), p, t.lib));
}

void trial_hc_reconstruct(Trial& t, int g, int h) {
  const GStarJacobiElement a = sample_gstarj(t.rng, g, h, kDefaultScale);
  const DiskJacobiPoint p = sample_disk_jacobi(t.rng, g, h, kDefaultScale);
  const JacobiHCFactors f{pplus_component(a, p, t.lib), kc_component(a, p, t.lib),
                          pminus_component(a, p, t.lib)};
  t.note(f.pplus);
  t.check("reconstruction",
          big_distance(f.reconstruct(), big_mul(to_big(a), embed_disk_point(p))), kAlgebraic);
  t.check("pminus-symmetry", f.pminus.symmetry_defect, kStrict);
  t.check("kappa-agreement", f.k.kappa_agreement, kStrict);
  t.check("pplus-vs-action",
          point_distance(f.pplus, t.note(act_jacobi_disk(a, p, t.lib))), kAlgebraic);
  t.check("gstar-factorization",
          rel_diff(hc_decompose_gstar(a.gs, t.lib).reconstruct(), a.gs.full()), kAlgebraic);
}

void trial_metric_invariance(Trial& t, int g, int h) {
  const Tolerance& tol = t.lib;
  {
    const SymplecticMatrix m = sample_symplectic(t.rng, g, kDefaultScale);
    const SiegelPoint p = sample_siegel(t.rng, g, kDefaultScale);
    const TangentVector v = sample_tangent(t.rng, g, 0);
    const std::function<SiegelPoint(const SiegelPoint&)> act =
        [&](const SiegelPoint& q) { return act_siegel(m, q, tol); };
    const double before = metric_siegel(p, v, tol);
    const double after = metric_siegel(t.note(act(p)), pushforward(act, p, v, tol), tol);
    t.check("siegel", rel_scalar(before, after), kMetric);
  }
  {
    const GStarElement gs = sample_gstar(t.rng, g, kDefaultScale);
    const DiskPoint p = sample_disk(t.rng, g);
    const TangentVector v = sample_tangent(t.rng, g, 0);
    const std::function<DiskPoint(const DiskPoint&)> act =
        [&](const DiskPoint& q) { return act_disk(gs, q, tol); };
    const double before = metric_disk(p, v, tol);
    const double after = metric_disk(t.note(act(p)), pushforward(act, p, v, tol), tol);
    t.check("disk", rel_scalar(before, after), kMetric);
  }
  {
    const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
    const SiegelJacobiPoint p = sample_siegel_jacobi(t.rng, g, h, kDefaultScale);
    const TangentVector v = sample_tangent(t.rng, g, h);
    const SiegelJacobiPoint moved = t.note(act_jacobi(a, p, tol));
    const TangentVector pushed = pushforward_jacobi_action(a, p, v, tol);
    for (const MetricParams prm : {MetricParams{1.0, 1.0}, MetricParams{2.0, 0.5}}) {
      const std::string name = prm.a == 1.0 ? "siegel-jacobi:A=1,B=1" : "siegel-jacobi:A=2,B=0.5";
      t.check(name, rel_scalar(metric_sj(prm, p, v, tol), metric_sj(prm, moved, pushed, tol)),
              kMetric);
    }
  }
  {
    const GStarJacobiElement a = sample_gstarj(t.rng, g, h, kDefaultScale);
    const DiskJacobiPoint p = sample_disk_jacobi(t.rng, g, h, kDefaultScale);
    const TangentVector v = sample_tangent(t.rng, g, h);
    const std::function<DiskJacobiPoint(const DiskJacobiPoint&)> act =
        [&](const DiskJacobiPoint& q) { return act_jacobi_disk(a, q, tol); };
    const MetricParams prm{1.0, 1.0};
    const double before = pullback_metric_disk(prm, p, v, tol);
    const double after =
        pullback_metric_disk(prm, t.note(act(p)), pushforward(act, p, v, tol), tol);
    t.check("disk-jacobi-pullback", rel_scalar(before, after), kMetric);
  }
  {
    const DiskPoint w = sample_disk(t.rng, g);
    const TangentVector v = sample_tangent(t.rng, g, 0);
    const double disk = metric_disk(w, v, tol);
    const double siegel =
        metric_siegel(t.note(cayley(w, tol)), pushforward_cayley(w, v, tol), tol);
    t.check("cayley-isometry", rel_scalar(disk, siegel), kMetric);
  }
}

void trial_laplacian_invariance(Trial& t, int g, int h) {
  const Tolerance& tol = t.lib;
  const SymplecticMatrix m = sample_symplectic(t.rng, g, kDefaultScale);
  const SiegelPoint ps = sample_siegel(t.rng, g, kDefaultScale);
  const GStarElement gs = sample_gstar(t.rng, g, kDefaultScale);
  const DiskPoint pd = sample_disk(t.rng, g);
  const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
  const SiegelJacobiPoint pj = sample_siegel_jacobi(t.rng, g, h, kDefaultScale);
  const MetricParams prm{2.0, 0.5};

  const SiegelPoint ms = t.note(act_siegel(m, ps, tol));
  const DiskPoint md = t.note(act_disk(gs, pd, tol));
  const SiegelJacobiPoint mj = t.note(act_jacobi(a, pj, tol));

  for (FieldId id : kAllFields) {
    const std::string field = field_name(id);
    {
      const ScalarField<SiegelPoint> f = siegel_field(id);
      const ScalarField<SiegelPoint> fa = [&](const SiegelPoint& q) {
        return f(act_siegel(m, q, tol));
      };
      const cplx after = laplacian_siegel_complex(f, ms, tol);
      t.check("siegel:" + field, rel_floor(laplacian_siegel_complex(fa, ps, tol), after),
              kLaplacian);
      t.check("imag:siegel:" + field, std::abs(after.imag()) / std::max(1.0, std::abs(after)),
              kImagResidual);
    }
    {
      const ScalarField<DiskPoint> f = disk_field(id);
      const ScalarField<DiskPoint> fa = [&](const DiskPoint& q) {
        return f(act_disk(gs, q, tol));
      };
      const cplx after = laplacian_disk_complex(f, md, tol);
      t.check("disk:" + field, rel_floor(laplacian_disk_complex(fa, pd, tol), after),
              kLaplacian);
      t.check("imag:disk:" + field, std::abs(after.imag()) / std::max(1.0, std::abs(after)),
              kImagResidual);
    }
    {
      const ScalarField<SiegelJacobiPoint> f = sj_field(id);
      const ScalarField<SiegelJacobiPoint> fa = [&](const SiegelJacobiPoint& q) {
        return f(act_jacobi(a, q, tol));
      };
      const cplx after = laplacian_sj_complex(prm, f, mj, tol);
      t.check("siegel-jacobi:" + field,
              rel_floor(laplacian_sj_complex(prm, fa, pj, tol), after), kLaplacian);
      t.check("imag:siegel-jacobi:" + field,
              std::abs(after.imag()) / std::max(1.0, std::abs(after)), kImagResidual);
    }
  }

  if (g == 1) {
    const double value = laplacian_siegel(siegel_field(FieldId::log_det_y), ps, tol);
    t.check("closed:siegel-log-y", std::abs(value + 1.0), kClosed);
    if (h == 1) {
      const double sj = laplacian_sj(prm, sj_field(FieldId::log_det_y), pj, tol);
      t.check("closed:siegel-jacobi-log-y", std::abs(sj + 1.0 / prm.a) * prm.a, kClosed);
    }
  }
}

void trial_cocycle(Trial& t, int g, int h) {
  const GStarJacobiElement g1 = sample_gstarj(t.rng, g, h, kDefaultScale);
  const GStarJacobiElement g2 = sample_gstarj(t.rng, g, h, kDefaultScale);
  const DiskJacobiPoint p = sample_disk_jacobi(t.rng, g, h, kDefaultScale);
  t.note(act_jacobi_disk(g2, p, t.lib));

  const std::pair<const char*, IndexMatrix> indices[] = {
      {"zero", IndexMatrix{RMat::Zero(h, h), true, true}},
      {"identity", IndexMatrix{RMat::Identity(h, h), true, true}},
      {"half-integral", half_integral_example(h)}};
  bool additive_done = false;
  for (const auto& [label, idx] : indices) {
    for (int k = 0; k <= 2; ++k) {
      const CocycleResiduals r =
          cocycle_residuals(idx, Representation::det_power(k), g1, g2, p, t.lib);
      if (!additive_done) {
        t.check("additive", r.additive, kCocycle);
        additive_done = true;
      }
      t.check("det:" + std::to_string(k) + "/" + label, r.multiplicative, kCocycle);
    }
    t.check(std::string("std/") + label,
            cocycle_residuals(idx, Representation::standard(), g1, g2, p, t.lib)
                .multiplicative,
            kCocycle);
  }
}

void trial_volume_invariance(Trial& t, int g, int h) {
  const JacobiElement a = sample_jacobi(t.rng, g, h, kDefaultScale);
  const SiegelJacobiPoint p = sample_siegel_jacobi(t.rng, g, h, kDefaultScale);
  const std::function<SiegelJacobiPoint(const SiegelJacobiPoint&)> act =
      [&](const SiegelJacobiPoint& q) { return act_jacobi(a, q, t.lib); };
  const double before = volume_density(p);
  const double after = volume_density(t.note(act(p))) * jacobian_determinant(act, p, t.lib);
  t.check("density", rel_scalar(before, after), kVolume);
}

using TrialFn = void (*)(Trial&, int, int);

struct SuiteDef {
  const char* name;
  TrialFn fn;
  double tolerance;
};

constexpr SuiteDef kSuites[] = {
    {"group-axioms", trial_group_axioms, kAlgebraic},
    {"theta-hom", trial_theta_hom, kAlgebraic},
    {"compat-29", trial_classical_compat, kAlgebraic},
    {"compat-37", trial_jacobi_compat, kAlgebraic},
    {"hc-reconstruct", trial_hc_reconstruct, kAlgebraic},
    {"metric-invariance", trial_metric_invariance, kMetric},
    {"laplacian-invariance", trial_laplacian_invariance, kLaplacian},
    {"cocycle", trial_cocycle, kCocycle},
    {"volume-invariance", trial_volume_invariance, kVolume},
};

const SuiteDef& find_suite(const std::string& name) {
  for (const SuiteDef& s : kSuites)
    if (name == s.name) return s;
  throw Error(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
}

struct Outcome {
  std::vector<Check> checks;
  double min_margin = std::numeric_limits<double>::infinity();
  std::optional<std::string> error;
  bool domain_error = false;
};

Outcome run_trial(const SuiteDef& def, std::uint64_t seed, const VerifyOptions& opts) {
  Trial t(seed, opts.tol);
  Outcome out;
  try {
    def.fn(t, opts.g, opts.h);
  } catch (const Error& e) {
    out.error = std::string(to_string(e.kind())) + ": " + e.what();
    out.domain_error = e.kind() == ErrorKind::domain;
  } catch (const std::exception& e) {
    out.error = std::string("internal: ") + e.what();
  }
  out.checks = std::move(t.checks);
  out.min_margin = t.min_margin;
  return out;
}

int resolve_threads(int requested, int trials) {
  int n = requested;
  if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::max(1, std::min(n, trials));
}

}  // namespace

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  for (const char* s : kSuiteNames)
    if (name == s) return true;
  return false;
}

void VerifyOptions::validate() const {
  if (!is_suite_name(suite)) {
    throw Error(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
  }
  if (g < 1 || g > 8 || h < 1 || h > 8) {
    throw Error(ErrorKind::invalid_argument, "g and h must lie in 1..8");
  }
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "trials must be positive");
  if (tol && !(std::isfinite(*tol) && *tol > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "tolerance must be positive and finite");
  }
  if (threads < 0) throw Error(ErrorKind::invalid_argument, "threads must be >= 0");
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
  opts.validate();
  const SuiteDef& def = find_suite(suite);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(opts.trials));

  const int nthreads = resolve_threads(opts.threads, opts.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < opts.trials; i = next.fetch_add(1)) {
      outcomes[i] = run_trial(def, derive_seed(opts.seed, static_cast<std::uint64_t>(i)), opts);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  SuiteReport r;
  r.suite = suite;
  r.g = opts.g;
  r.h = opts.h;
  r.trials = opts.trials;
  r.seed = opts.seed;
  r.tolerance = opts.tol ? *opts.tol : def.tolerance;
  double min_margin = std::numeric_limits<double>::infinity();

  auto add_failure = [&](TrialFailure f) {
    ++r.failure_count;
    if (static_cast<int>(r.failures.size()) < kMaxListedFailures) r.failures.push_back(std::move(f));
  };

  for (int i = 0; i < opts.trials; ++i) {
    const Outcome& o = outcomes[i];
    const std::uint64_t seed = derive_seed(opts.seed, static_cast<std::uint64_t>(i));
    min_margin = std::min(min_margin, o.min_margin);
    for (const Check& c : o.checks) {
      CheckSummary& s = r.checks[c.name];
      ++s.count;
      s.tolerance = c.tolerance;
      // NaN residuals count as failures and poison the maximum.
      const bool ok = c.residual <= c.tolerance;
      if (std::isnan(c.residual) || c.residual > s.max_residual) s.max_residual = c.residual;
      const double scaled = c.residual * (r.tolerance / c.tolerance);
      if (std::isnan(scaled) || scaled > r.max_residual) r.max_residual = scaled;
      if (!ok) add_failure({i, seed, c.name, c.residual, ""});
    }
    if (o.error) {
      if (o.domain_error) ++r.domain_violations;
      add_failure({i, seed, "error", std::nullopt, *o.error});
    }
  }
  // Suites that produce no points (pure group identities) report no margin.
  if (std::isfinite(min_margin)) {
    r.min_pd_margin = min_margin;
    if (!(min_margin > 0.0)) ++r.domain_violations;
  }
  r.passed = r.failure_count == 0 && r.domain_violations == 0;
  return r;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  opts.validate();
  VerifyReport out;
  out.suite = opts.suite;
  if (opts.suite == "all") {
    for (const SuiteDef& s : kSuites) out.suites.push_back(run_suite(s.name, opts));
  } else {
    out.suites.push_back(run_suite(opts.suite, opts));
  }
  out.passed = std::all_of(out.suites.begin(), out.suites.end(),
                           [](const SuiteReport& s) { return s.passed; });
  return out;
}

}  // namespace sjk
