#include "sjk/json_io.hpp"

#include <cmath>

namespace sjk::json_io {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

Json number(double x) {
  if (x == 0.0) return 0;  // also folds −0
  if (std::isfinite(x) && std::trunc(x) == x && std::abs(x) < 9007199254740992.0) {
    return static_cast<std::int64_t>(x);
  }
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json complex_value(cplx z) { return Json::array({number(z.real()), number(z.imag())}); }

namespace {

double to_double(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": expected a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": non-finite entry");
  }
  return x;
}

template <class Entry>
auto to_matrix(const Json& j, const char* what, Entry entry) {
  using Scalar = decltype(entry(j));
  if (!j.is_array()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + ": expected an array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  for (const Json& row : j) {
    if (!row.is_array()) {
      throw Error(ErrorKind::invalid_argument, std::string(what) + ": rows must be arrays");
    }
    if (cols < 0) cols = static_cast<Eigen::Index>(row.size());
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::invalid_argument, std::string(what) + ": ragged matrix");
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows, std::max<Eigen::Index>(cols, 0));
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = entry(j[r][c]);
  return m;
}

}  // namespace

cplx to_complex_value(const Json& j, const char* what) {
  if (j.is_number()) return {to_double(j, what), 0.0};
  if (j.is_array() && j.size() == 2) return {to_double(j[0], what), to_double(j[1], what)};
  throw Error(ErrorKind::invalid_argument,
              std::string(what) + ": complex entries are [re, im] pairs");
}

Json complex_matrix(const CMat& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_value(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json real_matrix(const RMat& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(number(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

CMat to_complex_matrix(const Json& j, const char* what) {
  return to_matrix(j, what, [what](const Json& e) { return to_complex_value(e, what); });
}

RMat to_real_matrix(const Json& j, const char* what) {
  return to_matrix(j, what, [what](const Json& e) {
    const cplx z = to_complex_value(e, what);
    if (z.imag() != 0.0) {
      throw Error(ErrorKind::invalid_argument, std::string(what) + ": expected real entries");
    }
    return z.real();
  });
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw Error(ErrorKind::invalid_argument, "expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorKind::invalid_argument, std::string("missing field '") + key + "'");
  }
  return *it;
}

namespace {

CMat optional_matrix(const Json& obj, const char* key, Eigen::Index rows, Eigen::Index cols) {
  if (obj.is_object() && obj.contains(key)) return to_complex_matrix(obj.at(key), key);
  return CMat::Zero(rows, cols);
}

}  // namespace

Json to_json(const SiegelPoint& p) { return {{"omega", complex_matrix(p.omega())}}; }
Json to_json(const DiskPoint& p) { return {{"w", complex_matrix(p.w())}}; }
Json to_json(const SiegelJacobiPoint& p) {
  return {{"omega", complex_matrix(p.base.omega())}, {"z", complex_matrix(p.z)}};
}
Json to_json(const DiskJacobiPoint& p) {
  return {{"w", complex_matrix(p.base.w())}, {"eta", complex_matrix(p.eta)}};
}
Json to_json(const SymplecticMatrix& m) { return {{"m", real_matrix(m.matrix())}}; }
Json to_json(const HeisenbergElement& a) {
  return {{"lambda", real_matrix(a.lambda)},
          {"mu", real_matrix(a.mu)},
          {"kappa", real_matrix(a.kappa)}};
}
Json to_json(const JacobiElement& a) {
  return {{"m", real_matrix(a.m.matrix())},
          {"lambda", real_matrix(a.hs.lambda)},
          {"mu", real_matrix(a.hs.mu)},
          {"kappa", real_matrix(a.hs.kappa)}};
}
Json to_json(const GStarElement& a) {
  return {{"p", complex_matrix(a.p)}, {"q", complex_matrix(a.q)}};
}
Json to_json(const GStarJacobiElement& a) {
  return {{"p", complex_matrix(a.gs.p)},
          {"q", complex_matrix(a.gs.q)},
          {"xi", complex_matrix(a.hc.xi)},
          {"eta", complex_matrix(a.hc.eta)},
          {"zeta", complex_matrix(a.hc.zeta)}};
}
Json to_json(const TangentVector& v, bool disk) {
  Json out{{disk ? "d_w" : "d_omega", complex_matrix(v.d_base)}};
  if (v.d_fiber.rows() > 0) out[disk ? "d_eta" : "d_z"] = complex_matrix(v.d_fiber);
  return out;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::object();
  for (const auto& [name, s] : r.checks) {
    checks[name] = {{"count", s.count},
                    {"max_residual", number(s.max_residual)},
                    {"tolerance", number(s.tolerance)}};
  }
  Json failures = Json::array();
  for (const TrialFailure& f : r.failures) {
    Json e{{"trial", f.trial}, {"seed", f.seed}, {"check", f.check}};
    e["residual"] = f.residual ? number(*f.residual) : Json(nullptr);
    if (!f.error.empty()) e["error"] = f.error;
    failures.push_back(std::move(e));
  }
  return {{"suite", r.suite},
          {"g", r.g},
          {"h", r.h},
          {"trials", r.trials},
          {"seed", r.seed},
          {"passed", r.passed},
          {"max_residual", number(r.max_residual)},
          {"tolerance", number(r.tolerance)},
          {"checks", std::move(checks)},
          {"failure_count", r.failure_count},
          {"failures", std::move(failures)},
          {"min_pd_margin", r.min_pd_margin ? number(*r.min_pd_margin) : Json(nullptr)},
          {"domain_violations", r.domain_violations}};
}

Json to_json(const VerifyReport& r) {
  if (r.suites.size() == 1 && r.suite != "all") return to_json(r.suites.front());
  Json suites = Json::array();
  for (const SuiteReport& s : r.suites) suites.push_back(to_json(s));
  const SuiteReport& first = r.suites.front();
  return {{"suite", r.suite},
          {"g", first.g},
          {"h", first.h},
          {"trials", first.trials},
          {"seed", first.seed},
          {"passed", r.passed},
          {"suites", std::move(suites)}};
}

SiegelPoint siegel_point(const Json& j, const Tolerance& tol) {
  return SiegelPoint::make(to_complex_matrix(field(j, "omega"), "omega"), tol);
}

DiskPoint disk_point(const Json& j, const Tolerance& tol) {
  return DiskPoint::make(to_complex_matrix(field(j, "w"), "w"), tol);
}

SiegelJacobiPoint siegel_jacobi_point(const Json& j, const Tolerance& tol) {
  return SiegelJacobiPoint::make(to_complex_matrix(field(j, "omega"), "omega"),
                                 to_complex_matrix(field(j, "z"), "z"), tol);
}

DiskJacobiPoint disk_jacobi_point(const Json& j, const Tolerance& tol) {
  return DiskJacobiPoint::make(to_complex_matrix(field(j, "w"), "w"),
                               to_complex_matrix(field(j, "eta"), "eta"), tol);
}

SymplecticMatrix symplectic(const Json& j, const Tolerance& tol) {
  return SymplecticMatrix::from_matrix(to_real_matrix(field(j, "m"), "m"), tol);
}

HeisenbergElement heisenberg(const Json& j, const Tolerance& tol) {
  HeisenbergElement a{to_real_matrix(field(j, "lambda"), "lambda"),
                      to_real_matrix(field(j, "mu"), "mu"),
                      to_real_matrix(field(j, "kappa"), "kappa")};
  a.validate(tol);
  return a;
}

JacobiElement jacobi(const Json& j, const Tolerance& tol) {
  JacobiElement a{symplectic(j, tol), heisenberg(j, tol)};
  if (a.hs.g() != a.m.degree()) {
    throw Error(ErrorKind::dimension, "Heisenberg part does not match the symplectic degree");
  }
  return a;
}

GStarElement gstar(const Json& j, const Tolerance& tol) {
  GStarElement a{to_complex_matrix(field(j, "p"), "p"), to_complex_matrix(field(j, "q"), "q")};
  a.validate(tol);
  return a;
}

GStarJacobiElement gstarj(const Json& j, int h_default, const Tolerance& tol) {
  const GStarElement gs = gstar(j, tol);
  const int g = gs.degree();
  int h = h_default;
  if (j.contains("xi")) h = static_cast<int>(field(j, "xi").size());
  GStarJacobiElement a{gs,
                       {optional_matrix(j, "xi", h, g), optional_matrix(j, "eta", h, g),
                        optional_matrix(j, "zeta", h, h)}};
  a.validate(tol);
  return a;
}

IndexMatrix index_matrix(const Json& j, const Tolerance& tol) {
  IndexMatrix idx;
  if (j.is_object()) {
    idx.m = to_real_matrix(field(j, "m"), "index matrix");
    if (j.contains("half_integral")) idx.half_integral = j.at("half_integral").get<bool>();
    if (j.contains("psd")) idx.psd = j.at("psd").get<bool>();
  } else {
    idx.m = to_real_matrix(j, "index matrix");
  }
  idx.validate(tol);
  return idx;
}

}  // namespace sjk::json_io
