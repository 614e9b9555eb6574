#include "sjk/commands.hpp"

#include "sjk/json_io.hpp"

#include <cmath>

namespace sjk::commands {

namespace {

using json_io::Json;

Json element_object(const std::string& element_json, const std::string& map) {
  if (element_json.empty()) {
    throw Error(ErrorKind::invalid_argument, "map '" + map + "' needs --element");
  }
  return json_io::parse(element_json);
}

// nlohmann type errors (e.g. a string where a bool belongs) are input errors.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("bad JSON input: ") + e.what());
  }
}

}  // namespace

std::string transform(const std::string& map, const std::string& input_json,
                      const std::string& element_json, const Tolerance& tol) {
  return guarded([&] {
    const Json in = json_io::parse(input_json);
    Json out;
    if (map == "cayley") {
      out = json_io::to_json(cayley(json_io::disk_point(in, tol), tol));
    } else if (map == "cayley-inv") {
      out = json_io::to_json(cayley_inv(json_io::siegel_point(in, tol), tol));
    } else if (map == "partial-cayley") {
      out = json_io::to_json(partial_cayley(json_io::disk_jacobi_point(in, tol), tol));
    } else if (map == "partial-cayley-inv") {
      out = json_io::to_json(partial_cayley_inv(json_io::siegel_jacobi_point(in, tol), tol));
    } else if (map == "act-siegel") {
      const Json el = element_object(element_json, map);
      out = json_io::to_json(
          act_siegel(json_io::symplectic(el, tol), json_io::siegel_point(in, tol), tol));
    } else if (map == "act-disk") {
      const Json el = element_object(element_json, map);
      out = json_io::to_json(act_disk(json_io::gstar(el, tol), json_io::disk_point(in, tol), tol));
    } else if (map == "act-jacobi") {
      const Json el = element_object(element_json, map);
      out = json_io::to_json(
          act_jacobi(json_io::jacobi(el, tol), json_io::siegel_jacobi_point(in, tol), tol));
    } else if (map == "act-jacobi-disk") {
      const Json el = element_object(element_json, map);
      const DiskJacobiPoint p = json_io::disk_jacobi_point(in, tol);
      out = json_io::to_json(act_jacobi_disk(json_io::gstarj(el, p.h(), tol), p, tol));
    } else {
      throw Error(ErrorKind::invalid_argument, "unknown map '" + map + "'");
    }
    return json_io::dump(out);
  });
}

std::string sample(const std::string& kind, int g, int h, std::uint64_t seed, double scale) {
  if (g < 1 || h < 1) throw Error(ErrorKind::invalid_argument, "g and h must be positive");
  if (!(scale > 0.0 && std::isfinite(scale))) {
    throw Error(ErrorKind::invalid_argument, "scale must be positive");
  }
  static const std::pair<const char*, ElementKind> elements[] = {
      {"sp", ElementKind::sp},         {"heisenberg", ElementKind::heisenberg},
      {"jacobi", ElementKind::jacobi}, {"gstar", ElementKind::gstar},
      {"gstarj", ElementKind::gstarj}, {"kstarj", ElementKind::kstarj}};
  static const std::pair<const char*, PointKind> points[] = {
      {"siegel", PointKind::siegel},
      {"disk", PointKind::disk},
      {"siegel-jacobi", PointKind::siegel_jacobi},
      {"disk-jacobi", PointKind::disk_jacobi}};
  for (const auto& [name, k] : elements) {
    if (kind == name) {
      return std::visit([](const auto& e) { return json_io::dump(json_io::to_json(e)); },
                        sample_element(k, g, h, seed, scale));
    }
  }
  for (const auto& [name, k] : points) {
    if (kind == name) {
      return std::visit([](const auto& p) { return json_io::dump(json_io::to_json(p)); },
                        sample_point(k, g, h, seed, scale));
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown kind '" + kind + "'");
}

namespace {

TangentVector tangent(const Json& in, const char* base_key, const char* fiber_key, int g,
                      int h) {
  TangentVector v{json_io::to_complex_matrix(json_io::field(in, base_key), base_key),
                  CMat(0, g)};
  if (fiber_key && in.contains(fiber_key)) {
    v.d_fiber = json_io::to_complex_matrix(in.at(fiber_key), fiber_key);
  } else if (fiber_key) {
    v.d_fiber = CMat::Zero(h, g);
  }
  return v;
}

Json value_object(double v) { return Json{{"value", json_io::number(v)}}; }

}  // namespace

std::string metric(const std::string& space, const std::string& input_json,
                   const MetricParams& params, const Tolerance& tol) {
  return guarded([&] {
    const Json in = json_io::parse(input_json);
    double value = 0.0;
    if (space == "siegel") {
      const SiegelPoint p = json_io::siegel_point(in, tol);
      value = metric_siegel(p, tangent(in, "d_omega", nullptr, p.degree(), 0), tol);
    } else if (space == "disk") {
      const DiskPoint p = json_io::disk_point(in, tol);
      value = metric_disk(p, tangent(in, "d_w", nullptr, p.degree(), 0), tol);
    } else if (space == "siegel-jacobi") {
      const SiegelJacobiPoint p = json_io::siegel_jacobi_point(in, tol);
      value = metric_sj(params, p, tangent(in, "d_omega", "d_z", p.g(), p.h()), tol);
    } else if (space == "disk-jacobi") {
      const DiskJacobiPoint p = json_io::disk_jacobi_point(in, tol);
      value = pullback_metric_disk(params, p, tangent(in, "d_w", "d_eta", p.g(), p.h()), tol);
    } else {
      throw Error(ErrorKind::invalid_argument, "unknown space '" + space + "'");
    }
    return json_io::dump(value_object(value));
  });
}

std::string laplacian(const std::string& space, const std::string& field,
                      const std::string& input_json, const MetricParams& params,
                      const Tolerance& tol) {
  return guarded([&] {
    const FieldId id = field_from_name(field);
    const Json in = json_io::parse(input_json);
    double value = 0.0;
    if (space == "siegel") {
      value = laplacian_siegel(siegel_field(id), json_io::siegel_point(in, tol), tol);
    } else if (space == "disk") {
      value = laplacian_disk(disk_field(id), json_io::disk_point(in, tol), tol);
    } else if (space == "siegel-jacobi") {
      value = laplacian_sj(params, sj_field(id), json_io::siegel_jacobi_point(in, tol), tol);
    } else {
      throw Error(ErrorKind::invalid_argument,
                  "no Laplacian for space '" + space + "' (use siegel, disk or siegel-jacobi)");
    }
    return json_io::dump(value_object(value));
  });
}

std::string decompose(const std::string& element_json, const std::string& input_json,
                      const Tolerance& tol) {
  return guarded([&] {
    const DiskJacobiPoint p = json_io::disk_jacobi_point(json_io::parse(input_json), tol);
    const GStarJacobiElement a =
        json_io::gstarj(element_object(element_json, "decompose"), p.h(), tol);
    const FullDecomposition d = decompose_full(a, p, tol);
    const JacobiHCFactors& f = d.factors;
    const Json out{
        {"pplus", json_io::to_json(f.pplus)},
        {"k",
         {{"upper", json_io::complex_matrix(f.k.k_p)},
          {"lower", json_io::complex_matrix(f.k.k_lower)},
          {"kappa_star", json_io::complex_matrix(f.k.kappa_star)}}},
        {"pminus",
         {{"w", json_io::complex_matrix(f.pminus.w)},
          {"xi", json_io::complex_matrix(f.pminus.xi)}}},
        {"residuals",
         {{"reconstruction", json_io::number(d.reconstruction_residual)},
          {"kappa_agreement", json_io::number(f.k.kappa_agreement)},
          {"pminus_symmetry", json_io::number(f.pminus.symmetry_defect)}}}};
    return json_io::dump(out);
  });
}

std::string jfactor(const std::string& index_json, const std::string& rep,
                    const std::string& element_json, const std::string& input_json,
                    const Tolerance& tol) {
  return guarded([&] {
    const DiskJacobiPoint p = json_io::disk_jacobi_point(json_io::parse(input_json), tol);
    const GStarJacobiElement a =
        json_io::gstarj(element_object(element_json, "jfactor"), p.h(), tol);
    const IndexMatrix idx = index_json.empty()
                                ? IndexMatrix{RMat::Zero(p.h(), p.h())}
                                : json_io::index_matrix(json_io::parse(index_json), tol);
    const Representation r = Representation::parse(rep);
    const Json out{{"value", json_io::complex_matrix(j_factor(idx, r, a, p, tol))},
                   {"kappa_star", json_io::complex_matrix(summand_a(a, p, tol))},
                   {"rep", r.to_string()}};
    return json_io::dump(out);
  });
}

VerifyResult verify(const VerifyOptions& opts) {
  const VerifyReport r = run_verify(opts);
  return {json_io::dump(json_io::to_json(r)), r.passed};
}

}  // namespace sjk::commands
