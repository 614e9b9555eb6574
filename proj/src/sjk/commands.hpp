#pragma once

// Command layer shared by the C API and the CLI: each command takes string
// arguments, returns compact JSON text and reports failures as sjk::Error.

#include "sjk/geometry.hpp"
#include "sjk/verify.hpp"

#include <string>

namespace sjk::commands {

/// Maps: cayley, cayley-inv, partial-cayley, partial-cayley-inv, act-siegel,
/// act-disk, act-jacobi, act-jacobi-disk. Actions need element_json.
std::string transform(const std::string& map, const std::string& input_json,
                      const std::string& element_json, const Tolerance& tol);

/// Kinds: sp, heisenberg, jacobi, gstar, gstarj, kstarj, siegel, disk,
/// siegel-jacobi, disk-jacobi.
std::string sample(const std::string& kind, int g, int h, std::uint64_t seed, double scale);

/// Spaces: siegel, disk, siegel-jacobi, disk-jacobi (numerical pullback).
/// The input carries the point and its tangent (d_omega/d_z or d_w/d_eta).
std::string metric(const std::string& space, const std::string& input_json,
                   const MetricParams& params, const Tolerance& tol);

/// Spaces: siegel, disk, siegel-jacobi.
std::string laplacian(const std::string& space, const std::string& field,
                      const std::string& input_json, const MetricParams& params,
                      const Tolerance& tol);

/// Harish-Chandra components of a G_*^J element at a disk point.
std::string decompose(const std::string& element_json, const std::string& input_json,
                      const Tolerance& tol);

std::string jfactor(const std::string& index_json, const std::string& rep,
                    const std::string& element_json, const std::string& input_json,
                    const Tolerance& tol);

struct VerifyResult {
  std::string json;
  bool passed = false;
};

VerifyResult verify(const VerifyOptions& opts);

}  // namespace sjk::commands
