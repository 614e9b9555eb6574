#pragma once

// JSON encoding of matrices, points and group elements. Complex entries are
// [re, im] pairs (a bare number is accepted as a real entry on input), real
// matrices are nested number arrays, points and elements are named objects.
// Integral values are emitted as JSON integers.

#include "sjk/automorphy.hpp"
#include "sjk/geometry.hpp"
#include "sjk/verify.hpp"

#include <json.hpp>

namespace sjk::json_io {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to invalid_argument.
Json parse(const std::string& text);
std::string dump(const Json& j);

Json number(double x);
Json complex_value(cplx z);
cplx to_complex_value(const Json& j, const char* what);

Json complex_matrix(const CMat& m);
Json real_matrix(const RMat& m);
/// Rectangular, finite; rows × cols taken from the data.
CMat to_complex_matrix(const Json& j, const char* what);
/// Accepts real numbers or [re, 0] pairs.
RMat to_real_matrix(const Json& j, const char* what);

const Json& field(const Json& obj, const char* key);

Json to_json(const SiegelPoint& p);
Json to_json(const DiskPoint& p);
Json to_json(const SiegelJacobiPoint& p);
Json to_json(const DiskJacobiPoint& p);
Json to_json(const SymplecticMatrix& m);
Json to_json(const HeisenbergElement& a);
Json to_json(const JacobiElement& a);
Json to_json(const GStarElement& a);
Json to_json(const GStarJacobiElement& a);
Json to_json(const TangentVector& v, bool disk);
Json to_json(const SuiteReport& r);
Json to_json(const VerifyReport& r);

SiegelPoint siegel_point(const Json& j, const Tolerance& tol);
DiskPoint disk_point(const Json& j, const Tolerance& tol);
SiegelJacobiPoint siegel_jacobi_point(const Json& j, const Tolerance& tol);
DiskJacobiPoint disk_jacobi_point(const Json& j, const Tolerance& tol);
SymplecticMatrix symplectic(const Json& j, const Tolerance& tol);
HeisenbergElement heisenberg(const Json& j, const Tolerance& tol);
JacobiElement jacobi(const Json& j, const Tolerance& tol);
GStarElement gstar(const Json& j, const Tolerance& tol);
/// Missing xi/eta/zeta default to zero with h taken from h_default.
GStarJacobiElement gstarj(const Json& j, int h_default, const Tolerance& tol);
/// A bare matrix or {"m": ..., "half_integral": bool, "psd": bool}.
IndexMatrix index_matrix(const Json& j, const Tolerance& tol);

}  // namespace sjk::json_io
