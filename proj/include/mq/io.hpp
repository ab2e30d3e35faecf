#pragma once

// Serialization: catalog and report JSON, the pairing CSV, patch dual graphs in
// DOT, and the divisor expressions accepted on the command line.

#include "mq/s5_cone.hpp"
#include "mq/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mq {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Integer when integral and within int64, otherwise the string "p/q".
Json to_json(const Rational& q);
Json to_json(const VectorX<Rational>& v);

/// { "divisors": [...], "curves": [{ "kind", "label" }] }
Json catalog_json();
/// FNV-1a 64 over the compact catalog JSON, as 16 hex digits.
std::string catalog_fingerprint();
/// Adds "tool_version" and "catalog_fingerprint" to an object payload.
Json envelope(Json payload);

/// Header "curve" + divisor texts, one row per catalog symbol.
std::string pairing_matrix_csv();
/// One node per region, one edge per wall with boundary=true|false.
std::string dual_graph_dot(SingularPoint point);

Json verification_json(const VerificationReport& report);
Json rank_report_json(const RankReport& r);
Json gv_json(const GVResult& r, bool families);
Json gw_json(const ProjectedClass& c, const Rational& value);
Json fiber_json(const FiberResult& r);
Json quotient_json();
Json cone_json(bool membership);

/// Divisor expression: a monomial ("x4y" or "D_x4y"), "Dx" .. "Dz", "DD", or
/// "local:x@xyz" (commas allowed in the point). Throws LabelError.
DivisorCombination parse_divisor_spec(std::string_view spec);

}  // namespace mq
