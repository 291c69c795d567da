#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <span>
#include <string>

#include "shadowcalc/config.hpp"
#include "shadowcalc/minkowski.hpp"
#include "shadowcalc/shadow.hpp"
#include "shadowcalc/verify.hpp"

namespace shadowcalc::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::filesystem::path& path);

/// [x1, ..., xn] with every entry a finite number. expected_dim < 0 accepts
/// any length.
Vec parse_vec(const Json& j, int expected_dim = -1);

/// "1,1,1" style comma-separated coordinates.
Vec parse_vec_list(const std::string& text);

/// {"dim": n, "vertices": [[...], ...]} without taking the hull.
BodySpec parse_body_spec(const Json& j, std::string label = {});
Polytope parse_polytope(const Json& j);

/// Polytope JSON, {"a": [...], "b": [...]} for a segment, or
/// {"ball": {"dim": n, "level": L}}.
Body parse_body(const Json& j);

/// Parses a config object; unknown keys are rejected. Does not validate().
Config parse_config(const Json& j);

Json to_json(const Vec& v);
/// {"dim", "vertices", "facets": [{"vertices", "normal", "offset"}]}.
Json to_json(const Polytope& k);
Json to_json(const MixedVolumeTable& table);
/// {"direction", "area", "method_agreement", "illuminated": {...}}.
Json shadow_json(const Polytope& k, const Direction& d);

/// runtime_ms is emitted only when `timings` is set.
Json to_json(const VerificationReport& r, bool timings = false);
Json reports_json(std::span<const VerificationReport> reports, bool timings = false);

/// Header plus one row per report with the fixed columns
/// theorem,dim,body,lhs,rhs,rel_error,nodes,seed,runtime_ms,pass.
/// Vector quantities are written as semicolon-separated components;
/// runtime_ms is 0 unless `timings` is set.
std::string reports_csv(std::span<const VerificationReport> reports, bool timings = false);

/// One human-readable line per report.
std::string reports_pretty(std::span<const VerificationReport> reports);

}  // namespace shadowcalc::io
