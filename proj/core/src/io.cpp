#include "shadowcalc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shadowcalc/error.hpp"

namespace shadowcalc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& detail) { fail(ErrorCode::kParseError, detail); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int parse_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::uint64_t parse_seed(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  parse_fail("seed must be a non-negative integer");
}

double parse_number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(std::string(what) + " must be finite");
  return v;
}

void reject_unknown(const Json& j, std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) parse_fail("unknown config key \"" + key + "\"");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_quantity(const Quantity& q) {
  if (const double* d = std::get_if<double>(&q)) return format_double(*d);
  const Vec& v = std::get<Vec>(q);
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

Json quantity_json(const Quantity& q) {
  if (const double* d = std::get_if<double>(&q)) return *d;
  return to_json(std::get<Vec>(q));
}

std::string_view tolerance_kind_name(Tolerance::Kind k) {
  switch (k) {
    case Tolerance::Kind::kRelative: return "relative";
    case Tolerance::Kind::kSigmas: return "sigmas";
    case Tolerance::Kind::kInradiusDeficit: return "inradius-deficit";
  }
  return "unknown";
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

Vec parse_vec(const Json& j, int expected_dim) {
  if (!j.is_array()) parse_fail("coordinates must be an array");
  if (j.size() > static_cast<std::size_t>(kMaxDim)) {
    fail(ErrorCode::kDimensionOutOfRange, "at most 5 coordinates are supported");
  }
  if (expected_dim >= 0 && static_cast<int>(j.size()) != expected_dim) {
    fail(ErrorCode::kDimensionMismatch, "expected " + std::to_string(expected_dim) +
                                            " coordinates, got " + std::to_string(j.size()));
  }
  Vec v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = parse_number(j[i], "coordinate");
  return v;
}

Vec parse_vec_list(const std::string& text) {
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      parse_fail("bad coordinate \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      parse_fail("bad coordinate \"" + item + "\"");
    }
    arr.push_back(v);
  }
  if (arr.empty()) parse_fail("empty coordinate list");
  return parse_vec(arr);
}

BodySpec parse_body_spec(const Json& j, std::string label) {
  const int dim = parse_int(require(j, "dim"), "dim");
  if (dim < 2 || dim > kMaxDim) {
    fail(ErrorCode::kDimensionOutOfRange, "dim " + std::to_string(dim) + " outside 2..5");
  }
  const Json& verts = require(j, "vertices");
  if (!verts.is_array()) parse_fail("vertices must be an array");
  BodySpec spec{std::move(label), {}};
  for (const Json& v : verts) spec.points.push_back(parse_vec(v, dim));
  return spec;
}

Polytope parse_polytope(const Json& j) { return hull(parse_body_spec(j).points); }

Body parse_body(const Json& j) {
  if (!j.is_object()) parse_fail("body must be an object");
  if (j.contains("ball")) {
    const Json& b = j.at("ball");
    return ball_approx(parse_int(require(b, "dim"), "ball.dim"),
                       parse_int(require(b, "level"), "ball.level"));
  }
  if (j.contains("a") || j.contains("b")) {
    const Vec a = parse_vec(require(j, "a"));
    return Segment(a, parse_vec(require(j, "b"), a.dim()));
  }
  return parse_polytope(j);
}

Config parse_config(const Json& j) {
  if (!j.is_object()) parse_fail("config must be an object");
  reject_unknown(j, {"quadrature", "tolerances", "seed", "output", "eps_ladder", "ball_level",
                     "workers", "timings", "lemma_samples"});
  Config c;
  if (j.contains("quadrature")) {
    const Json& q = j.at("quadrature");
    if (!q.is_object()) parse_fail("quadrature must be an object keyed by dimension");
    for (const auto& [key, spec_json] : q.items()) {
      int dim = 0;
      try {
        std::size_t used = 0;
        dim = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        parse_fail("quadrature key \"" + key + "\" is not a dimension");
      }
      RuleSpec spec;
      const Json& kind = require(spec_json, "kind");
      if (!kind.is_string()) parse_fail("rule kind must be a string");
      spec.kind = parse_rule_kind(kind.get<std::string>());
      spec.size = parse_int(require(spec_json, "size"), "rule size");
      if (spec_json.contains("seed") && !spec_json.at("seed").is_null()) {
        spec.seed = parse_seed(spec_json.at("seed"));
      }
      c.quadrature[dim] = spec;
    }
  }
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) parse_fail("tolerances must be an object keyed by theorem");
    for (const auto& [key, value] : t.items()) {
      c.tolerances[parse_theorem(key)] = parse_number(value, "tolerance");
    }
  }
  if (j.contains("seed") && !j.at("seed").is_null()) c.seed = parse_seed(j.at("seed"));
  if (j.contains("output")) {
    const Json& o = j.at("output");
    const std::string s = o.is_string() ? o.get<std::string>() : std::string();
    if (s == "json") {
      c.output = OutputFormat::kJson;
    } else if (s == "csv") {
      c.output = OutputFormat::kCsv;
    } else if (s == "pretty") {
      c.output = OutputFormat::kPretty;
    } else {
      parse_fail("output must be one of json, csv, pretty");
    }
  }
  if (j.contains("eps_ladder")) {
    const Json& e = j.at("eps_ladder");
    if (!e.is_array()) parse_fail("eps_ladder must be an array");
    for (const Json& x : e) c.eps_ladder.push_back(parse_number(x, "eps_ladder entry"));
  }
  if (j.contains("ball_level")) c.ball_level = parse_int(j.at("ball_level"), "ball_level");
  if (j.contains("workers")) c.workers = parse_int(j.at("workers"), "workers");
  if (j.contains("timings")) {
    if (!j.at("timings").is_boolean()) parse_fail("timings must be a boolean");
    c.timings = j.at("timings").get<bool>();
  }
  if (j.contains("lemma_samples")) c.lemma_samples = parse_int(j.at("lemma_samples"), "lemma_samples");
  return c;
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json to_json(const Polytope& k) {
  Json verts = Json::array();
  for (const Vec& v : k.vertices()) verts.push_back(to_json(v));
  Json facets = Json::array();
  for (const Facet& f : k.facets()) {
    facets.push_back({{"vertices", f.vertex_ids}, {"normal", to_json(f.normal)}, {"offset", f.offset}});
  }
  return {{"dim", k.dim()}, {"vertices", verts}, {"facets", facets}};
}

Json to_json(const MixedVolumeTable& table) {
  Json rows = Json::array();
  for (const auto& [multiset, value] : table.coefficients) {
    rows.push_back({{"multiset", multiset}, {"value", value}});
  }
  return {{"bodies", table.bodies},
          {"coefficients", rows},
          {"fit_residual", table.fit_residual},
          {"condition_number", table.condition_number}};
}

Json shadow_json(const Polytope& k, const Direction& d) {
  const double area = shadow_area(k, d);
  const double half_sum = shadow_area_half_sum(k, d);
  const IlluminatedBoundary ib = illuminated(k, d);
  return {{"direction", to_json(d.u())},
          {"area", area},
          {"method_agreement", relative_error(area, half_sum)},
          {"illuminated",
           {{"facets", ib.facet_ids},
            {"weighted_moment", to_json(ib.weighted_moment.first_moment)},
            {"tangent_count", ib.tangent_count}}}};
}

Json to_json(const VerificationReport& r, bool timings) {
  Json out = {{"theorem", theorem_name(r.theorem)},
              {"dim", r.dim},
              {"body", r.body},
              {"label", r.label},
              {"lhs", quantity_json(r.lhs)},
              {"rhs", quantity_json(r.rhs)},
              {"abs_error", r.abs_error},
              {"rel_error", r.rel_error},
              {"tolerance", r.tolerance},
              {"tolerance_kind", tolerance_kind_name(r.requested.kind)}};
  if (r.requested.kind == Tolerance::Kind::kSigmas) out["sigmas"] = r.requested.value;
  if (r.rule) {
    Json rule = {{"kind", rule_kind_name(r.rule->kind)}, {"size", r.rule->size}};
    if (r.rule->seed) rule["seed"] = *r.rule->seed;
    out["rule"] = rule;
  }
  if (r.standard_error) out["standard_error"] = *r.standard_error;
  if (timings) out["runtime_ms"] = r.runtime_ms;
  out["pass"] = r.pass;
  if (r.error_code) out["error"] = {{"code", *r.error_code}, {"detail", r.error_detail}};
  out["details"] = r.details;
  return out;
}

Json reports_json(std::span<const VerificationReport> reports, bool timings) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r, timings));
  return out;
}

std::string reports_csv(std::span<const VerificationReport> reports, bool timings) {
  std::string out = "theorem,dim,body,lhs,rhs,rel_error,nodes,seed,runtime_ms,pass\n";
  for (const auto& r : reports) {
    out += theorem_name(r.theorem);
    out += ',' + std::to_string(r.dim);
    out += ',' + r.body;
    out += ',' + format_quantity(r.lhs);
    out += ',' + format_quantity(r.rhs);
    out += ',' + format_double(r.rel_error);
    out += ',' + (r.rule ? std::to_string(r.rule->size) : std::string());
    out += ',' + (r.rule && r.rule->seed ? std::to_string(*r.rule->seed) : std::string());
    out += ',' + std::to_string(timings ? r.runtime_ms : 0);
    out += r.pass ? ",true\n" : ",false\n";
  }
  return out;
}

std::string reports_pretty(std::span<const VerificationReport> reports) {
  std::string out;
  char buf[256];
  for (const auto& r : reports) {
    const std::string name = r.label.empty() ? r.body : r.label;
    if (r.error_code) {
      std::snprintf(buf, sizeof buf, "ERROR %-16s n=%d %s: %s (%s)\n",
                    std::string(theorem_name(r.theorem)).c_str(), r.dim, name.c_str(),
                    r.error_code->c_str(), r.error_detail.c_str());
    } else {
      std::snprintf(buf, sizeof buf, "%s  %-16s n=%d %s rel_error=%.3e tol=%.3e\n",
                    r.pass ? "PASS" : "FAIL", std::string(theorem_name(r.theorem)).c_str(), r.dim,
                    name.c_str(), r.rel_error, r.tolerance);
    }
    out += buf;
  }
  return out;
}

}  // namespace shadowcalc::io
