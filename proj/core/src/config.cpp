#include "shadowcalc/config.hpp"

#include <cmath>
#include <string>

#include "shadowcalc/error.hpp"

namespace shadowcalc {

std::string_view theorem_name(Theorem t) noexcept {
  switch (t) {
    case Theorem::kCauchy: return "cauchy";
    case Theorem::kMoment: return "moment";
    case Theorem::kLemmaProjection: return "lemma-projection";
    case Theorem::kLemmaLinearity: return "lemma-linearity";
    case Theorem::kMixedVolume: return "mixed-volume";
    case Theorem::kSurfaceEq2: return "surface-eq2";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : kAllTheorems) {
    if (theorem_name(t) == name) return t;
  }
  fail(ErrorCode::kInvalidArgument, "unknown theorem '" + std::string(name) + "'");
}

RuleSpec Config::rule_for(int dim) const {
  RuleSpec spec;
  if (auto it = quadrature.find(dim); it != quadrature.end()) {
    spec = it->second;
  } else if (dim == 2) {
    spec = {RuleKind::kAngularTrapezoid, 4096, std::nullopt};
  } else if (dim == 3) {
    spec = {RuleKind::kFibonacciSphere, 10000, std::nullopt};
  } else {
    spec = {RuleKind::kMonteCarlo, 100000, std::nullopt};
  }
  if (spec.kind == RuleKind::kMonteCarlo && !spec.seed) spec.seed = seed;
  return spec;
}

QuadratureRule Config::make_rule_for(int dim) const {
  const RuleSpec spec = rule_for(dim);
  return make_rule(dim, spec.kind, spec.size, spec.seed);
}

Tolerance Config::tolerance_for(Theorem t, int dim) const {
  if (auto it = tolerances.find(t); it != tolerances.end()) return Tolerance::relative(it->second);
  switch (t) {
    case Theorem::kCauchy:
    case Theorem::kMoment:
      if (rule_for(dim).kind == RuleKind::kMonteCarlo) return Tolerance::sigmas(4.0);
      return Tolerance::relative(dim == 2 ? 1e-6 : 1e-3);
    case Theorem::kSurfaceEq2:
      if (dim == 2) return Tolerance::relative(1e-4);
      if (dim == 3) return Tolerance::relative(1e-2);
      return Tolerance::inradius_deficit();
    case Theorem::kLemmaProjection:
    case Theorem::kLemmaLinearity:
    case Theorem::kMixedVolume:
      return Tolerance::relative(1e-8);
  }
  return Tolerance::relative(1e-8);
}

int Config::ball_level_for(int dim) const {
  if (ball_level) return *ball_level;
  return dim <= 3 ? 4 : 2;
}

void Config::validate() const {
  for (const auto& [t, v] : tolerances) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(ErrorCode::kInvalidArgument,
           "tolerance for " + std::string(theorem_name(t)) + " must be positive");
    }
  }
  for (const auto& [dim, spec] : quadrature) {
    if (dim < 2 || dim > kMaxDim) {
      fail(ErrorCode::kDimensionOutOfRange, "quadrature entry for dimension " + std::to_string(dim));
    }
    if (spec.kind == RuleKind::kMonteCarlo && !spec.seed && !seed) {
      fail(ErrorCode::kMissingSeed,
           "monte-carlo rule for dimension " + std::to_string(dim) + " has no seed");
    }
  }
  for (double e : eps_ladder) {
    if (!(e > 0.0) || !std::isfinite(e)) fail(ErrorCode::kInvalidArgument, "eps_ladder entries must be positive");
  }
  if (ball_level && *ball_level < 0) fail(ErrorCode::kInvalidArgument, "ball_level must be >= 0");
  if (workers < 1) fail(ErrorCode::kInvalidArgument, "workers must be >= 1");
  if (lemma_samples < 1) fail(ErrorCode::kInvalidArgument, "lemma_samples must be >= 1");
}

}  // namespace shadowcalc
