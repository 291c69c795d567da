#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "shadowcalc/quadrature.hpp"

namespace shadowcalc {

/// Identities the harness certifies, in report order.
enum class Theorem {
  kCauchy,           // surface area = mean projection area / kappa(n-1)
  kMoment,           // boundary moment = integral of illuminated moments / kappa(n-1)
  kLemmaProjection,  // vol(K + e[0,u]) - vol(K) = e * shadow(K, u)
  kLemmaLinearity,   // D over a[0,u] + b[0,v] = a D_u + b D_v
  kMixedVolume,      // volume polynomial fit, diagonal = volumes
  kSurfaceEq2,       // surface area as the derivative along the ball
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::kCauchy,         Theorem::kMoment,      Theorem::kLemmaProjection,
    Theorem::kLemmaLinearity, Theorem::kMixedVolume, Theorem::kSurfaceEq2,
};

std::string_view theorem_name(Theorem t) noexcept;
Theorem parse_theorem(std::string_view name);

/// How a report's pass threshold is set.
struct Tolerance {
  enum class Kind {
    kRelative,         // rel_error <= value
    kSigmas,           // |lhs - rhs| <= value * reported standard error
    kInradiusDeficit,  // rel_error <= 1 - inradius of the ball approximant
  };
  Kind kind = Kind::kRelative;
  double value = 0.0;

  static Tolerance relative(double v) { return {Kind::kRelative, v}; }
  static Tolerance sigmas(double v) { return {Kind::kSigmas, v}; }
  static Tolerance inradius_deficit() { return {Kind::kInradiusDeficit, 1.0}; }
};

struct RuleSpec {
  RuleKind kind = RuleKind::kMonteCarlo;
  int size = 0;
  std::optional<std::uint64_t> seed;
};

enum class OutputFormat { kJson, kCsv, kPretty };

/// Harness configuration. Everything has a default, so an empty config runs.
struct Config {
  std::map<int, RuleSpec> quadrature;    // per-dimension rule override
  std::map<Theorem, double> tolerances;  // relative-tolerance overrides
  std::optional<std::uint64_t> seed;
  OutputFormat output = OutputFormat::kJson;
  std::vector<double> eps_ladder;        // empty: derivative default ladder
  std::optional<int> ball_level;         // empty: 4 for n <= 3, 2 above
  int workers = 1;
  bool timings = false;                  // emit runtime_ms in reports
  int lemma_samples = 20;                // directions / pairs per lemma check

  /// Defaults: n = 2 angular-trapezoid 4096, n = 3 fibonacci-sphere 10^4,
  /// n = 4, 5 monte-carlo 10^5 with the config seed.
  RuleSpec rule_for(int dim) const;
  QuadratureRule make_rule_for(int dim) const;
  /// Defaults: cauchy/moment 1e-6 (n = 2), 1e-3 (n = 3), 4 sigma for Monte
  /// Carlo rules; surface-eq2 1e-4 (n = 2), 1e-2 (n = 3), inradius deficit
  /// above; lemmas and mixed volume 1e-8.
  Tolerance tolerance_for(Theorem t, int dim) const;
  int ball_level_for(int dim) const;
  std::uint64_t lemma_seed() const { return seed.value_or(1); }

  /// Throws InvalidArgument for non-positive tolerances or bad rule specs,
  /// and MissingSeed when a Monte Carlo rule has no seed to use.
  void validate() const;
};

}  // namespace shadowcalc
