#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shadowcalc/config.hpp"
#include "shadowcalc/minkowski.hpp"
#include "shadowcalc/quadrature.hpp"

namespace shadowcalc {

using Quantity = std::variant<double, Vec>;

/// Denominator floor of relative errors.
inline constexpr double kRelativeErrorFloor = 1e-12;

/// |lhs - rhs| / max(|lhs|, floor); for vectors the worst component over the
/// max-norm of lhs.
double relative_error(double lhs, double rhs);
double relative_error(const Vec& lhs, const Vec& rhs);

struct RuleInfo {
  int dim = 0;
  RuleKind kind = RuleKind::kMonteCarlo;
  int size = 0;
  std::optional<std::uint64_t> seed;

  static RuleInfo of(const QuadratureRule& rule) {
    return {rule.dim, rule.kind, rule.size(), rule.seed};
  }
};

/// One certified identity: both sides, their disagreement, and how it was
/// computed. pass <=> rel_error <= tolerance.
struct VerificationReport {
  Theorem theorem = Theorem::kCauchy;
  int dim = 0;
  std::string body;   // digest of the vertex set
  std::string label;  // human-readable body name
  Quantity lhs = 0.0;
  Quantity rhs = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;  // effective relative tolerance
  Tolerance requested;
  std::optional<RuleInfo> rule;
  std::optional<double> standard_error;  // of rhs; worst component for vectors
  std::int64_t runtime_ms = 0;
  bool pass = false;
  std::optional<std::string> error_code;  // set when the checker threw
  std::string error_detail;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// "fnv1a64:<hex>" over the dimension and the canonical vertex coordinates.
std::string body_digest(const Polytope& k);

/// lhs = facet-sum surface area, rhs = (1/kappa(n-1)) * integral of shadow areas.
VerificationReport verify_cauchy(const Polytope& k, const QuadratureRule& rule, Tolerance tol,
                                 int workers = 1);

/// lhs = boundary first moment, rhs = (1/kappa(n-1)) * integral of the
/// cosine-weighted illuminated moments. details carries the unweighted
/// variant ("rhs_unweighted", "unweighted_ratio").
VerificationReport verify_moment(const Polytope& k, const QuadratureRule& rule, Tolerance tol,
                                 int workers = 1);

/// lhs = facet-sum surface area, rhs = derivative of vol(K + eps B) at the
/// largest level; details lists the derivative at every level and whether
/// the sequence is nondecreasing.
VerificationReport verify_surface_eq2(const Polytope& k, std::span<const int> levels,
                                      std::span<const double> eps_ladder, Tolerance tol);

/// Worst case over `directions` seeded directions and eps in {1e-3, 1e-1, 1}
/// of vol(K + eps[0,u]) - vol(K) against eps * shadow_area(K, u); also folds
/// in the hull-vs-half-sum shadow agreement.
VerificationReport verify_projection_lemma(const Polytope& k, int directions, std::uint64_t seed,
                                           Tolerance tol);

/// Worst case over `pairs` seeded unit segment pairs and a, b in
/// {0.3, 1, 2.5} of D_{a[0,u] + b[0,v]} against a D_u + b D_v.
VerificationReport verify_linearity_lemma(const Polytope& k, int pairs, std::uint64_t seed,
                                          Tolerance tol);

/// Fits the volume polynomial of K and the cross-polytope; lhs = volume(K),
/// rhs = V(K, ..., K). rel_error also covers the partner's diagonal, the fit
/// residual and any negative coefficient.
VerificationReport verify_mixed_volume(const Polytope& k, Tolerance tol);

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
};

/// Rejection sampling in the bounding box with facet half-space tests.
/// Deterministic in (samples, seed). Requires samples >= 1000.
McEstimate mc_volume(const Polytope& k, std::int64_t samples, std::uint64_t seed);

/// Unvalidated body input; verify_batch reports a degenerate hull instead of
/// throwing.
struct BodySpec {
  std::string label;
  std::vector<Vec> points;
};

/// Runs every checker in kAllTheorems order. A checker that throws yields a
/// failed report carrying the error; the batch always completes.
std::vector<VerificationReport> verify_all(const BodySpec& body, const Config& config);

/// verify_all restricted to `theorems`, in the given order.
std::vector<VerificationReport> verify_batch(const BodySpec& body, std::span<const Theorem> theorems,
                                             const Config& config);

/// Runs a single checker with config-derived rule and tolerance.
VerificationReport verify_one(Theorem t, const Polytope& k, const Config& config);

}  // namespace shadowcalc
