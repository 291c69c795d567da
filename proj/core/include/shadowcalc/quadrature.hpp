#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

/// Volume of the unit d-ball, d = 0..5, in closed form.
double kappa(int dim);
/// Surface measure of S^{n-1}: n * kappa(n).
double sphere_area(int n);
/// The constant of the projection formula in R^n: kappa(n - 1), the
/// integral of <nu, u>^+ over S^{n-1} for any unit nu.
double cauchy_constant(int n);

enum class RuleKind {
  kAngularTrapezoid,  // n = 2 only
  kFibonacciSphere,   // n = 3 only
  kMonteCarlo,        // any n, seeded
};

std::string_view rule_kind_name(RuleKind kind) noexcept;
/// Accepts "angular-trapezoid", "fibonacci-sphere", "monte-carlo".
RuleKind parse_rule_kind(std::string_view name);

/// Equal-weight node set on S^{n-1}; weights sum to sphere_area(n).
struct QuadratureRule {
  int dim = 0;
  RuleKind kind = RuleKind::kMonteCarlo;
  std::optional<std::uint64_t> seed;
  std::vector<Vec> nodes;
  std::vector<double> weights;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Builds a rule.
///  - angular-trapezoid: angles (i + 1/2) 2pi / size (midpoint placement)
///  - fibonacci-sphere:  z_i = 1 - (2i + 1)/size, golden-angle longitude
///  - monte-carlo:       node i is a normalized Gaussian vector drawn from an
///                       engine keyed by (seed, i) alone, so any prefix or
///                       any evaluation order reproduces the same nodes
/// Throws KindDimensionMismatch, MissingSeed, DimensionOutOfRange, and
/// InvalidArgument for size < 4.
QuadratureRule make_rule(int dim, RuleKind kind, int size,
                         std::optional<std::uint64_t> seed = std::nullopt);

struct ScalarEstimate {
  double value = 0.0;
  std::optional<double> standard_error;  // Monte Carlo rules only
};

struct VectorEstimate {
  Vec value;
  std::optional<Vec> standard_error;  // Monte Carlo rules only
};

using ScalarIntegrand = std::function<double(const Direction&)>;
using VectorIntegrand = std::function<Vec(const Direction&)>;

/// sum_i w_i f(node_i). Node values are computed on `workers` threads and
/// reduced in node order with compensated summation, so the result does
/// not depend on the worker count. Throws NonFiniteSample.
ScalarEstimate integrate_scalar(const QuadratureRule& rule, const ScalarIntegrand& f,
                                int workers = 1);

/// Componentwise integrate_scalar.
VectorEstimate integrate_vector(const QuadratureRule& rule, const VectorIntegrand& f,
                                int workers = 1);

}  // namespace shadowcalc
