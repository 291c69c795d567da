#include "shadowcalc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "shadowcalc/error.hpp"

namespace shadowcalc {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double uniform53(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Node i depends only on (seed, i).
Vec gaussian_direction(int dim, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 eng(seq);
  for (;;) {
    Vec g(dim);
    for (int j = 0; j < dim; j += 2) {
      // Box-Muller on (0, 1] x [0, 1).
      const double r = std::sqrt(-2.0 * std::log(1.0 - uniform53(eng)));
      const double t = 2.0 * kPi * uniform53(eng);
      g[j] = r * std::cos(t);
      if (j + 1 < dim) g[j + 1] = r * std::sin(t);
    }
    const double len = g.norm();
    if (len > 1e-12) return g / len;
  }
}

// Evaluates f on every node and returns the values in node order.
template <typename T, typename F>
std::vector<T> evaluate_nodes(const QuadratureRule& rule, const F& f, int workers) {
  const int n = rule.size();
  std::vector<T> values(static_cast<std::size_t>(n));
  auto run = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) values[i] = f(Direction(rule.nodes[i]));
  };
  workers = std::clamp(workers, 1, std::max(1, n));
  if (workers == 1) {
    run(0, n);
    return values;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = std::min(n, w * chunk);
      const int end = std::min(n, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          run(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return values;
}

ScalarEstimate reduce(const QuadratureRule& rule, const std::vector<double>& values) {
  CompensatedSum total;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      fail(ErrorCode::kNonFiniteSample, "integrand is not finite at node " + std::to_string(i));
    }
    total.add(rule.weights[i] * values[i]);
  }
  ScalarEstimate out{total.value(), std::nullopt};
  if (rule.kind == RuleKind::kMonteCarlo) {
    const double n = static_cast<double>(values.size());
    CompensatedSum mean_acc;
    for (double v : values) mean_acc.add(v);
    const double mean = mean_acc.value() / n;
    CompensatedSum var_acc;
    for (double v : values) var_acc.add((v - mean) * (v - mean));
    const double sample_sd = std::sqrt(var_acc.value() / (n - 1.0));
    out.standard_error = sphere_area(rule.dim) * sample_sd / std::sqrt(n);
  }
  return out;
}

}  // namespace

double kappa(int dim) {
  switch (dim) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return kPi;
    case 3: return 4.0 * kPi / 3.0;
    case 4: return kPi * kPi / 2.0;
    case 5: return 8.0 * kPi * kPi / 15.0;
    default:
      fail(ErrorCode::kDimensionOutOfRange, "kappa defined for dimensions 0..5");
  }
}

double sphere_area(int n) { return n * kappa(n); }

double cauchy_constant(int n) { return kappa(n - 1); }

std::string_view rule_kind_name(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::kAngularTrapezoid: return "angular-trapezoid";
    case RuleKind::kFibonacciSphere: return "fibonacci-sphere";
    case RuleKind::kMonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

RuleKind parse_rule_kind(std::string_view name) {
  if (name == "angular-trapezoid") return RuleKind::kAngularTrapezoid;
  if (name == "fibonacci-sphere") return RuleKind::kFibonacciSphere;
  if (name == "monte-carlo") return RuleKind::kMonteCarlo;
  fail(ErrorCode::kInvalidArgument, "unknown quadrature kind '" + std::string(name) + "'");
}

QuadratureRule make_rule(int dim, RuleKind kind, int size, std::optional<std::uint64_t> seed) {
  if (dim < 2 || dim > kMaxDim) {
    fail(ErrorCode::kDimensionOutOfRange, "rule dimension " + std::to_string(dim) + " outside 2..5");
  }
  if (size < 4) fail(ErrorCode::kInvalidArgument, "rule size must be at least 4");
  if (kind == RuleKind::kAngularTrapezoid && dim != 2) {
    fail(ErrorCode::kKindDimensionMismatch, "angular-trapezoid requires dimension 2");
  }
  if (kind == RuleKind::kFibonacciSphere && dim != 3) {
    fail(ErrorCode::kKindDimensionMismatch, "fibonacci-sphere requires dimension 3");
  }
  if (kind == RuleKind::kMonteCarlo && !seed) {
    fail(ErrorCode::kMissingSeed, "monte-carlo rule requires a seed");
  }

  QuadratureRule rule;
  rule.dim = dim;
  rule.kind = kind;
  rule.seed = kind == RuleKind::kMonteCarlo ? seed : std::nullopt;
  rule.nodes.reserve(static_cast<std::size_t>(size));
  switch (kind) {
    case RuleKind::kAngularTrapezoid:
      for (int i = 0; i < size; ++i) {
        const double t = 2.0 * kPi * (i + 0.5) / size;
        rule.nodes.push_back(Vec{std::cos(t), std::sin(t)});
      }
      break;
    case RuleKind::kFibonacciSphere: {
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (int i = 0; i < size; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / size;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        Vec p{r * std::cos(phi), r * std::sin(phi), z};
        rule.nodes.push_back(p / p.norm());
      }
      break;
    }
    case RuleKind::kMonteCarlo:
      for (int i = 0; i < size; ++i) {
        rule.nodes.push_back(gaussian_direction(dim, *seed, static_cast<std::uint64_t>(i)));
      }
      break;
  }
  rule.weights.assign(static_cast<std::size_t>(size), sphere_area(dim) / size);
  return rule;
}

ScalarEstimate integrate_scalar(const QuadratureRule& rule, const ScalarIntegrand& f,
                                int workers) {
  return reduce(rule, evaluate_nodes<double>(rule, f, workers));
}

VectorEstimate integrate_vector(const QuadratureRule& rule, const VectorIntegrand& f,
                                int workers) {
  const std::vector<Vec> values = evaluate_nodes<Vec>(rule, f, workers);
  VectorEstimate out{Vec(rule.dim), std::nullopt};
  if (rule.kind == RuleKind::kMonteCarlo) out.standard_error = Vec(rule.dim);
  std::vector<double> component(values.size());
  for (int c = 0; c < rule.dim; ++c) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i].dim() != rule.dim) {
        fail(ErrorCode::kDimensionMismatch, "vector integrand returned the wrong dimension");
      }
      component[i] = values[i][c];
    }
    const ScalarEstimate e = reduce(rule, component);
    out.value[c] = e.value;
    if (e.standard_error) (*out.standard_error)[c] = *e.standard_error;
  }
  return out;
}

}  // namespace shadowcalc
