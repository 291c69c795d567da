#include "shadowcalc/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "shadowcalc/error.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

nlohmann::ordered_json to_json_array(const Vec& v) {
  auto out = nlohmann::ordered_json::array();
  for (double x : v) out.push_back(x);
  return out;
}

VerificationReport start_report(Theorem t, const Polytope& k, Tolerance tol) {
  VerificationReport r;
  r.theorem = t;
  r.dim = k.dim();
  r.body = body_digest(k);
  r.requested = tol;
  return r;
}

// Sets the effective relative tolerance and the pass flag.
void settle(VerificationReport& r, double lhs_scale, double inradius = 1.0) {
  switch (r.requested.kind) {
    case Tolerance::Kind::kRelative:
      r.tolerance = r.requested.value;
      break;
    case Tolerance::Kind::kSigmas:
      if (!r.standard_error) {
        fail(ErrorCode::kInvalidArgument, "a sigma tolerance needs a Monte Carlo rule");
      }
      r.tolerance = r.requested.value * *r.standard_error / std::max(lhs_scale, kRelativeErrorFloor);
      break;
    case Tolerance::Kind::kInradiusDeficit:
      r.tolerance = 1.0 - inradius;
      break;
  }
  r.pass = r.rel_error <= r.tolerance;
}

void check_rule(const Polytope& k, const QuadratureRule& rule) {
  if (k.dim() != rule.dim) fail(ErrorCode::kDimensionMismatch, "rule and body differ in dimension");
}

std::vector<Vec> seeded_directions(int dim, int count, std::uint64_t seed) {
  const QuadratureRule rule = make_rule(dim, RuleKind::kMonteCarlo, std::max(count, 4), seed);
  return {rule.nodes.begin(), rule.nodes.begin() + count};
}

Polytope cross_polytope(int dim) {
  std::vector<Vec> pts;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(Vec::unit(dim, i));
    pts.push_back(-Vec::unit(dim, i));
  }
  return hull(pts);
}

}  // namespace

double relative_error(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), kRelativeErrorFloor);
}

double relative_error(const Vec& lhs, const Vec& rhs) {
  return (lhs - rhs).max_abs() / std::max(lhs.max_abs(), kRelativeErrorFloor);
}

std::string body_digest(const Polytope& k) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(k.dim()));
  for (const Vec& v : k.vertices()) {
    for (double x : v) mix(std::bit_cast<std::uint64_t>(x == 0.0 ? 0.0 : x));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerificationReport verify_cauchy(const Polytope& k, const QuadratureRule& rule, Tolerance tol,
                                 int workers) {
  Stopwatch clock;
  check_rule(k, rule);
  VerificationReport r = start_report(Theorem::kCauchy, k, tol);
  r.rule = RuleInfo::of(rule);
  const int n = k.dim();
  const double lhs = surface_area(k);
  const ScalarEstimate est = integrate_scalar(
      rule, [&k](const Direction& d) { return shadow_area(k, d); }, workers);
  const double c = cauchy_constant(n);
  const double rhs = est.value / c;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  r.rel_error = relative_error(lhs, rhs);
  if (est.standard_error) r.standard_error = *est.standard_error / c;
  r.details["constant"] = c;
  r.details["mean_shadow"] = est.value / sphere_area(n);
  settle(r, std::abs(lhs));
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_moment(const Polytope& k, const QuadratureRule& rule, Tolerance tol,
                                 int workers) {
  Stopwatch clock;
  check_rule(k, rule);
  VerificationReport r = start_report(Theorem::kMoment, k, tol);
  r.rule = RuleInfo::of(rule);
  const int n = k.dim();
  const Vec lhs = boundary_moment(k).first_moment;
  const double c = cauchy_constant(n);
  const VectorEstimate weighted = integrate_vector(
      rule, [&k](const Direction& d) { return illuminated(k, d).weighted_moment.first_moment; },
      workers);
  const VectorEstimate unweighted = integrate_vector(
      rule, [&k](const Direction& d) { return illuminated(k, d).unweighted_moment.first_moment; },
      workers);
  const Vec rhs = weighted.value / c;
  const Vec rhs_unweighted = unweighted.value / c;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = (lhs - rhs).max_abs();
  r.rel_error = relative_error(lhs, rhs);
  if (weighted.standard_error) r.standard_error = weighted.standard_error->max_abs() / c;

  auto ratio = nlohmann::ordered_json::array();
  for (int i = 0; i < n; ++i) {
    if (std::abs(lhs[i]) > kRelativeErrorFloor) {
      ratio.push_back(rhs_unweighted[i] / lhs[i]);
    } else {
      ratio.push_back(nullptr);
    }
  }
  r.details["constant"] = c;
  r.details["rhs_unweighted"] = to_json_array(rhs_unweighted);
  r.details["unweighted_ratio"] = ratio;
  r.details["unweighted_rel_error"] = relative_error(lhs, rhs_unweighted);
  settle(r, lhs.max_abs());
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_surface_eq2(const Polytope& k, std::span<const int> levels,
                                      std::span<const double> eps_ladder, Tolerance tol) {
  Stopwatch clock;
  if (levels.empty()) fail(ErrorCode::kInvalidArgument, "surface-eq2 needs at least one ball level");
  VerificationReport r = start_report(Theorem::kSurfaceEq2, k, tol);
  std::vector<int> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  DerivativeOptions opts{std::vector<double>(eps_ladder.begin(), eps_ladder.end())};

  const double lhs = surface_area(k);
  auto values = nlohmann::ordered_json::array();
  auto inradii = nlohmann::ordered_json::array();
  bool monotone = true;
  double previous = -std::numeric_limits<double>::infinity();
  double rhs = 0.0;
  double inradius = 0.0;
  for (int level : sorted) {
    const BallApprox ball = ball_approx(k.dim(), level);
    const double d = dir_derivative_volume(k, ball, opts);
    if (d < previous - 1e-12 * std::abs(previous)) monotone = false;
    previous = d;
    values.push_back(d);
    inradii.push_back(ball.inradius);
    rhs = d;
    inradius = ball.inradius;
  }
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  r.rel_error = relative_error(lhs, rhs);
  r.details["levels"] = sorted;
  r.details["values"] = values;
  r.details["inradius"] = inradii;
  r.details["monotone"] = monotone;
  settle(r, std::abs(lhs), inradius);
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_projection_lemma(const Polytope& k, int directions, std::uint64_t seed,
                                           Tolerance tol) {
  Stopwatch clock;
  VerificationReport r = start_report(Theorem::kLemmaProjection, k, tol);
  const double base = volume(k);
  double worst = -1.0;
  double worst_half_sum = 0.0;
  for (const Vec& u : seeded_directions(k.dim(), directions, seed)) {
    const Direction d(u);
    const double shadow = shadow_area(k, d);
    worst_half_sum = std::max(worst_half_sum, relative_error(shadow, shadow_area_half_sum(k, d)));
    for (double eps : {1e-3, 1e-1, 1.0}) {
      const double lhs = volume(minkowski_sum(k, Segment::from_origin(u), eps)) - base;
      const double rhs = eps * shadow;
      const double err = relative_error(lhs, rhs);
      if (err > worst) {
        worst = err;
        r.lhs = lhs;
        r.rhs = rhs;
        r.abs_error = std::abs(lhs - rhs);
        r.details["worst_direction"] = to_json_array(u);
        r.details["worst_eps"] = eps;
      }
    }
  }
  r.rel_error = std::max(worst, worst_half_sum);
  r.details["lemma_max_rel_error"] = worst;
  r.details["half_sum_max_rel_error"] = worst_half_sum;
  r.details["directions"] = directions;
  r.details["seed"] = seed;
  settle(r, std::abs(std::get<double>(r.lhs)));
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_linearity_lemma(const Polytope& k, int pairs, std::uint64_t seed,
                                          Tolerance tol) {
  Stopwatch clock;
  VerificationReport r = start_report(Theorem::kLemmaLinearity, k, tol);
  const std::vector<Vec> dirs = seeded_directions(k.dim(), 2 * pairs, seed);
  double worst = -1.0;
  for (int i = 0; i < pairs; ++i) {
    const Segment su = Segment::from_origin(dirs[2 * i]);
    const Segment sv = Segment::from_origin(dirs[2 * i + 1]);
    const double du = dir_derivative_volume(k, su);
    const double dv = dir_derivative_volume(k, sv);
    const std::vector<Body> pair{su, sv};
    for (double a : {0.3, 1.0, 2.5}) {
      for (double b : {0.3, 1.0, 2.5}) {
        const std::vector<double> coeffs{a, b};
        const double lhs = dir_derivative_volume(k, minkowski_combination(pair, coeffs));
        const double rhs = a * du + b * dv;
        const double err = relative_error(lhs, rhs);
        if (err > worst) {
          worst = err;
          r.lhs = lhs;
          r.rhs = rhs;
          r.abs_error = std::abs(lhs - rhs);
          r.details["worst_alpha"] = a;
          r.details["worst_beta"] = b;
        }
      }
    }
  }
  r.rel_error = worst;
  r.details["pairs"] = pairs;
  r.details["seed"] = seed;
  settle(r, std::abs(std::get<double>(r.lhs)));
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport verify_mixed_volume(const Polytope& k, Tolerance tol) {
  Stopwatch clock;
  VerificationReport r = start_report(Theorem::kMixedVolume, k, tol);
  const int n = k.dim();
  const Polytope partner = cross_polytope(n);
  const std::vector<Polytope> bodies{k, partner};
  const auto grid = default_lambda_grid(2);
  const MixedVolumeTable table = mixed_volume_fit(bodies, grid, {"K", "cross"});

  const double vol_k = volume(k);
  const double vol_partner = volume(partner);
  const double diag_k = table.at(std::vector<int>(static_cast<std::size_t>(n), 0));
  const double diag_partner = table.at(std::vector<int>(static_cast<std::size_t>(n), 1));
  double min_coeff = std::numeric_limits<double>::infinity();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [multiset, value] : table.coefficients) {
    min_coeff = std::min(min_coeff, value);
    rows.push_back({{"multiset", multiset}, {"value", value}});
  }
  const double scale = std::max(std::max(vol_k, vol_partner), kRelativeErrorFloor);
  double rel = std::max(relative_error(vol_k, diag_k), relative_error(vol_partner, diag_partner));
  rel = std::max(rel, table.fit_residual / scale);
  if (min_coeff < -1e-9) rel = std::max(rel, -min_coeff / scale);

  r.lhs = vol_k;
  r.rhs = diag_k;
  r.abs_error = std::abs(vol_k - diag_k);
  r.rel_error = rel;
  r.details["partner_volume"] = vol_partner;
  r.details["partner_diagonal"] = diag_partner;
  r.details["fit_residual"] = table.fit_residual;
  r.details["condition_number"] = table.condition_number;
  r.details["min_coefficient"] = min_coeff;
  r.details["coefficients"] = rows;
  settle(r, vol_k);
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

McEstimate mc_volume(const Polytope& k, std::int64_t samples, std::uint64_t seed) {
  if (samples < 1000) fail(ErrorCode::kInvalidArgument, "mc_volume needs at least 1000 samples");
  const int n = k.dim();
  Vec lo = k.vertices().front();
  Vec hi = lo;
  for (const Vec& v : k.vertices()) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  double box = 1.0;
  for (int i = 0; i < n; ++i) box *= hi[i] - lo[i];

  std::mt19937_64 eng(seed);
  std::int64_t hits = 0;
  Vec x(n);
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      x[i] = lo[i] + t * (hi[i] - lo[i]);
    }
    if (contains(k, x)) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

VerificationReport verify_one(Theorem t, const Polytope& k, const Config& config) {
  const int n = k.dim();
  const Tolerance tol = config.tolerance_for(t, n);
  switch (t) {
    case Theorem::kCauchy:
      return verify_cauchy(k, config.make_rule_for(n), tol, config.workers);
    case Theorem::kMoment:
      return verify_moment(k, config.make_rule_for(n), tol, config.workers);
    case Theorem::kLemmaProjection:
      return verify_projection_lemma(k, config.lemma_samples, config.lemma_seed(), tol);
    case Theorem::kLemmaLinearity:
      return verify_linearity_lemma(k, config.lemma_samples, config.lemma_seed(), tol);
    case Theorem::kMixedVolume:
      return verify_mixed_volume(k, tol);
    case Theorem::kSurfaceEq2: {
      const int top = config.ball_level_for(n);
      std::vector<int> levels;
      for (int l = std::min(1, top); l <= top; ++l) levels.push_back(l);
      return verify_surface_eq2(k, levels, config.eps_ladder, tol);
    }
  }
  fail(ErrorCode::kInternal, "unhandled theorem");
}

std::vector<VerificationReport> verify_all(const BodySpec& body, const Config& config) {
  return verify_batch(body, kAllTheorems, config);
}

std::vector<VerificationReport> verify_batch(const BodySpec& body, std::span<const Theorem> theorems,
                                             const Config& config) {
  std::vector<VerificationReport> reports;
  const int dim = body.points.empty() ? 0 : body.points.front().dim();

  auto failed = [&](Theorem t, const Error& e) {
    VerificationReport r;
    r.theorem = t;
    r.dim = dim;
    r.label = body.label;
    r.error_code = std::string(error_code_name(e.code()));
    r.error_detail = e.what();
    r.rel_error = std::numeric_limits<double>::infinity();
    r.pass = false;
    return r;
  };

  std::optional<Polytope> k;
  try {
    k = hull(body.points);
  } catch (const Error& e) {
    for (Theorem t : theorems) reports.push_back(failed(t, e));
    return reports;
  }
  for (Theorem t : theorems) {
    try {
      VerificationReport r = verify_one(t, *k, config);
      r.label = body.label;
      reports.push_back(std::move(r));
    } catch (const Error& e) {
      VerificationReport r = failed(t, e);
      r.body = body_digest(*k);
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace shadowcalc
