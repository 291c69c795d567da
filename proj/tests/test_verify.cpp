#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "shadowcalc/error.hpp"
#include "shadowcalc/io.hpp"
#include "shadowcalc/verify.hpp"

namespace {

using namespace shadowcalc;
using testgen::Rng;

constexpr double kPi = std::numbers::pi;

// Midpoint-trapezoid sums of the unit square's shadow length and weighted
// moment have closed forms: 2h / sin(h/2) and (h / sin(h/2)) (1, 1).
double trapezoid_square_factor(int size) {
  const double h = 2.0 * kPi / size;
  return h / std::sin(h / 2.0);
}

TEST(RelativeError, UsesFloorAndMaxNorm) {
  EXPECT_DOUBLE_EQ(relative_error(2.0, 2.5), 0.25);
  EXPECT_DOUBLE_EQ(relative_error(0.0, 1e-13), 1e-13 / kRelativeErrorFloor);
  EXPECT_DOUBLE_EQ(relative_error(Vec{2, -4}, Vec{2.5, -4}), 0.125);
}

TEST(Cauchy, UnitCubeFibonacci) {
  const Polytope k = hull(testgen::cube(3));
  const auto r = verify_cauchy(k, make_rule(3, RuleKind::kFibonacciSphere, 10000), Tolerance::relative(1e-3));
  EXPECT_DOUBLE_EQ(std::get<double>(r.lhs), 6.0);
  EXPECT_LE(r.rel_error, 1e-3);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(std::get<double>(r.rhs) * kappa(2) / (4.0 * kPi), 1.5, 1e-3);
  EXPECT_NEAR(r.details["mean_shadow"].get<double>(), 1.5, 1e-3);
  ASSERT_TRUE(r.rule.has_value());
  EXPECT_EQ(r.rule->size, 10000);
}

TEST(Cauchy, BallApproximant) {
  const BallApprox ball = ball_approx(3, 4);
  const auto r = verify_cauchy(ball.poly, make_rule(3, RuleKind::kFibonacciSphere, 10000), Tolerance::relative(1e-3));
  EXPECT_LT(std::abs(std::get<double>(r.lhs) - 4.0 * kPi), 0.01 * 4.0 * kPi);
  EXPECT_LT(std::abs(std::get<double>(r.rhs) - 4.0 * kPi), 0.01 * 4.0 * kPi);
}

TEST(Cauchy, SquareTrapezoidMatchesClosedFormSum) {
  const Polytope k = hull(testgen::cube(2));
  for (int size : {360, 720, 4096}) {
    const auto r = verify_cauchy(k, make_rule(2, RuleKind::kAngularTrapezoid, size), Tolerance::relative(1e-6));
    const double expected = 2.0 * trapezoid_square_factor(size);
    EXPECT_NEAR(std::get<double>(r.rhs), expected, 1e-12);
    EXPECT_NEAR(r.rel_error, (expected - 4.0) / 4.0, 1e-12);
  }
}

TEST(Cauchy, MonteCarloUsesSigmaTolerance) {
  for (int n = 4; n <= 5; ++n) {
    const Polytope k = hull(testgen::cross(n));
    const auto r = verify_cauchy(k, make_rule(n, RuleKind::kMonteCarlo, 20000, 5), Tolerance::sigmas(4.0));
    ASSERT_TRUE(r.standard_error.has_value());
    EXPECT_NEAR(r.tolerance * std::get<double>(r.lhs), 4.0 * *r.standard_error, 1e-12);
    EXPECT_EQ(r.pass, r.abs_error <= 4.0 * *r.standard_error);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Cauchy, SigmaToleranceNeedsMonteCarlo) {
  const Polytope k = hull(testgen::cube(3));
  EXPECT_THROW(verify_cauchy(k, make_rule(3, RuleKind::kFibonacciSphere, 100), Tolerance::sigmas(4.0)), Error);
  EXPECT_THROW(verify_cauchy(k, make_rule(2, RuleKind::kAngularTrapezoid, 100), Tolerance::relative(1.0)), Error);
}

TEST(Cauchy, PassStatusSurvivesRigidMotion) {
  Rng rng(71);
  const QuadratureRule rule = make_rule(3, RuleKind::kFibonacciSphere, 4000);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pts = testgen::box_points(rng, 3, 12);
    const auto moved = testgen::transform(pts, testgen::rotation(rng, 3), testgen::box_point(rng, 3, -4, 4));
    for (double tol : {1e-3, 1e-6}) {
      const auto a = verify_cauchy(hull(pts), rule, Tolerance::relative(tol));
      const auto b = verify_cauchy(hull(moved), rule, Tolerance::relative(tol));
      EXPECT_EQ(a.pass, b.pass) << "tol " << tol;
    }
  }
}

TEST(Cauchy, RefiningFibonacciRuleDoesNotIncreaseError) {
  const Polytope k = hull(testgen::cube(3));
  double previous = INFINITY;
  for (int size : {1000, 10000, 100000}) {
    const double e =
        verify_cauchy(k, make_rule(3, RuleKind::kFibonacciSphere, size), Tolerance::relative(1e-3)).rel_error;
    EXPECT_LE(e, 1.1 * previous) << "size " << size;
    previous = e;
  }
}

TEST(Moment, UnitSquareTrapezoid) {
  const Polytope k = hull(testgen::cube(2));
  const auto r = verify_moment(k, make_rule(2, RuleKind::kAngularTrapezoid, 720), Tolerance::relative(1e-6));
  const Vec rhs = std::get<Vec>(r.rhs);
  const double expected = trapezoid_square_factor(720);
  EXPECT_NEAR(rhs[0], expected, 1e-12);
  EXPECT_NEAR(rhs[1], expected, 1e-12);
  EXPECT_EQ(std::get<Vec>(r.lhs), (Vec{2, 2}));
}

TEST(Moment, UnweightedIntegrandOvershootsByHalfPi) {
  const Polytope k = hull(testgen::cube(2));
  for (int size : {360, 720, 4096}) {
    const auto r = verify_moment(k, make_rule(2, RuleKind::kAngularTrapezoid, size), Tolerance::relative(1e-6));
    for (const auto& ratio : r.details["unweighted_ratio"]) EXPECT_NEAR(ratio.get<double>(), kPi / 2.0, 1e-3);
  }
}

TEST(Moment, UnitCubeFibonacci) {
  const Polytope k = hull(testgen::cube(3));
  const auto r = verify_moment(k, make_rule(3, RuleKind::kFibonacciSphere, 20000), Tolerance::relative(1e-2));
  EXPECT_EQ(std::get<Vec>(r.lhs), (Vec{3, 3, 3}));
  EXPECT_LE(r.rel_error, 1e-2);
  EXPECT_TRUE(r.pass);
}

TEST(Moment, CenteredCubeAbsoluteError) {
  const Polytope k = hull(testgen::cube(3, -0.5, 0.5));
  const auto r = verify_moment(k, make_rule(3, RuleKind::kFibonacciSphere, 20000), Tolerance::relative(1e-2));
  EXPECT_LE(std::get<Vec>(r.lhs).max_abs(), 1e-15);
  EXPECT_LE(r.abs_error, 1e-6);
}

TEST(SurfaceEq2, Examples) {
  const std::vector<int> levels{1, 2, 3, 4};
  const auto cube = verify_surface_eq2(hull(testgen::cube(3)), levels, {}, Tolerance::relative(1e-2));
  EXPECT_LT(std::abs(std::get<double>(cube.rhs) - 6.0), 0.06);
  EXPECT_TRUE(cube.details["monotone"].get<bool>());
  EXPECT_EQ(cube.details["values"].size(), 4u);
  EXPECT_TRUE(cube.pass);

  const auto square = verify_surface_eq2(hull(testgen::cube(2)), levels, {}, Tolerance::relative(1e-4));
  EXPECT_LT(std::abs(std::get<double>(square.rhs) - 4.0), 1e-4);

  const auto simplex = verify_surface_eq2(hull(testgen::simplex(3)), levels, {}, Tolerance::relative(1e-2));
  const double s = (3.0 + std::sqrt(3.0)) / 2.0;
  EXPECT_LT(std::abs(std::get<double>(simplex.rhs) - s), 0.01 * s);
}

TEST(SurfaceEq2, InradiusDeficitTolerance) {
  const std::vector<int> levels{0, 1};
  const auto r = verify_surface_eq2(hull(testgen::simplex(4)), levels, {}, Tolerance::inradius_deficit());
  EXPECT_NEAR(r.tolerance, 1.0 - ball_approx(4, 1).inradius, 1e-15);
  EXPECT_THROW(verify_surface_eq2(hull(testgen::simplex(4)), {}, {}, Tolerance::relative(1.0)), Error);
}

TEST(Lemmas, HoldOnRandomBodies) {
  Rng rng(72);
  for (int n = 2; n <= 5; ++n) {
    const Polytope k = testgen::polytope(rng, n);
    const auto p = verify_projection_lemma(k, 10, 3, Tolerance::relative(1e-8));
    EXPECT_TRUE(p.pass) << "n=" << n << " rel " << p.rel_error;
    EXPECT_LE(p.details["half_sum_max_rel_error"].get<double>(), 1e-9);
    const auto l = verify_linearity_lemma(k, 3, 3, Tolerance::relative(1e-8));
    EXPECT_TRUE(l.pass) << "n=" << n << " rel " << l.rel_error;
  }
}

TEST(MixedVolumeReport, CubeAgainstCrossPolytope) {
  const auto r = verify_mixed_volume(hull(testgen::cube(3)), Tolerance::relative(1e-8));
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.details["fit_residual"].get<double>(), 1e-8);
  EXPECT_GE(r.details["min_coefficient"].get<double>(), -1e-9);
  EXPECT_NEAR(r.details["partner_diagonal"].get<double>(), 4.0 / 3.0, 1e-8);
}

TEST(VerifyAll, CubeDefaultsProduceSixPassingReports) {
  const auto reports = verify_all({"cube", testgen::cube(3)}, Config{});
  ASSERT_EQ(reports.size(), 6u);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].theorem, kAllTheorems[i]);
    EXPECT_TRUE(reports[i].pass) << theorem_name(reports[i].theorem);
    EXPECT_FALSE(reports[i].error_code.has_value());
    EXPECT_EQ(reports[i].label, "cube");
  }
}

TEST(VerifyAll, DegenerateInputIsReportedNotThrown) {
  const std::vector<Vec> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  const auto reports = verify_all({"flat", flat}, Config{});
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) {
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.error_code, std::optional<std::string>("degenerate_input"));
  }
}

TEST(VerifyAll, FailingCheckerDoesNotAbortBatch) {
  // No seed: the Monte Carlo checkers fail, the others still run.
  const auto reports = verify_all({"simplex", testgen::simplex(4)}, Config{});
  ASSERT_EQ(reports.size(), 6u);
  EXPECT_EQ(reports[0].error_code, std::optional<std::string>("missing_seed"));
  EXPECT_EQ(reports[1].error_code, std::optional<std::string>("missing_seed"));
  for (std::size_t i = 2; i < 6; ++i) {
    EXPECT_FALSE(reports[i].error_code.has_value());
    EXPECT_TRUE(reports[i].pass);
  }
}

TEST(VerifyAll, ByteIdenticalAcrossRunsAndWorkerCounts) {
  Config config;
  config.seed = 99;
  config.quadrature[3] = {RuleKind::kMonteCarlo, 3000, std::nullopt};
  const BodySpec body{"random", testgen::box_points(*std::make_unique<Rng>(73), 3, 15)};
  const std::string first = io::reports_json(verify_all(body, config)).dump(2);
  const std::string second = io::reports_json(verify_all(body, config)).dump(2);
  config.workers = 3;
  const std::string threaded = io::reports_json(verify_all(body, config)).dump(2);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, threaded);
}

TEST(BodyDigest, DependsOnlyOnVertexSet) {
  auto pts = testgen::cube(3);
  const std::string a = body_digest(hull(pts));
  pts.push_back(Vec{0.5, 0.5, 0.5});
  std::reverse(pts.begin(), pts.end());
  EXPECT_EQ(body_digest(hull(pts)), a);
  EXPECT_NE(body_digest(hull(testgen::simplex(3))), a);
  EXPECT_EQ(a.rfind("fnv1a64:", 0), 0u);
}

TEST(Config, DefaultsAndValidation) {
  Config c;
  EXPECT_EQ(c.rule_for(2).kind, RuleKind::kAngularTrapezoid);
  EXPECT_EQ(c.rule_for(3).size, 10000);
  EXPECT_EQ(c.rule_for(5).kind, RuleKind::kMonteCarlo);
  EXPECT_EQ(c.tolerance_for(Theorem::kCauchy, 2).value, 1e-6);
  EXPECT_EQ(c.tolerance_for(Theorem::kCauchy, 4).kind, Tolerance::Kind::kSigmas);
  EXPECT_EQ(c.tolerance_for(Theorem::kSurfaceEq2, 5).kind, Tolerance::Kind::kInradiusDeficit);
  EXPECT_EQ(c.ball_level_for(3), 4);
  EXPECT_EQ(c.ball_level_for(4), 2);
  c.tolerances[Theorem::kMoment] = 0.0;
  EXPECT_THROW(c.validate(), Error);
  Config mc;
  mc.quadrature[4] = {RuleKind::kMonteCarlo, 100, std::nullopt};
  try {
    mc.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingSeed);
  }
  mc.seed = 1;
  EXPECT_NO_THROW(mc.validate());
}

}  // namespace
