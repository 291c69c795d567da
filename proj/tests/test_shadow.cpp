#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "shadowcalc/error.hpp"
#include "shadowcalc/minkowski.hpp"
#include "shadowcalc/shadow.hpp"

namespace {

using namespace shadowcalc;
using testgen::Rng;

const double kSqrt3 = std::sqrt(3.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(Direction, NormalizesAndBuildsOrthonormalBasis) {
  Rng rng(31);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Vec raw = 3.5 * testgen::direction(rng, n);
      const Direction d(raw);
      EXPECT_NEAR(d.u().norm(), 1.0, 1e-12);
      ASSERT_EQ(static_cast<int>(d.basis().size()), n - 1);
      for (int i = 0; i < n - 1; ++i) {
        EXPECT_NEAR(dot(d.basis()[i], d.u()), 0.0, 1e-12);
        for (int j = 0; j < n - 1; ++j) {
          EXPECT_NEAR(dot(d.basis()[i], d.basis()[j]), i == j ? 1.0 : 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(Direction, BasisDropsLargestAxisWithLowestIndexTieBreak) {
  const Direction d(Vec{1, 1, 0});
  // Axis 0 is dropped: the basis starts from e2 and e3.
  EXPECT_NEAR(std::abs(d.basis()[0][2]) + std::abs(d.basis()[1][2]), 1.0, 1e-12);
  const Direction e(Vec{0, 0, 2});
  EXPECT_EQ(e.basis()[0], (Vec{1, 0, 0}));
  EXPECT_EQ(e.basis()[1], (Vec{0, 1, 0}));
}

TEST(Direction, RejectsZeroAndNonFinite) {
  try {
    Direction d(Vec{0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDirection);
    EXPECT_STREQ(e.what(), "zero direction");
  }
  EXPECT_THROW(Direction(Vec{NAN, 1, 0}), Error);
}

TEST(Shadow, CubeExamples) {
  const Polytope cube = hull(testgen::cube(3));
  EXPECT_NEAR(shadow_area(cube, Direction(Vec{0, 0, 1})), 1.0, 1e-15);
  EXPECT_NEAR(shadow_area(cube, Direction(Vec{1, 1, 1})), kSqrt3, 1e-14);
  EXPECT_NEAR(shadow_area_half_sum(cube, Direction(Vec{1, 1, 1})), kSqrt3, 1e-14);
  const Polytope hexagon = project(cube, Direction(Vec{1, 1, 1}));
  EXPECT_EQ(hexagon.dim(), 2);
  EXPECT_EQ(hexagon.vertices().size(), 6u);
}

TEST(Shadow, SquareWidthMatchesSupportSampling) {
  const Polytope square = hull(testgen::cube(2));
  for (int i = 0; i < 37; ++i) {
    const double t = 0.17 * i;
    const Vec u{std::cos(t), std::sin(t)};
    const Direction d(u);
    const Vec w = d.basis()[0];
    const double width = support(square, w) + support(square, -w);
    EXPECT_NEAR(shadow_area(square, d), width, 1e-14);
    EXPECT_NEAR(width, std::abs(std::cos(t)) + std::abs(std::sin(t)), 1e-14);
  }
}

TEST(Shadow, HypercubeShadowIsL1NormOfDirection) {
  Rng rng(32);
  for (int n = 2; n <= 5; ++n) {
    const Polytope cube = hull(testgen::cube(n));
    for (int trial = 0; trial < 10; ++trial) {
      const Vec u = testgen::direction(rng, n);
      double l1 = 0.0;
      for (double x : u) l1 += std::abs(x);
      EXPECT_NEAR(shadow_area(cube, Direction(u)), l1, 1e-12);
    }
  }
}

TEST(Shadow, BallShadowIsNearUnitDisk) {
  const BallApprox ball = ball_approx(3, 4);
  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const double s = shadow_area(ball.poly, Direction(testgen::direction(rng, 3)));
    EXPECT_LT(std::abs(s - std::numbers::pi), 0.01 * std::numbers::pi);
  }
}

TEST(Shadow, TwoMethodsAgree) {
  Rng rng(34);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const Polytope k = testgen::polytope(rng, n);
      const Direction d(testgen::direction(rng, n));
      const double hull_area = shadow_area(k, d);
      EXPECT_NEAR(shadow_area_half_sum(k, d), hull_area, 1e-9 * hull_area);
    }
  }
}

TEST(Shadow, ProjectionMatchesBruteForceOracle) {
  Rng rng(35);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const Polytope k = testgen::polytope(rng, n, 8);
      const Direction d(testgen::direction(rng, n));
      std::vector<Vec> projected;
      for (const Vec& v : k.vertices()) projected.push_back(d.to_plane(v));
      EXPECT_NEAR(shadow_area(k, d), oracle::volume(projected), 1e-10);
    }
  }
}

TEST(Shadow, AntipodalSymmetry) {
  Rng rng(36);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Polytope k = testgen::polytope(rng, n);
      const Direction d(testgen::direction(rng, n));
      const double a = shadow_area(k, d);
      EXPECT_NEAR(shadow_area(k, -d), a, 1e-12 * a);
    }
  }
}

TEST(Shadow, RotationEquivariance) {
  Rng rng(37);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto pts = testgen::box_points(rng, n, n + 7);
      const auto rot = testgen::rotation(rng, n);
      const Vec u = testgen::direction(rng, n);
      const double a = shadow_area(hull(pts), Direction(u));
      const double b = shadow_area(hull(testgen::transform(pts, rot, testgen::box_point(rng, n))),
                                   Direction(testgen::apply(rot, u)));
      EXPECT_NEAR(a, b, 1e-9 * a);
    }
  }
}

TEST(Shadow, ProjectionDerivativeIdentity) {
  Rng rng(38);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const Polytope k = testgen::polytope(rng, n);
      const Vec u = testgen::direction(rng, n);
      const double area = shadow_area(k, Direction(u));
      EXPECT_NEAR(dir_derivative_volume(k, Segment::from_origin(u)), area, 1e-9 * area);
    }
  }
}

TEST(Illuminated, CubeExamples) {
  const Polytope cube = hull(testgen::cube(3));
  const IlluminatedBoundary top = illuminated(cube, Direction(Vec{0, 0, 1}));
  EXPECT_EQ(top.facet_ids.size(), 1u);
  EXPECT_EQ(top.tangent_count, 4);
  EXPECT_NEAR(top.weighted_moment.first_moment[0], 0.5, 1e-15);
  EXPECT_NEAR(top.weighted_moment.first_moment[1], 0.5, 1e-15);
  EXPECT_NEAR(top.weighted_moment.first_moment[2], 1.0, 1e-15);

  const IlluminatedBoundary diag = illuminated(cube, Direction(Vec{1, 1, 1}));
  EXPECT_EQ(diag.facet_ids.size(), 3u);
  EXPECT_EQ(diag.tangent_count, 0);
  EXPECT_NEAR(diag.weighted_moment.measure, kSqrt3, 1e-14);
}

TEST(Illuminated, SquareDiagonal) {
  const IlluminatedBoundary ib = illuminated(hull(testgen::cube(2)), Direction(Vec{1, 1}));
  EXPECT_EQ(ib.facet_ids.size(), 2u);
  EXPECT_NEAR(ib.unweighted_moment.first_moment[0], 1.5, 1e-15);
  EXPECT_NEAR(ib.unweighted_moment.first_moment[1], 1.5, 1e-15);
  EXPECT_NEAR(ib.weighted_moment.first_moment[0], kInvSqrt2 * 1.5, 1e-15);
  EXPECT_NEAR(ib.weighted_moment.first_moment[1], kInvSqrt2 * 1.5, 1e-15);
}

TEST(Illuminated, FacetsArePartitioned) {
  Rng rng(39);
  for (int n = 2; n <= 5; ++n) {
    const Polytope k = testgen::polytope(rng, n);
    const Direction d(testgen::direction(rng, n));
    const IlluminatedBoundary lit = illuminated(k, d);
    const IlluminatedBoundary dark = illuminated(k, -d);
    EXPECT_EQ(lit.facet_ids.size() + dark.facet_ids.size() + lit.tangent_count, k.facets().size());
    EXPECT_EQ(lit.tangent_count, dark.tangent_count);
  }
}

TEST(Illuminated, PrismIdentity) {
  Rng rng(40);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const Polytope k = testgen::polytope(rng, n);
      const Direction d(testgen::direction(rng, n));
      const double area = shadow_area(k, d);
      EXPECT_NEAR(illuminated(k, d).weighted_moment.measure, area, 1e-9 * area);
    }
  }
}

TEST(Illuminated, MomentDerivativeIdentity) {
  Rng rng(41);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Polytope k = testgen::polytope(rng, n);
      const Vec u = testgen::direction(rng, n);
      const Vec closed = illuminated(k, Direction(u)).weighted_moment.first_moment;
      const Vec quotient = dir_derivative_moment_quotient(k, Segment::from_origin(u)).first_moment;
      EXPECT_LE((closed - quotient).max_abs(), 1e-6 * closed.max_abs()) << "n=" << n;
    }
  }
}

}  // namespace
