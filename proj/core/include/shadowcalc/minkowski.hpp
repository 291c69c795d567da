#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shadowcalc/polytope.hpp"

namespace shadowcalc {

/// The segment [a, b]. Minkowski operations use the canonical form
/// [0, b - a]; translating a segment does not change any derivative.
class Segment {
 public:
  /// Throws DimensionMismatch, or DegenerateInput when a == b.
  Segment(Vec a, Vec b);
  static Segment from_origin(const Vec& u);

  int dim() const noexcept { return a_.dim(); }
  const Vec& a() const noexcept { return a_; }
  const Vec& b() const noexcept { return b_; }
  Vec vector() const { return b_ - a_; }
  double length() const noexcept { return length_; }

 private:
  Vec a_;
  Vec b_;
  double length_ = 0.0;
};

/// Convex hull of a finite point set of any affine dimension, e.g. the
/// parallelogram a[0,u] + b[0,v]. Used where a lower-dimensional convex
/// body must be Minkowski-added to a full-dimensional one.
struct PointSet {
  std::vector<Vec> points;
};

/// Polytope inscribed in the unit ball with every vertex on the sphere.
struct BallApprox {
  int level = 0;
  Polytope poly;
  double inradius = 0.0;
};

using Body = std::variant<Polytope, Segment, BallApprox, PointSet>;

int dim_of(const Body& b);
/// Points whose convex hull is the body (segments as {0, b - a}).
std::vector<Vec> generators(const Body& b);

/// Hull of {a + eps * g : a in vertices(A), g in generators(B)}.
/// Throws DimensionMismatch.
Polytope minkowski_sum(const Polytope& a, const Body& b, double eps = 1.0);

/// Generators of c_1 B_1 + ... + c_m B_m (all pairwise sums).
PointSet minkowski_combination(std::span<const Body> bodies, std::span<const double> coeffs);

/// Controls the epsilon ladder of the polynomial-fit derivative. An empty
/// ladder means eps_0 * 2^-k, k = 0..max(3, degree)-1, eps_0 = 1e-2 * scale(P).
struct DerivativeOptions {
  std::vector<double> eps_ladder;
};

/// lim_{eps->0+} (vol(P + eps u) - vol(P)) / eps.
///
/// vol(P + eps u) is a polynomial in eps of degree at most n, and at most the
/// affine dimension of u for point sets, so the limit is read off as the
/// linear coefficient of an exact fit over the ladder. A segment
/// sweeps exactly eps * shadow, so for segments eps = 1 is used directly.
double dir_derivative_volume(const Polytope& p, const Body& u, const DerivativeOptions& opts = {});

/// Derivative of (vol, first moment) along u. For a segment [0, u] this is the
/// closed form sum_F <nu_F, u>^+ |F| (|F|, centroid(F)) over the illuminated
/// facets; other bodies use dir_derivative_moment_quotient.
Moment dir_derivative_moment(const Polytope& k, const Body& u, const DerivativeOptions& opts = {});

/// Same derivative through the first-moment polynomial of K + eps u, which
/// has degree <= n + 1 in eps. Independent of the facet-sum route.
Moment dir_derivative_moment_quotient(const Polytope& k, const Body& u,
                                      const DerivativeOptions& opts = {});

/// Inscribed polytope approximating the unit ball:
///   n = 2: regular 3 * 2^(level+2)-gon with a vertex on e1,
///   n = 3: icosphere after `level` midpoint subdivisions,
///   n = 4, 5: hull of the first 2^(level+6) Halton points that land in the
///             unit ball, radially projected onto the sphere.
/// Vertex sets are nested in `level`. Throws DimensionOutOfRange.
BallApprox ball_approx(int dim, int level);

/// Coefficients V(K_i1, ..., K_in) of the volume polynomial
/// vol(l_1 K_1 + ... + l_m K_m) = sum over monomials, keyed by the sorted
/// multiset of body indices.
struct MixedVolumeTable {
  std::vector<std::string> bodies;
  std::map<std::vector<int>, double> coefficients;
  double fit_residual = 0.0;
  double condition_number = 0.0;

  /// Lookup by multiset in any order.
  double at(std::vector<int> multiset) const;
};

/// Deterministic tensor grid {0.25, 0.5, ..., 2.0}^m.
std::vector<std::vector<double>> default_lambda_grid(int bodies);

/// Least-squares fit of the homogeneous degree-n volume polynomial over the
/// grid. Requires 2 <= m <= 3 bodies, grid size >= number of monomials, and
/// every lambda in (0, 2]. Throws IllConditionedGrid when the design matrix
/// condition number exceeds 1e8.
MixedVolumeTable mixed_volume_fit(std::span<const Polytope> bodies,
                                  std::span<const std::vector<double>> lambda_grid,
                                  std::vector<std::string> names = {});

/// Overload accepting arbitrary bodies; anything that is not full-dimensional
/// (segments, lower-dimensional point sets) is rejected with DegenerateInput.
MixedVolumeTable mixed_volume_fit(std::span<const Body> bodies,
                                  std::span<const std::vector<double>> lambda_grid,
                                  std::vector<std::string> names = {});

}  // namespace shadowcalc
