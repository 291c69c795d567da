#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "shadowcalc/vec.hpp"

namespace shadowcalc {

/// Relative tolerance for coplanarity and extremeness decisions; the
/// absolute tolerance of a polytope is this times its scale.
inline constexpr double kRelativeTolerance = 1e-9;

/// One (n-1)-face of a polytope. Non-simplicial facets (cube squares) are
/// stored whole; `pieces` is the simplicial triangulation that measure,
/// centroid and volume are computed from.
struct Facet {
  std::vector<int> vertex_ids;  // ascending, into Polytope::vertices()
  Vec normal;                   // outward, unit length
  double offset = 0.0;          // <normal, x> == offset on the facet
  double measure = 0.0;         // (n-1)-dimensional Hausdorff measure
  Vec centroid;
  std::vector<std::array<int, kMaxDim>> pieces;  // n vertex ids each
};

/// Scalar mass together with the unnormalized first moment (integral of x).
struct Moment {
  double measure = 0.0;
  Vec first_moment;

  /// first_moment / measure; undefined when measure == 0.
  Vec centroid() const { return first_moment / measure; }
};

/// A full-dimensional convex polytope in R^n given by its extreme points and
/// derived facet structure. Immutable once built; obtain one through hull().
class Polytope {
 public:
  int dim() const noexcept { return dim_; }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  /// Max coordinate magnitude over the vertices.
  double scale() const noexcept { return scale_; }
  /// Absolute tolerance used for geometric predicates on this polytope.
  double tolerance() const noexcept { return kRelativeTolerance * scale_; }
  /// A point strictly inside (the vertex average).
  const Vec& interior_point() const noexcept { return interior_; }

 private:
  friend class PolytopeBuilder;
  Polytope() = default;

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  double scale_ = 0.0;
  Vec interior_;
};

/// Convex hull of a point set in R^n, 2 <= n <= 5.
///
/// Duplicates and non-extreme points are dropped. The result is canonical:
/// vertices sorted lexicographically, facets sorted by their vertex ids, so
/// the output depends only on the point set, not on input order.
///
/// Throws DimensionOutOfRange outside 2..5, DimensionMismatch for mixed
/// dimensions, DegenerateInput when the affine hull is not n-dimensional.
Polytope hull(std::span<const Vec> points);

namespace detail {
/// As hull(), but also accepts n == 1 (segments on a line), which is what
/// the shadow of a planar body is.
Polytope hull_any_dim(std::span<const Vec> points);
}  // namespace detail

double volume(const Polytope& k);
double surface_area(const Polytope& k);
Moment volume_moment(const Polytope& k);
Moment boundary_moment(const Polytope& k);

/// Half-space membership with `slack` added to every facet offset.
bool contains(const Polytope& k, const Vec& x, double slack = 0.0);

/// Support function h_K(w) = max over vertices of <v, w>.
double support(const Polytope& k, const Vec& w);

/// Checks every structural invariant; returns human-readable violations
/// (empty when the polytope is valid).
std::vector<std::string> check_invariants(const Polytope& k);

}  // namespace shadowcalc
