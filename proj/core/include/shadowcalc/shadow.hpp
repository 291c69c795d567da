#pragma once

#include <vector>

#include "shadowcalc/polytope.hpp"

namespace shadowcalc {

/// A unit direction u together with a fixed orthonormal basis of u^perp.
///
/// The basis is Gram-Schmidt over the standard axes with the axis of largest
/// |u_i| dropped (lowest index wins ties), so projected coordinates are
/// reproducible.
class Direction {
 public:
  /// Normalizes `u`; throws ZeroDirection for the zero (or non-finite) vector.
  explicit Direction(const Vec& u);

  int dim() const noexcept { return u_.dim(); }
  const Vec& u() const noexcept { return u_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  /// Coordinates of x's orthogonal projection onto u^perp in basis().
  Vec to_plane(const Vec& x) const;

  Direction operator-() const { return Direction(-u_); }

 private:
  Vec u_;
  std::vector<Vec> basis_;
};

/// K | u^perp as an (n-1)-dimensional polytope in the coordinates of d.basis().
Polytope project(const Polytope& k, const Direction& d);

/// (n-1)-volume of project(k, d).
double shadow_area(const Polytope& k, const Direction& d);

/// Same quantity from the facet data alone: (1/2) sum_F |<nu_F, u>| |F|.
/// Every line parallel to u through the shadow enters and leaves K once.
double shadow_area_half_sum(const Polytope& k, const Direction& d);

/// Facets of K first swept when K is translated along u.
struct IlluminatedBoundary {
  Direction direction;
  std::vector<int> facet_ids;  // <nu_F, u> > kTangentTolerance
  int tangent_count = 0;       // |<nu_F, u>| <= kTangentTolerance, excluded
  /// measure = sum <nu_F,u>|F|, first_moment = sum <nu_F,u>|F| centroid(F)
  Moment weighted_moment;
  /// measure = sum |F|, first_moment = sum |F| centroid(F)
  Moment unweighted_moment;
};

inline constexpr double kTangentTolerance = 1e-9;

IlluminatedBoundary illuminated(const Polytope& k, const Direction& d);

}  // namespace shadowcalc
