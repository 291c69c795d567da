#include "shadowcalc/shadow.hpp"

#include <cmath>

#include "shadowcalc/error.hpp"

namespace shadowcalc {

Direction::Direction(const Vec& u) {
  const double len = u.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    fail(ErrorCode::kZeroDirection, "zero direction");
  }
  u_ = u / len;
  const int n = u_.dim();
  int drop = 0;
  for (int i = 1; i < n; ++i) {
    if (std::abs(u_[i]) > std::abs(u_[drop])) drop = i;
  }
  for (int axis = 0; axis < n; ++axis) {
    if (axis == drop) continue;
    Vec w = Vec::unit(n, axis);
    for (int pass = 0; pass < 2; ++pass) {
      w -= dot(w, u_) * u_;
      for (const Vec& b : basis_) w -= dot(w, b) * b;
    }
    basis_.push_back(w / w.norm());
  }
}

Vec Direction::to_plane(const Vec& x) const {
  Vec out(dim() - 1);
  for (int i = 0; i + 1 < dim(); ++i) out[i] = dot(x, basis_[i]);
  return out;
}

Polytope project(const Polytope& k, const Direction& d) {
  if (k.dim() != d.dim()) fail(ErrorCode::kDimensionMismatch, "direction dimension mismatch");
  std::vector<Vec> pts;
  pts.reserve(k.vertices().size());
  for (const Vec& v : k.vertices()) pts.push_back(d.to_plane(v));
  try {
    return detail::hull_any_dim(pts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDegenerateInput) {
      fail(ErrorCode::kInternal, std::string("projection of a full-dimensional body collapsed: ") +
                                     e.what());
    }
    throw;
  }
}

double shadow_area(const Polytope& k, const Direction& d) { return volume(project(k, d)); }

double shadow_area_half_sum(const Polytope& k, const Direction& d) {
  if (k.dim() != d.dim()) fail(ErrorCode::kDimensionMismatch, "direction dimension mismatch");
  double total = 0.0;
  for (const Facet& f : k.facets()) total += std::abs(dot(f.normal, d.u())) * f.measure;
  return 0.5 * total;
}

IlluminatedBoundary illuminated(const Polytope& k, const Direction& d) {
  if (k.dim() != d.dim()) fail(ErrorCode::kDimensionMismatch, "direction dimension mismatch");
  IlluminatedBoundary out{d, {}, 0, {0.0, Vec(k.dim())}, {0.0, Vec(k.dim())}};
  for (int i = 0; i < static_cast<int>(k.facets().size()); ++i) {
    const Facet& f = k.facets()[i];
    const double c = dot(f.normal, d.u());
    if (std::abs(c) <= kTangentTolerance) {
      ++out.tangent_count;
      continue;
    }
    if (c < 0.0) continue;
    out.facet_ids.push_back(i);
    out.weighted_moment.measure += c * f.measure;
    out.weighted_moment.first_moment += (c * f.measure) * f.centroid;
    out.unweighted_moment.measure += f.measure;
    out.unweighted_moment.first_moment += f.measure * f.centroid;
  }
  return out;
}

}  // namespace shadowcalc
