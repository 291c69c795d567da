#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "linalg.hpp"
#include "shadowcalc/polytope.hpp"

namespace shadowcalc {

namespace {

// Visits every simplex of the fan from the interior point over the facet
// triangulation, passing its volume and vertex average.
template <typename F>
void for_each_fan_simplex(const Polytope& k, F&& visit) {
  const int d = k.dim();
  const Vec& apex = k.interior_point();
  const double norm = detail::factorial(d);
  std::array<Vec, kMaxDim> rows;
  for (const Facet& f : k.facets()) {
    for (const auto& piece : f.pieces) {
      Vec mean = apex;
      for (int i = 0; i < d; ++i) {
        const Vec& p = k.vertices()[piece[i]];
        rows[i] = p - apex;
        mean += p;
      }
      mean /= static_cast<double>(d + 1);
      const double vol =
          std::abs(detail::det_rows({rows.data(), static_cast<std::size_t>(d)})) / norm;
      visit(vol, mean);
    }
  }
}

}  // namespace

double volume(const Polytope& k) {
  double total = 0.0;
  for_each_fan_simplex(k, [&](double vol, const Vec&) { total += vol; });
  return total;
}

double surface_area(const Polytope& k) {
  double total = 0.0;
  for (const Facet& f : k.facets()) total += f.measure;
  return total;
}

Moment volume_moment(const Polytope& k) {
  Moment m{0.0, Vec(k.dim())};
  for_each_fan_simplex(k, [&](double vol, const Vec& mean) {
    m.measure += vol;
    m.first_moment += vol * mean;
  });
  return m;
}

Moment boundary_moment(const Polytope& k) {
  Moment m{0.0, Vec(k.dim())};
  for (const Facet& f : k.facets()) {
    m.measure += f.measure;
    m.first_moment += f.measure * f.centroid;
  }
  return m;
}

bool contains(const Polytope& k, const Vec& x, double slack) {
  for (const Facet& f : k.facets()) {
    if (dot(f.normal, x) > f.offset + slack) return false;
  }
  return true;
}

double support(const Polytope& k, const Vec& w) {
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec& v : k.vertices()) h = std::max(h, dot(v, w));
  return h;
}

std::vector<std::string> check_invariants(const Polytope& k) {
  std::vector<std::string> issues;
  auto report = [&](const std::string& what) { issues.push_back(what); };
  const double tol = std::max(k.tolerance(), 1e-12);
  const int d = k.dim();

  if (d < 1 || d > kMaxDim) report("dimension out of range");
  for (const Vec& v : k.vertices()) {
    if (!v.is_finite()) report("non-finite vertex " + to_string(v));
  }
  for (std::size_t fi = 0; fi < k.facets().size(); ++fi) {
    const Facet& f = k.facets()[fi];
    const std::string tag = "facet " + std::to_string(fi) + ": ";
    if (std::abs(f.normal.norm() - 1.0) > 1e-12) report(tag + "normal not unit length");
    if (!(f.measure > 0.0)) report(tag + "non-positive measure");
    for (int id : f.vertex_ids) {
      if (std::abs(dot(f.normal, k.vertices()[id]) - f.offset) > tol) {
        report(tag + "vertex " + std::to_string(id) + " off the facet plane");
      }
    }
    if (std::abs(dot(f.normal, f.centroid) - f.offset) > tol) {
      report(tag + "centroid off the facet plane");
    }
    for (std::size_t vi = 0; vi < k.vertices().size(); ++vi) {
      if (dot(f.normal, k.vertices()[vi]) > f.offset + tol) {
        report(tag + "vertex " + std::to_string(vi) + " outside");
      }
    }
  }
  std::vector<std::vector<Vec>> incident(k.vertices().size());
  for (const Facet& f : k.facets()) {
    for (int id : f.vertex_ids) incident[id].push_back(f.normal);
  }
  for (std::size_t vi = 0; vi < incident.size(); ++vi) {
    if (detail::rank_rows(incident[vi], 1e-9) != d) {
      report("vertex " + std::to_string(vi) + " is not extreme");
    }
  }
  if (!(volume(k) > 0.0)) report("non-positive volume");
  if (d == 3) {
    std::size_t incidences = 0;
    for (const Facet& f : k.facets()) incidences += f.vertex_ids.size();
    const long long v = static_cast<long long>(k.vertices().size());
    const long long e = static_cast<long long>(incidences / 2);
    const long long fc = static_cast<long long>(k.facets().size());
    if (incidences % 2 != 0 || v - e + fc != 2) {
      std::ostringstream os;
      os << "Euler characteristic V - E + F = " << v << " - " << e << " + " << fc << " != 2";
      report(os.str());
    }
  }
  return issues;
}

}  // namespace shadowcalc
