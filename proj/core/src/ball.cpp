#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "shadowcalc/error.hpp"
#include "shadowcalc/minkowski.hpp"

namespace shadowcalc {

namespace {

std::vector<Vec> polygon_vertices(int level) {
  const int count = 3 << (level + 2);
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * k / count;
    pts.push_back(Vec{std::cos(t), std::sin(t)});
  }
  return pts;
}

std::vector<Vec> icosphere_vertices(int level) {
  const double phi = std::numbers::phi;
  std::vector<Vec> pts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (Vec& p : pts) p /= p.norm();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  for (int round = 0; round < level; ++round) {
    std::map<std::pair<int, int>, int> midpoints;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      Vec m = pts[a] + pts[b];
      m /= m.norm();
      const int id = static_cast<int>(pts.size());
      pts.push_back(m);
      midpoints.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = midpoint(f[0], f[1]);
      const int bc = midpoint(f[1], f[2]);
      const int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return pts;
}

double radical_inverse(unsigned long long index, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

std::vector<Vec> halton_sphere_vertices(int dim, int level) {
  static constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11};
  const std::size_t count = std::size_t{1} << (level + 6);
  std::vector<Vec> pts;
  pts.reserve(count);
  for (unsigned long long i = 1; pts.size() < count; ++i) {
    Vec x(dim);
    for (int j = 0; j < dim; ++j) x[j] = 2.0 * radical_inverse(i, kPrimes[j]) - 1.0;
    const double r2 = dot(x, x);
    if (r2 > 1.0 || r2 < 1e-6) continue;
    pts.push_back(x / std::sqrt(r2));
  }
  return pts;
}

}  // namespace

BallApprox ball_approx(int dim, int level) {
  if (dim < 2 || dim > kMaxDim) {
    fail(ErrorCode::kDimensionOutOfRange, "ball dimension " + std::to_string(dim) + " outside 2..5");
  }
  const int max_level = dim == 2 ? 20 : dim == 3 ? 7 : 8;
  if (level < 0 || level > max_level) {
    fail(ErrorCode::kInvalidArgument,
         "ball level must be in 0.." + std::to_string(max_level) + " for dimension " +
             std::to_string(dim));
  }
  std::vector<Vec> pts;
  switch (dim) {
    case 2: pts = polygon_vertices(level); break;
    case 3: pts = icosphere_vertices(level); break;
    default: pts = halton_sphere_vertices(dim, level); break;
  }
  BallApprox out{level, hull(pts), 0.0};
  double inradius = 1.0;
  for (const Facet& f : out.poly.facets()) inradius = std::min(inradius, f.offset);
  out.inradius = inradius;
  return out;
}

}  // namespace shadowcalc
