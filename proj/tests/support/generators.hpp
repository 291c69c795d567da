#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "shadowcalc/polytope.hpp"

namespace testgen {

using shadowcalc::Vec;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double gaussian() {
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    return r * std::cos(6.283185307179586 * uniform());
  }

 private:
  std::mt19937_64 eng_;
};

inline Vec box_point(Rng& rng, int dim, double lo = -1.0, double hi = 1.0) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

inline Vec direction(Rng& rng, int dim) {
  for (;;) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

inline std::vector<Vec> box_points(Rng& rng, int dim, int count, double lo = -1.0, double hi = 1.0) {
  std::vector<Vec> pts;
  for (int p = 0; p < count; ++p) pts.push_back(box_point(rng, dim, lo, hi));
  return pts;
}

inline std::vector<Vec> sphere_points(Rng& rng, int dim, int count) {
  std::vector<Vec> pts;
  for (int p = 0; p < count; ++p) pts.push_back(direction(rng, dim));
  return pts;
}

/// Hull of dim + 2 .. dim + extra random box points.
inline shadowcalc::Polytope polytope(Rng& rng, int dim, int extra = 10) {
  return shadowcalc::hull(box_points(rng, dim, rng.integer(dim + 2, dim + extra)));
}

/// Rows of a random orthogonal matrix.
inline std::vector<Vec> rotation(Rng& rng, int dim) {
  std::vector<Vec> rows;
  while (static_cast<int>(rows.size()) < dim) {
    Vec v = direction(rng, dim);
    for (const Vec& r : rows) v -= shadowcalc::dot(v, r) * r;
    const double len = v.norm();
    if (len > 1e-3) rows.push_back(v / len);
  }
  return rows;
}

inline Vec apply(const std::vector<Vec>& rows, const Vec& x) {
  Vec y(x.dim());
  for (int i = 0; i < x.dim(); ++i) y[i] = shadowcalc::dot(rows[i], x);
  return y;
}

inline std::vector<Vec> transform(const std::vector<Vec>& pts, const std::vector<Vec>& rows,
                                  const Vec& shift, double scale = 1.0) {
  std::vector<Vec> out;
  for (const Vec& p : pts) out.push_back(scale * apply(rows, p) + shift);
  return out;
}

inline std::vector<Vec> cube(int dim, double lo = 0.0, double hi = 1.0) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = ((mask >> i) & 1) ? hi : lo;
    pts.push_back(v);
  }
  return pts;
}

inline std::vector<Vec> simplex(int dim) {
  std::vector<Vec> pts{Vec(dim)};
  for (int i = 0; i < dim; ++i) pts.push_back(Vec::unit(dim, i));
  return pts;
}

inline std::vector<Vec> cross(int dim) {
  std::vector<Vec> pts;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(Vec::unit(dim, i));
    pts.push_back(-Vec::unit(dim, i));
  }
  return pts;
}

}  // namespace testgen
