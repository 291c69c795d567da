#pragma once

#include <Eigen/Dense>
#include <span>

#include "shadowcalc/vec.hpp"

namespace shadowcalc::detail {

using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

/// Closed-form determinants up to 4x4, partial-pivot LU above.
inline double small_det(const SmallMatrix& m) {
  switch (m.rows()) {
    case 0: return 1.0;
    case 1: return m(0, 0);
    case 2: return Eigen::Matrix2d(m).determinant();
    case 3: return Eigen::Matrix3d(m).determinant();
    case 4: return Eigen::Matrix4d(m).determinant();
    default: return m.determinant();
  }
}

/// Determinant of the square matrix whose rows are `rows`.
inline double det_rows(std::span<const Vec> rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return 1.0;
  SmallMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
  return small_det(m);
}

/// Normal of the hyperplane through d points in R^d (unnormalized):
/// component j is the signed cofactor of the edge matrix with column j removed.
inline Vec hyperplane_normal(std::span<const Vec> pts) {
  const int d = pts[0].dim();
  Vec normal(d);
  if (d == 1) {
    normal[0] = 1.0;
    return normal;
  }
  SmallMatrix edges(d - 1, d);
  for (int r = 1; r < d; ++r)
    for (int c = 0; c < d; ++c) edges(r - 1, c) = pts[r][c] - pts[0][c];
  SmallMatrix minor(d - 1, d - 1);
  for (int j = 0; j < d; ++j) {
    for (int c = 0, mc = 0; c < d; ++c) {
      if (c == j) continue;
      minor.col(mc++) = edges.col(c);
    }
    const double cof = small_det(minor);
    normal[j] = (j % 2 == 0) ? cof : -cof;
  }
  return normal;
}

/// Numerical rank of the matrix whose rows are `rows`.
inline int rank_rows(std::span<const Vec> rows, double threshold) {
  if (rows.empty()) return 0;
  const int cols = rows[0].dim();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), c) = rows[r][c];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

constexpr double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace shadowcalc::detail
