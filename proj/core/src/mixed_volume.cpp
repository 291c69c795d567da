#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "shadowcalc/error.hpp"
#include "shadowcalc/minkowski.hpp"

namespace shadowcalc {

namespace {

void multisets(int m, int size, int start, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < m; ++i) {
    current.push_back(i);
    multisets(m, size, i, current, out);
    current.pop_back();
  }
}

double multinomial(const std::vector<int>& multiset, int m) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (int i : multiset) ++counts[i];
  double r = std::tgamma(static_cast<double>(multiset.size()) + 1.0);
  for (int c : counts) r /= std::tgamma(c + 1.0);
  return std::round(r);
}

}  // namespace

double MixedVolumeTable::at(std::vector<int> multiset) const {
  std::sort(multiset.begin(), multiset.end());
  auto it = coefficients.find(multiset);
  if (it == coefficients.end()) fail(ErrorCode::kInvalidArgument, "multiset not in table");
  return it->second;
}

std::vector<std::vector<double>> default_lambda_grid(int bodies) {
  std::vector<std::vector<double>> grid{{}};
  for (int b = 0; b < bodies; ++b) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : grid) {
      for (int k = 1; k <= 8; ++k) {
        auto row = prefix;
        row.push_back(0.25 * k);
        next.push_back(std::move(row));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

MixedVolumeTable mixed_volume_fit(std::span<const Polytope> bodies,
                                  std::span<const std::vector<double>> lambda_grid,
                                  std::vector<std::string> names) {
  const int m = static_cast<int>(bodies.size());
  if (m < 2 || m > 3) fail(ErrorCode::kInvalidArgument, "mixed_volume_fit takes 2 or 3 bodies");
  const int n = bodies[0].dim();
  for (const Polytope& b : bodies) {
    if (b.dim() != n) fail(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
  }
  std::vector<std::vector<int>> monomials;
  std::vector<int> scratch;
  multisets(m, n, 0, scratch, monomials);
  const auto rows = static_cast<Eigen::Index>(lambda_grid.size());
  const auto cols = static_cast<Eigen::Index>(monomials.size());
  if (rows < cols) {
    fail(ErrorCode::kInvalidArgument, "lambda grid has " + std::to_string(rows) +
                                          " points but the fit needs " + std::to_string(cols));
  }
  for (const auto& lambda : lambda_grid) {
    if (static_cast<int>(lambda.size()) != m) {
      fail(ErrorCode::kInvalidArgument, "lambda vector length must equal the number of bodies");
    }
    for (double l : lambda) {
      if (!(l > 0.0 && l <= 2.0)) fail(ErrorCode::kInvalidArgument, "lambda components must lie in (0, 2]");
    }
  }

  Eigen::MatrixXd design(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double term = 1.0;
      for (int i : monomials[c]) term *= lambda_grid[r][i];
      design(r, c) = term;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                              : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e8)) {
    fail(ErrorCode::kIllConditionedGrid,
         "monomial design matrix condition number " + std::to_string(cond) + " exceeds 1e8");
  }

  const std::vector<Body> as_bodies(bodies.begin(), bodies.end());
  Eigen::VectorXd volumes(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const PointSet combo = minkowski_combination(as_bodies, lambda_grid[r]);
    volumes(r) = volume(hull(combo.points));
  }
  const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(volumes);

  MixedVolumeTable table;
  table.bodies = std::move(names);
  for (int i = static_cast<int>(table.bodies.size()); i < m; ++i) {
    table.bodies.push_back("K" + std::to_string(i + 1));
  }
  table.fit_residual = (design * coeffs - volumes).cwiseAbs().maxCoeff();
  table.condition_number = cond;
  for (Eigen::Index c = 0; c < cols; ++c) {
    table.coefficients[monomials[c]] = coeffs(c) / multinomial(monomials[c], m);
  }
  return table;
}

MixedVolumeTable mixed_volume_fit(std::span<const Body> bodies,
                                  std::span<const std::vector<double>> lambda_grid,
                                  std::vector<std::string> names) {
  std::vector<Polytope> polys;
  for (const Body& b : bodies) {
    if (const auto* p = std::get_if<Polytope>(&b)) {
      polys.push_back(*p);
    } else if (const auto* ball = std::get_if<BallApprox>(&b)) {
      polys.push_back(ball->poly);
    } else if (std::holds_alternative<Segment>(b)) {
      fail(ErrorCode::kDegenerateInput,
           "segments are not full-dimensional bodies; use the segment path of "
           "dir_derivative_volume or a thin box");
    } else {
      polys.push_back(hull(std::get<PointSet>(b).points));
    }
  }
  return mixed_volume_fit(std::span<const Polytope>(polys), lambda_grid, std::move(names));
}

}  // namespace shadowcalc
