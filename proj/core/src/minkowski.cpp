#include "shadowcalc/minkowski.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "linalg.hpp"
#include "shadowcalc/error.hpp"
#include "shadowcalc/shadow.hpp"

namespace shadowcalc {

Segment::Segment(Vec a, Vec b) : a_(a), b_(b) {
  if (a_.dim() != b_.dim()) fail(ErrorCode::kDimensionMismatch, "segment endpoints differ in dimension");
  if (!a_.is_finite() || !b_.is_finite()) fail(ErrorCode::kInvalidArgument, "non-finite segment endpoint");
  length_ = (b_ - a_).norm();
  if (!(length_ > 0.0)) fail(ErrorCode::kDegenerateInput, "segment endpoints coincide");
}

Segment Segment::from_origin(const Vec& u) { return Segment(Vec(u.dim()), u); }

int dim_of(const Body& b) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Polytope>) {
          return x.dim();
        } else if constexpr (std::is_same_v<T, Segment>) {
          return x.dim();
        } else if constexpr (std::is_same_v<T, BallApprox>) {
          return x.poly.dim();
        } else {
          if (x.points.empty()) fail(ErrorCode::kDegenerateInput, "empty point set");
          return x.points.front().dim();
        }
      },
      b);
}

std::vector<Vec> generators(const Body& b) {
  return std::visit(
      [](const auto& x) -> std::vector<Vec> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Polytope>) {
          return x.vertices();
        } else if constexpr (std::is_same_v<T, Segment>) {
          return {Vec(x.dim()), x.vector()};
        } else if constexpr (std::is_same_v<T, BallApprox>) {
          return x.poly.vertices();
        } else {
          return x.points;
        }
      },
      b);
}

Polytope minkowski_sum(const Polytope& a, const Body& b, double eps) {
  if (a.dim() != dim_of(b)) fail(ErrorCode::kDimensionMismatch, "Minkowski summands differ in dimension");
  const std::vector<Vec> gens = generators(b);
  std::vector<Vec> pts;
  pts.reserve(a.vertices().size() * gens.size());
  for (const Vec& v : a.vertices()) {
    for (const Vec& g : gens) pts.push_back(v + eps * g);
  }
  return hull(pts);
}

PointSet minkowski_combination(std::span<const Body> bodies, std::span<const double> coeffs) {
  if (bodies.empty() || bodies.size() != coeffs.size()) {
    fail(ErrorCode::kInvalidArgument, "need one coefficient per body");
  }
  const int n = dim_of(bodies[0]);
  std::vector<Vec> acc{Vec(n)};
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (dim_of(bodies[i]) != n) fail(ErrorCode::kDimensionMismatch, "bodies differ in dimension");
    const std::vector<Vec> gens = generators(bodies[i]);
    std::vector<Vec> next;
    next.reserve(acc.size() * gens.size());
    for (const Vec& p : acc) {
      for (const Vec& g : gens) next.push_back(p + coeffs[i] * g);
    }
    std::sort(next.begin(), next.end(), lex_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  return PointSet{std::move(acc)};
}

namespace {

std::vector<double> resolve_ladder(const Polytope& p, const DerivativeOptions& opts, int degree) {
  std::vector<double> ladder = opts.eps_ladder;
  if (ladder.empty()) {
    const double eps0 = 1e-2 * p.scale();
    const int count = std::max(3, degree);
    for (int k = 0; k < count; ++k) ladder.push_back(std::ldexp(eps0, -k));
  }
  for (double e : ladder) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      fail(ErrorCode::kInvalidArgument, "epsilon ladder entries must be positive and finite");
    }
  }
  std::vector<double> sorted = ladder;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      static_cast<int>(sorted.size()) < degree) {
    fail(ErrorCode::kInvalidArgument,
         "epsilon ladder needs at least " + std::to_string(degree) + " distinct values");
  }
  return ladder;
}

// Least-squares fit of y_c(eps) = sum_{j=1..degree} a_{j,c} eps^j for every
// column c of `values`; returns the linear coefficients a_{1,c}.
Eigen::RowVectorXd linear_coefficients(const std::vector<double>& ladder,
                                       const Eigen::MatrixXd& values, int degree) {
  const double eps_max = *std::max_element(ladder.begin(), ladder.end());
  Eigen::MatrixXd design(static_cast<Eigen::Index>(ladder.size()), degree);
  for (std::size_t r = 0; r < ladder.size(); ++r) {
    const double t = ladder[r] / eps_max;
    double pw = t;
    for (int j = 0; j < degree; ++j) {
      design(static_cast<Eigen::Index>(r), j) = pw;
      pw *= t;
    }
  }
  const Eigen::MatrixXd coeffs = design.colPivHouseholderQr().solve(values);
  return coeffs.row(0) / eps_max;
}

const Segment* as_segment(const Body& u) { return std::get_if<Segment>(&u); }

// vol(P + eps Z) has degree dim(aff Z) in eps.
int volume_degree(const Polytope& p, const Body& u) {
  const auto* set = std::get_if<PointSet>(&u);
  if (set == nullptr || set->points.empty()) return p.dim();
  std::vector<Vec> diffs;
  for (const Vec& x : set->points) diffs.push_back(x - set->points.front());
  return std::max(1, detail::rank_rows(diffs, kRelativeTolerance));
}

void check_dims(const Polytope& p, const Body& u) {
  if (p.dim() != dim_of(u)) fail(ErrorCode::kDimensionMismatch, "body and direction set differ in dimension");
}

}  // namespace

double dir_derivative_volume(const Polytope& p, const Body& u, const DerivativeOptions& opts) {
  check_dims(p, u);
  const double base = volume(p);
  if (const Segment* seg = as_segment(u)) {
    return volume(minkowski_sum(p, *seg, 1.0)) - base;
  }
  const int degree = volume_degree(p, u);
  const std::vector<double> ladder = resolve_ladder(p, opts, degree);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(ladder.size()), 1);
  for (std::size_t r = 0; r < ladder.size(); ++r) {
    values(static_cast<Eigen::Index>(r), 0) = volume(minkowski_sum(p, u, ladder[r])) - base;
  }
  return linear_coefficients(ladder, values, degree)(0);
}

Moment dir_derivative_moment(const Polytope& k, const Body& u, const DerivativeOptions& opts) {
  check_dims(k, u);
  if (const Segment* seg = as_segment(u)) {
    const Vec w = seg->vector();
    const double len = w.norm();
    const IlluminatedBoundary lit = illuminated(k, Direction(w));
    return Moment{len * lit.weighted_moment.measure, len * lit.weighted_moment.first_moment};
  }
  return dir_derivative_moment_quotient(k, u, opts);
}

Moment dir_derivative_moment_quotient(const Polytope& k, const Body& u,
                                      const DerivativeOptions& opts) {
  check_dims(k, u);
  const int n = k.dim();
  const int degree = n + 1;
  const std::vector<double> ladder = resolve_ladder(k, opts, degree);
  const Moment base = volume_moment(k);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(ladder.size()), n + 1);
  for (std::size_t r = 0; r < ladder.size(); ++r) {
    const Moment m = volume_moment(minkowski_sum(k, u, ladder[r]));
    const auto row = static_cast<Eigen::Index>(r);
    values(row, 0) = m.measure - base.measure;
    for (int i = 0; i < n; ++i) values(row, i + 1) = m.first_moment[i] - base.first_moment[i];
  }
  const Eigen::RowVectorXd lin = linear_coefficients(ladder, values, degree);
  Moment out{lin(0), Vec(n)};
  for (int i = 0; i < n; ++i) out.first_moment[i] = lin(i + 1);
  return out;
}

}  // namespace shadowcalc
