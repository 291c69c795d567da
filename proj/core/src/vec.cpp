#include "shadowcalc/vec.hpp"

#include <algorithm>
#include <sstream>

#include "shadowcalc/error.hpp"

namespace shadowcalc {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) {
    fail(ErrorCode::kDimensionOutOfRange,
         "vector dimension " + std::to_string(dim) + " outside 0.." +
             std::to_string(kMaxDim));
  }
}

}  // namespace

Vec::Vec(int dim) : dim_(dim) { check_dim(dim); }

Vec::Vec(std::initializer_list<double> coords)
    : dim_(static_cast<int>(coords.size())) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Vec Vec::from_span(std::span<const double> coords) {
  Vec v(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), v.c_.begin());
  return v;
}

Vec Vec::unit(int dim, int axis) {
  Vec v(dim);
  if (axis < 0 || axis >= dim) {
    fail(ErrorCode::kInvalidArgument, "axis index out of range");
  }
  v[axis] = 1.0;
  return v;
}

Vec& Vec::operator+=(const Vec& o) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(double s) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

Vec& Vec::operator/=(double s) noexcept {
  for (int i = 0; i < dim_; ++i) c_[i] /= s;
  return *this;
}

double Vec::norm() const noexcept { return std::sqrt(dot(*this, *this)); }

double Vec::max_abs() const noexcept {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

bool Vec::is_finite() const noexcept {
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite(c_[i])) return false;
  }
  return true;
}

double dot(const Vec& a, const Vec& b) noexcept {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

bool lex_less(const Vec& a, const Vec& b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace shadowcalc
