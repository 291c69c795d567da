#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>

namespace shadowcalc {

inline constexpr int kMaxDim = 5;

/// A point or direction in R^n with 0 <= n <= kMaxDim, stored inline.
///
/// Dimension 0 is the default-constructed empty vector. Dimension 1 only
/// appears as the coordinate space of a planar shadow; bodies themselves
/// live in 2..5.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim);
  Vec(std::initializer_list<double> coords);

  static Vec from_span(std::span<const double> coords);
  static Vec unit(int dim, int axis);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }

  std::span<const double> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }
  const double* begin() const noexcept { return c_.data(); }
  const double* end() const noexcept { return c_.data() + dim_; }

  Vec& operator+=(const Vec& o) noexcept;
  Vec& operator-=(const Vec& o) noexcept;
  Vec& operator*=(double s) noexcept;
  Vec& operator/=(double s) noexcept;

  double norm() const noexcept;
  double max_abs() const noexcept;
  bool is_finite() const noexcept;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

inline Vec operator+(Vec a, const Vec& b) noexcept { return a += b; }
inline Vec operator-(Vec a, const Vec& b) noexcept { return a -= b; }
inline Vec operator*(Vec a, double s) noexcept { return a *= s; }
inline Vec operator*(double s, Vec a) noexcept { return a *= s; }
inline Vec operator/(Vec a, double s) noexcept { return a /= s; }
inline Vec operator-(Vec a) noexcept { return a *= -1.0; }

double dot(const Vec& a, const Vec& b) noexcept;
inline double norm(const Vec& a) noexcept { return a.norm(); }

/// Strict lexicographic order; used to canonicalize vertex lists.
bool lex_less(const Vec& a, const Vec& b) noexcept;

std::string to_string(const Vec& v);

}  // namespace shadowcalc
