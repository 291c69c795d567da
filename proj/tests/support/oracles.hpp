#pragma once

#include <vector>

#include "shadowcalc/vec.hpp"

// Reference implementations that share no code with the library: facets come
// from brute-force enumeration of supporting hyperplanes over all point
// subsets, measures from recursion on facet dimension.
namespace oracle {

using shadowcalc::Vec;

struct Facet {
  Vec normal;  // outward unit
  double offset = 0.0;
  std::vector<Vec> points;  // input points on the facet
  double measure = 0.0;
};

/// Supporting facets of conv(points) in R^m, m >= 2.
std::vector<Facet> facets(const std::vector<Vec>& points);

/// m-volume of conv(points) for points in R^m, m >= 1.
double volume(const std::vector<Vec>& points);
double surface_area(const std::vector<Vec>& points);

/// Shoelace area of conv(points) in R^2 after an angular sort.
double shoelace(const std::vector<Vec>& points);

/// sum_F h_Q(nu_F) |F|: the derivative of vol(P + eps Q) at 0.
double mixed_derivative(const std::vector<Vec>& p, const std::vector<Vec>& q);

/// Volume of the unit d-ball via the Gamma function.
double ball_volume(int d);

}  // namespace oracle
