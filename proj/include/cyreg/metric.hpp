#pragma once

#include <cstddef>
#include <string>

#include "cyreg/matching.hpp"
#include "cyreg/persistence.hpp"

namespace cyreg {

enum class Norm { sup, euclidean };

std::string to_string(Norm norm);
Norm parse_norm(const std::string& name);

struct MetricParams {
  double p = 1.0;  // p >= 1; +inf takes the largest term (d_im only)
  Norm norm = Norm::sup;
};

/// Distance between two diagram points. Two infinite points are compared by
/// birth only; a finite and an infinite point are infinitely far apart.
double point_distance(DiagramPoint a, DiagramPoint b, Norm norm);

/// Distance from a point to its nearest diagonal point ((b+d)/2, (b+d)/2).
double diagonal_distance(DiagramPoint a, Norm norm);

struct DimResult {
  double value = 0.0;
  std::size_t matched = 0;
  std::size_t unmatched_x = 0;
  std::size_t unmatched_y = 0;
  // Unmatched infinite intervals, and matched pairs with exactly one
  // infinite end; these are left out of the sum.
  std::size_t excluded_infinite = 0;
};

/// Interval-matching distance: matched pairs contribute the distance between
/// their diagram points, unmatched intervals their distance to the diagonal.
/// Zero-length intervals are ignored.
DimResult d_im(const MatchResult& matching, const MetricParams& params = {});

/// p-Wasserstein distance between diagrams, by optimal assignment over the
/// diagrams augmented with diagonal slots. Infinite points are paired by
/// sorted birth; unequal counts of infinite points give +inf.
double d_wasserstein(const Diagram& a, const Diagram& b, const MetricParams& params = {});

/// Minimum-cost perfect assignment of a square cost matrix (row major);
/// returns the column assigned to each row.
std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n);

}  // namespace cyreg
