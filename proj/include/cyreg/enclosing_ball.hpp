#pragma once

#include <span>
#include <vector>

#include "cyreg/complex.hpp"
#include "cyreg/filtration.hpp"

namespace cyreg {

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

/// Exact minimal enclosing ball of a handful of points.
///
/// Every candidate support set S of at most d+1 affinely independent points
/// is tried; its circumsphere (center in the affine hull of S) is kept when
/// it encloses all points, and the smallest such sphere is returned.
/// Intended for simplex-sized inputs.
Ball min_enclosing_ball(const PointCloud& pc, std::span<const Vertex> points);

/// Ball through the points of `support` whose center lies in their affine
/// hull. Returns false for affinely dependent supports.
bool circumsphere(const PointCloud& pc, std::span<const Vertex> support, Ball& out);

}  // namespace cyreg
