#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "cyreg/filtration.hpp"
#include "cyreg/image.hpp"
#include "cyreg/persistence.hpp"

namespace cyreg {

/// A lifetime [birth, death), death possibly +inf.
struct Lifetime {
  double birth = 0.0;
  double death = kInfinity;
};

/// |I n J| / |I u J| for two lifetimes. Infinite deaths are clipped at
/// `horizon` unless both are infinite with equal birth, which gives 1.
/// A union of zero length gives 0.
double jaccard(Lifetime a, Lifetime b, double horizon);

struct Affinity {
  double a_gamma = 0.0;  // gamma vs its image
  double a_delta = 0.0;  // delta vs its image
  double c = 0.0;        // gamma vs delta
  double rho = 0.0;      // product of the three
};

Affinity affinity(Lifetime gamma, Lifetime delta, Lifetime gamma_img, Lifetime delta_img,
                  double horizon);

/// Horizon used to clip infinite deaths: the largest finite value of Z plus
/// its value span, so a clipped infinite bar always outlives any finite one.
double default_horizon(const FilteredComplex& fz);

struct MatchRecord {
  int dim = 0;
  std::size_t gamma = 0;  // index into MatchResult::x_intervals
  std::size_t delta = 0;  // index into MatchResult::y_intervals
  ImageInterval gamma_img;
  ImageInterval delta_img;
  Index shared_death_simplex = kNoSimplex;
  bool pseudo = false;  // eliminated by a pseudo column
  Affinity affinity;
};

struct MatchResult {
  int k = 0;
  std::vector<PersistenceInterval> x_intervals;  // PH_k(X), sorted by birth simplex
  std::vector<PersistenceInterval> y_intervals;
  std::vector<ImageInterval> f_image;
  std::vector<ImageInterval> g_image;
  std::vector<MatchRecord> matches;
  double horizon = 0.0;

  /// Index of the match of x_intervals[i], if any.
  std::optional<std::size_t> match_of_x(std::size_t i) const;
  std::optional<std::size_t> match_of_y(std::size_t j) const;
};

struct MatchOptions {
  // Append pseudo columns so that infinite intervals can match.
  bool close_infinite = true;
  // Clip horizon for infinite deaths; NaN selects default_horizon(fz).
  double horizon = std::numeric_limits<double>::quiet_NaN();
};

/// Pseudo columns for the infinite k-intervals of X: the images f(gamma_i).
std::vector<Chain> close_infinite(const SimplexMap& f,
                                  std::span<const PersistenceInterval> x_intervals);

/// Interval matching via Z: intervals of X and Y match when their image
/// intervals in Z are killed by the same simplex (or pseudo column) and
/// neither image is empty. Zero-length source intervals never match.
MatchResult match_intervals(const FilteredComplex& fx, const FilteredComplex& fy,
                            const FilteredComplex& fz, const SimplexMap& dx,
                            const SimplexMap& dy, int k, const MatchOptions& options = {});

/// Same, reusing precomputed intervals of X and Y (any dimensions; those of
/// dimension k are used).
MatchResult match_intervals(const FilteredComplex& fx, const FilteredComplex& fy,
                            const FilteredComplex& fz, const SimplexMap& dx,
                            const SimplexMap& dy, int k,
                            std::span<const PersistenceInterval> x_intervals,
                            std::span<const PersistenceInterval> y_intervals,
                            const MatchOptions& options = {});

}  // namespace cyreg
