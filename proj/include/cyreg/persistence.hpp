#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cyreg/complex.hpp"
#include "cyreg/filtration.hpp"

namespace cyreg {

inline constexpr Index kNoSimplex = std::numeric_limits<Index>::max();

/// One bar of PH_k: lifetime [birth, death) with the simplexes that create
/// and destroy it.
struct PersistenceInterval {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;
  Index birth_simplex = kNoSimplex;
  Index death_simplex = kNoSimplex;  // kNoSimplex for infinite intervals
  // Finite: the reduced boundary column of the death simplex.
  // Infinite: the reduced cycle created by the birth simplex.
  Chain representative;
  // Combination of (k+1)-simplexes whose boundary is the representative
  // (finite intervals, only when requested).
  Chain eliminating;

  bool infinite() const noexcept { return death_simplex == kNoSimplex; }
  /// Born and killed at the same filtration value.
  bool ignorable() const noexcept { return !infinite() && death <= birth; }
  double length() const noexcept { return death - birth; }
};

struct PersistenceOptions {
  bool eliminating_chains = false;
};

/// Largest nonzero row of a sorted sparse column, if any.
std::optional<Index> low(std::span<const Index> column);

/// Standard persistence reduction over Z2 for all dimensions k <= k_max.
/// Intervals are sorted by (dim, birth_simplex).
std::vector<PersistenceInterval> reduce(const FilteredComplex& fc, int k_max,
                                        const PersistenceOptions& options = {});

/// Intervals of a single dimension.
std::vector<PersistenceInterval> of_dim(std::span<const PersistenceInterval> intervals, int k);

struct DiagramPoint {
  double birth = 0.0;
  double death = kInfinity;
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

using Diagram = std::vector<DiagramPoint>;

/// Birth/death pairs of dimension k, zero-length intervals excluded, sorted.
Diagram diagram(std::span<const PersistenceInterval> intervals, int k);

/// Number of k-intervals alive right after the simplex at position `step`
/// enters (birth simplex <= step < death simplex).
std::size_t alive_count(std::span<const PersistenceInterval> intervals, int k, Index step);

}  // namespace cyreg
