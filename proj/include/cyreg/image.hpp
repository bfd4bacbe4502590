#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyreg/filtration.hpp"
#include "cyreg/persistence.hpp"

namespace cyreg {

enum class MapViolationKind { size, missing_image, dimension, value, faces, injectivity };

std::string to_string(MapViolationKind kind);

struct MapViolation {
  MapViolationKind kind;
  Index simplex = kNoSimplex;  // offending simplex of the source complex
  std::string message;
};

/// Checks that f: fx -> fz is a total, injective, dimension preserving
/// simplicial map commuting with faces, with value(f(s)) <= value(s).
/// Simplexes are visited in filtration order; the first violation wins.
std::optional<MapViolation> validate_map(const SimplexMap& f, const FilteredComplex& fx,
                                         const FilteredComplex& fz);

/// A bar of the image module PH_k(f). Birth is read on the clock of X,
/// death on the clock of Z.
struct ImageInterval {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;
  Index source_positive = kNoSimplex;  // creating simplex in X
  // Negative simplex in Z; pseudo columns are numbered fz.size() + j.
  Index death_simplex = kNoSimplex;
  bool pseudo = false;

  bool infinite() const noexcept { return death_simplex == kNoSimplex || pseudo; }
  /// Killed no later than it is born, so never visible in the image.
  bool empty() const noexcept { return !infinite() && death <= birth; }
};

struct ImageOptions {
  // Extra k-chains of Z appended as columns after every (k+1)-simplex,
  // with filtration value +inf.
  std::span<const Chain> pseudo_boundaries;
  // Columns of the boundary map known to reduce to zero; may be skipped.
  const std::vector<char>* known_zero = nullptr;
  // Receives the zero-column mask of the genuine columns when non-null.
  std::vector<char>* zero_columns = nullptr;
};

/// Image persistence in dimension k. Rows of the boundary map of Z are
/// reordered so that the image of X comes first, in the order of X, followed
/// by the remaining rows in the order of Z; the matrix is then reduced left
/// to right. `x_positive` lists the positive k-simplexes of X. Intervals are
/// sorted by creating simplex.
std::vector<ImageInterval> reduce_image(const FilteredComplex& fz, const FilteredComplex& fx,
                                        const SimplexMap& f, int k,
                                        std::span<const Index> x_positive,
                                        const ImageOptions& options = {});

/// Convenience overload computing the positive simplexes of X itself.
std::vector<ImageInterval> reduce_image(const FilteredComplex& fz, const FilteredComplex& fx,
                                        const SimplexMap& f, int k);

/// Image of a chain of X under f.
Chain push_forward(const SimplexMap& f, const Chain& c);

}  // namespace cyreg
