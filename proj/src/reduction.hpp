#pragma once

#include <limits>
#include <vector>

#include "cyreg/complex.hpp"
#include "cyreg/filtration.hpp"

namespace cyreg::detail {

inline constexpr Index kNone = std::numeric_limits<Index>::max();

using Column = std::vector<Index>;  // sorted row keys

/// Left-to-right column reduction over Z2.
struct ReducedMatrix {
  std::vector<Column> r;
  std::vector<Column> v;     // column combinations; empty unless tracked
  std::vector<Index> pivot;  // row key -> column whose low it is, or kNone

  Index low(Index col) const { return r[col].empty() ? kNone : r[col].back(); }
};

/// target += source (symmetric difference), using `scratch` as buffer.
void add_column(Column& target, const Column& source, Column& scratch);

/// Reduces `columns` (each a sorted list of row keys below `rows`).
/// Columns flagged in `known_zero` are assumed to reduce to zero and are
/// skipped; whether a column reduces to zero depends only on the columns
/// before it, never on the row order.
ReducedMatrix reduce_columns(std::vector<Column> columns, std::size_t rows, bool track_v,
                             const std::vector<char>* known_zero = nullptr);

/// Columns of the boundary matrix from d-simplexes to (d-1)-simplexes, with
/// rows keyed by position among the (d-1)-simplexes.
std::vector<Column> boundary_columns(const FilteredComplex& fc, int d);

}  // namespace cyreg::detail
