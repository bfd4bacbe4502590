#include "cyreg/persistence.hpp"

#include <algorithm>

#include "reduction.hpp"

namespace cyreg {

using detail::Column;
using detail::kNone;
using detail::ReducedMatrix;

std::optional<Index> low(std::span<const Index> column) {
  if (column.empty()) return std::nullopt;
  return *std::max_element(column.begin(), column.end());
}

namespace {

Chain to_global(const FilteredComplex& fc, int d, const Column& keys) {
  const auto simplexes = fc.of_dim(d);
  std::vector<Index> terms;
  terms.reserve(keys.size());
  for (Index key : keys) terms.push_back(simplexes[key]);
  return Chain(d, std::move(terms));
}

}  // namespace

std::vector<PersistenceInterval> reduce(const FilteredComplex& fc, int k_max,
                                        const PersistenceOptions& options) {
  std::vector<PersistenceInterval> out;
  if (fc.empty() || k_max < 0) return out;
  const int top = std::min(k_max + 1, fc.max_dim());

  // reduced[d] holds the reduction of the boundary map from dimension d.
  std::vector<ReducedMatrix> reduced(static_cast<std::size_t>(top) + 1);
  std::vector<char> cleared;
  for (int d = top; d >= 1; --d) {
    const bool track_v = d <= k_max || options.eliminating_chains;
    const auto rows = fc.of_dim(d - 1).size();
    auto& m = reduced[static_cast<std::size_t>(d)];
    m = detail::reduce_columns(detail::boundary_columns(fc, d), rows, track_v,
                               cleared.empty() ? nullptr : &cleared);
    // Pivot rows are positive (d-1)-simplexes; their columns reduce to zero.
    cleared.assign(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) cleared[r] = m.pivot[r] != kNone;
  }

  for (int k = 0; k <= std::min(k_max, fc.max_dim()); ++k) {
    const auto simplexes = fc.of_dim(k);
    const ReducedMatrix* own = k >= 1 ? &reduced[static_cast<std::size_t>(k)] : nullptr;
    const ReducedMatrix* next =
        k + 1 <= top ? &reduced[static_cast<std::size_t>(k + 1)] : nullptr;
    for (Index pos = 0; pos < simplexes.size(); ++pos) {
      if (own && !own->r[pos].empty()) continue;  // negative simplex
      PersistenceInterval iv;
      iv.dim = k;
      iv.birth_simplex = simplexes[pos];
      iv.birth = fc.value(iv.birth_simplex);
      const Index killer = next ? next->pivot[pos] : kNone;
      if (killer != kNone) {
        iv.death_simplex = fc.of_dim(k + 1)[killer];
        iv.death = fc.value(iv.death_simplex);
        iv.representative = to_global(fc, k, next->r[killer]);
        if (options.eliminating_chains) iv.eliminating = to_global(fc, k + 1, next->v[killer]);
        else iv.eliminating = Chain(k + 1);
      } else {
        iv.representative =
            k == 0 ? Chain(0, {iv.birth_simplex}) : to_global(fc, k, own->v[pos]);
        iv.eliminating = Chain(k + 1);
      }
      out.push_back(std::move(iv));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.birth_simplex < b.birth_simplex;
  });
  return out;
}

std::vector<PersistenceInterval> of_dim(std::span<const PersistenceInterval> intervals, int k) {
  std::vector<PersistenceInterval> out;
  for (const auto& iv : intervals) {
    if (iv.dim == k) out.push_back(iv);
  }
  return out;
}

Diagram diagram(std::span<const PersistenceInterval> intervals, int k) {
  Diagram d;
  for (const auto& iv : intervals) {
    if (iv.dim == k && !iv.ignorable()) d.push_back({iv.birth, iv.death});
  }
  std::sort(d.begin(), d.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });
  return d;
}

std::size_t alive_count(std::span<const PersistenceInterval> intervals, int k, Index step) {
  std::size_t n = 0;
  for (const auto& iv : intervals) {
    if (iv.dim == k && iv.birth_simplex <= step &&
        (iv.infinite() || step < iv.death_simplex)) {
      ++n;
    }
  }
  return n;
}

}  // namespace cyreg
