#include "reduction.hpp"

#include <algorithm>
#include <iterator>

namespace cyreg::detail {

void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  scratch.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(scratch));
  target.swap(scratch);
}

ReducedMatrix reduce_columns(std::vector<Column> columns, std::size_t rows, bool track_v,
                             const std::vector<char>* known_zero) {
  ReducedMatrix m;
  m.r = std::move(columns);
  m.pivot.assign(rows, kNone);
  if (track_v) {
    m.v.resize(m.r.size());
    for (std::size_t j = 0; j < m.r.size(); ++j) m.v[j].assign(1, static_cast<Index>(j));
  }
  Column scratch;
  for (std::size_t j = 0; j < m.r.size(); ++j) {
    auto& col = m.r[j];
    if (known_zero && (*known_zero)[j]) {
      col.clear();
      continue;
    }
    while (!col.empty()) {
      const Index other = m.pivot[col.back()];
      if (other == kNone) break;
      add_column(col, m.r[other], scratch);
      if (track_v) add_column(m.v[j], m.v[other], scratch);
    }
    if (!col.empty()) {
      m.pivot[col.back()] = static_cast<Index>(j);
      col.shrink_to_fit();
    } else {
      Column().swap(col);
    }
  }
  return m;
}

std::vector<Column> boundary_columns(const FilteredComplex& fc, int d) {
  const auto simplexes = fc.of_dim(d);
  std::vector<Column> cols(simplexes.size());
  for (std::size_t j = 0; j < simplexes.size(); ++j) {
    const auto faces = fc.faces(simplexes[j]);
    cols[j].reserve(faces.size());
    for (Index f : faces) cols[j].push_back(fc.position_in_dim(f));
  }
  return cols;
}

}  // namespace cyreg::detail
