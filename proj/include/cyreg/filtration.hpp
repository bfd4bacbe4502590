#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyreg/complex.hpp"

namespace cyreg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A finite set of points in R^d, stored row-major.
class PointCloud {
 public:
  PointCloud() = default;
  PointCloud(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const noexcept { return coords_.empty(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  void push_back(std::span<const double> p);
  double distance(std::size_t i, std::size_t j) const;

  /// Points of `a` followed by points of `b`.
  static PointCloud concat(const PointCloud& a, const PointCloud& b);

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

struct FilteredSimplex {
  Simplex simplex;
  double value = 0.0;
  // Tie-break among simplexes of equal value and dimension, applied before
  // the lexicographic rule. The point-cloud builders store the number of
  // distinct point locations, which only matters for clouds with repeats.
  int rank = 0;
};

/// A simplicial complex with a total order compatible with filtration
/// values: sorted by (value, dimension, rank, lexicographic vertices), so a
/// face always precedes its cofaces. Simplex indices refer to this order.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  /// Sorts and validates. Throws Error(validation) naming the offending
  /// simplexes when the input is not closed under faces, contains a
  /// duplicate, or assigns a face a larger value than a coface.
  static FilteredComplex from_simplices(std::vector<FilteredSimplex> simplices);

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  int max_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  const Simplex& simplex(Index i) const { return simplices_[i]; }
  double value(Index i) const { return values_[i]; }
  int rank(Index i) const { return ranks_[i]; }
  int dim(Index i) const { return simplices_[i].dim(); }

  std::optional<Index> find(const Simplex& s) const;

  /// Global indices of the k-simplexes, in filtration order.
  std::span<const Index> of_dim(int k) const;
  /// Position of simplex i among the simplexes of its dimension.
  Index position_in_dim(Index i) const { return position_[i]; }

  /// Global indices of the codimension-1 faces, ascending.
  std::span<const Index> faces(Index i) const {
    return {face_indices_.data() + face_offsets_[i], face_offsets_[i + 1] - face_offsets_[i]};
  }

  /// The simplexes of the first `count` positions of the order.
  std::vector<Simplex> prefix(std::size_t count) const;

  /// Largest finite filtration value, or 0 for an empty complex.
  double max_value() const;
  double min_value() const;

  SimplexChain to_simplices(const Chain& c) const;
  Chain to_chain(const SimplexChain& c) const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<double> values_;
  std::vector<int> ranks_;
  std::vector<Index> position_;
  std::vector<std::vector<Index>> by_dim_;
  std::vector<std::size_t> face_offsets_{0};
  std::vector<Index> face_indices_;
  std::unordered_map<Simplex, Index, SimplexHash> lookup_;
};

/// Dictionary sending each simplex of one filtered complex to a simplex of
/// another, by index. Entries equal to `none` have no image.
class SimplexMap {
 public:
  static constexpr Index none = std::numeric_limits<Index>::max();

  SimplexMap() = default;
  explicit SimplexMap(std::vector<Index> targets) : targets_(std::move(targets)) {}

  static SimplexMap identity(std::size_t size);
  /// Map induced by a vertex map: each simplex goes to the simplex spanned
  /// by the images of its vertices (which may have lower dimension).
  static SimplexMap from_vertex_map(const FilteredComplex& from, const FilteredComplex& to,
                                    const std::function<Vertex(Vertex)>& vertex_map);
  /// Inclusion by vertex labels.
  static SimplexMap inclusion(const FilteredComplex& from, const FilteredComplex& to);

  std::size_t size() const noexcept { return targets_.size(); }
  Index operator()(Index x) const { return targets_[x]; }
  const std::vector<Index>& targets() const noexcept { return targets_; }

 private:
  std::vector<Index> targets_;
};

enum class ComplexType { rips, cech };

struct BuilderParams {
  ComplexType type = ComplexType::rips;
  int max_dim = 2;
  double max_radius = 1.0;
};

std::string to_string(ComplexType type);
ComplexType parse_complex_type(const std::string& name);

/// Vietoris-Rips filtration. A simplex enters at half its diameter, so that
/// Rips and Cech values share radius units.
FilteredComplex rips_filtration(const PointCloud& pc, int max_dim, double max_radius);

/// Cech filtration. A simplex enters at the radius of the minimal ball
/// enclosing its vertices.
FilteredComplex cech_filtration(const PointCloud& pc, int max_dim, double max_radius);

FilteredComplex build_filtration(const PointCloud& pc, const BuilderParams& params);

/// Validated filtration from an explicit list of simplexes and values.
FilteredComplex explicit_filtration(std::vector<FilteredSimplex> simplexes);

struct UnionFiltration {
  FilteredComplex z;
  SimplexMap from_x;
  SimplexMap from_y;
};

/// Builds the filtration of the union cloud X u Y (X labelled 0..|X|-1,
/// Y labelled |X|..|X|+|Y|-1) and the inclusion dictionaries of fx and fy.
UnionFiltration union_filtration(const PointCloud& x, const FilteredComplex& fx,
                                 const PointCloud& y, const FilteredComplex& fy,
                                 const BuilderParams& params);

}  // namespace cyreg
