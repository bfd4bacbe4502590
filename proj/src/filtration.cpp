#include "cyreg/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyreg/enclosing_ball.hpp"

namespace cyreg {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0 && !coords_.empty()) {
    fail(ErrorCode::invalid_argument, "point cloud of dimension 0 with coordinates");
  }
  if (dim_ != 0 && coords_.size() % dim_ != 0) {
    fail(ErrorCode::dimension_mismatch, "coordinate count is not a multiple of the dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "non-finite point coordinate");
  }
}

void PointCloud::push_back(std::span<const double> p) {
  if (dim_ == 0 && coords_.empty()) dim_ = p.size();
  if (p.size() != dim_) {
    fail(ErrorCode::dimension_mismatch, "point of dimension " + std::to_string(p.size()) +
                                            " added to a cloud of dimension " +
                                            std::to_string(dim_));
  }
  for (double c : p) {
    if (!std::isfinite(c)) fail(ErrorCode::invalid_argument, "non-finite point coordinate");
  }
  coords_.insert(coords_.end(), p.begin(), p.end());
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  const double* a = coords_.data() + i * dim_;
  const double* b = coords_.data() + j * dim_;
  double s = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    const double t = a[c] - b[c];
    s += t * t;
  }
  return std::sqrt(s);
}

PointCloud PointCloud::concat(const PointCloud& a, const PointCloud& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.dim_ != b.dim_) {
    fail(ErrorCode::dimension_mismatch, "cannot join clouds of dimension " +
                                            std::to_string(a.dim_) + " and " +
                                            std::to_string(b.dim_));
  }
  std::vector<double> coords = a.coords_;
  coords.insert(coords.end(), b.coords_.begin(), b.coords_.end());
  return PointCloud(a.dim_, std::move(coords));
}

namespace {

std::string describe(const Simplex& s, double value) {
  std::ostringstream os;
  os << s.to_string() << " (value " << value << ")";
  return os.str();
}

}  // namespace

FilteredComplex FilteredComplex::from_simplices(std::vector<FilteredSimplex> simplices) {
  for (const auto& fs : simplices) {
    if (fs.simplex.empty()) fail(ErrorCode::validation, "empty simplex in filtration");
    if (std::isnan(fs.value)) {
      fail(ErrorCode::validation, "simplex " + fs.simplex.to_string() + " has a NaN value");
    }
  }
  std::sort(simplices.begin(), simplices.end(),
            [](const FilteredSimplex& a, const FilteredSimplex& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.simplex.dim() != b.simplex.dim()) return a.simplex.dim() < b.simplex.dim();
              if (a.rank != b.rank) return a.rank < b.rank;
              return a.simplex < b.simplex;
            });

  FilteredComplex fc;
  const std::size_t n = simplices.size();
  fc.simplices_.reserve(n);
  fc.values_.reserve(n);
  fc.ranks_.reserve(n);
  fc.position_.reserve(n);
  fc.lookup_.reserve(n);
  for (auto& fs : simplices) {
    const auto idx = static_cast<Index>(fc.simplices_.size());
    if (!fc.lookup_.emplace(fs.simplex, idx).second) {
      fail(ErrorCode::validation, "duplicate simplex " + fs.simplex.to_string());
    }
    const auto k = static_cast<std::size_t>(fs.simplex.dim());
    if (fc.by_dim_.size() <= k) fc.by_dim_.resize(k + 1);
    fc.position_.push_back(static_cast<Index>(fc.by_dim_[k].size()));
    fc.by_dim_[k].push_back(idx);
    fc.values_.push_back(fs.value);
    fc.ranks_.push_back(fs.rank);
    fc.simplices_.push_back(std::move(fs.simplex));
  }

  fc.face_offsets_.reserve(n + 1);
  for (Index i = 0; i < n; ++i) {
    const auto& s = fc.simplices_[i];
    const std::size_t start = fc.face_indices_.size();
    for (const auto& f : s.faces()) {
      auto it = fc.lookup_.find(f);
      if (it == fc.lookup_.end()) {
        fail(ErrorCode::validation, "face " + f.to_string() + " of " +
                                        describe(s, fc.values_[i]) + " is missing");
      }
      if (fc.values_[it->second] > fc.values_[i]) {
        fail(ErrorCode::validation, "face " + describe(f, fc.values_[it->second]) +
                                        " enters after its coface " +
                                        describe(s, fc.values_[i]));
      }
      fc.face_indices_.push_back(it->second);
    }
    std::sort(fc.face_indices_.begin() + static_cast<std::ptrdiff_t>(start),
              fc.face_indices_.end());
    fc.face_offsets_.push_back(fc.face_indices_.size());
  }
  return fc;
}

std::optional<Index> FilteredComplex::find(const Simplex& s) const {
  auto it = lookup_.find(s);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const Index> FilteredComplex::of_dim(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= by_dim_.size()) return {};
  return by_dim_[static_cast<std::size_t>(k)];
}

std::vector<Simplex> FilteredComplex::prefix(std::size_t count) const {
  count = std::min(count, simplices_.size());
  return {simplices_.begin(), simplices_.begin() + static_cast<std::ptrdiff_t>(count)};
}

double FilteredComplex::max_value() const {
  double m = 0.0;
  bool any = false;
  for (double v : values_) {
    if (std::isfinite(v) && (!any || v > m)) {
      m = v;
      any = true;
    }
  }
  return m;
}

double FilteredComplex::min_value() const {
  double m = 0.0;
  bool any = false;
  for (double v : values_) {
    if (std::isfinite(v) && (!any || v < m)) {
      m = v;
      any = true;
    }
  }
  return m;
}

SimplexChain FilteredComplex::to_simplices(const Chain& c) const {
  std::vector<Simplex> terms;
  terms.reserve(c.size());
  for (Index i : c.terms()) terms.push_back(simplices_.at(i));
  return SimplexChain(c.dim(), std::move(terms));
}

Chain FilteredComplex::to_chain(const SimplexChain& c) const {
  std::vector<Index> terms;
  terms.reserve(c.size());
  for (const auto& s : c.terms()) {
    auto idx = find(s);
    if (!idx) fail(ErrorCode::invalid_argument, "simplex " + s.to_string() + " not in complex");
    terms.push_back(*idx);
  }
  return Chain(c.dim(), std::move(terms));
}

SimplexMap SimplexMap::identity(std::size_t size) {
  std::vector<Index> t(size);
  for (std::size_t i = 0; i < size; ++i) t[i] = static_cast<Index>(i);
  return SimplexMap(std::move(t));
}

SimplexMap SimplexMap::from_vertex_map(const FilteredComplex& from, const FilteredComplex& to,
                                       const std::function<Vertex(Vertex)>& vertex_map) {
  std::vector<Index> t(from.size(), none);
  std::vector<Vertex> image;
  for (Index i = 0; i < from.size(); ++i) {
    image.clear();
    for (Vertex v : from.simplex(i).vertices()) image.push_back(vertex_map(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (auto idx = to.find(Simplex(image))) t[i] = *idx;
  }
  return SimplexMap(std::move(t));
}

SimplexMap SimplexMap::inclusion(const FilteredComplex& from, const FilteredComplex& to) {
  std::vector<Index> t(from.size(), none);
  for (Index i = 0; i < from.size(); ++i) {
    if (auto idx = to.find(from.simplex(i))) t[i] = *idx;
  }
  return SimplexMap(std::move(t));
}

std::string to_string(ComplexType type) { return type == ComplexType::rips ? "rips" : "cech"; }

ComplexType parse_complex_type(const std::string& name) {
  if (name == "rips") return ComplexType::rips;
  if (name == "cech") return ComplexType::cech;
  fail(ErrorCode::invalid_argument, "unknown complex type '" + name + "' (expected rips or cech)");
}

namespace {

class CliqueExpansion {
 public:
  CliqueExpansion(const PointCloud& pc, int max_dim, double max_radius, bool cech)
      : pc_(pc), max_dim_(max_dim), max_radius_(max_radius), cech_(cech) {
    const std::size_t n = pc.size();
    higher_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (pc.distance(i, j) / 2.0 <= max_radius) higher_[i].push_back(static_cast<Vertex>(j));
      }
    }
  }

  std::vector<FilteredSimplex> run() {
    std::vector<Vertex> verts;
    for (std::size_t v = 0; v < pc_.size(); ++v) {
      verts.assign(1, static_cast<Vertex>(v));
      grow(verts, 0.0, 1, higher_[v]);
    }
    return std::move(out_);
  }

 private:
  // `distinct` counts the distinct point locations spanned by `verts`; it
  // becomes the tie-break rank, so simplexes over coincident points enter
  // before genuine ones of the same value and dimension.
  void grow(std::vector<Vertex>& verts, double value, int distinct,
            const std::vector<Vertex>& candidates) {
    out_.push_back({Simplex(verts), value, distinct});
    if (static_cast<int>(verts.size()) > max_dim_ || candidates.empty()) return;
    std::vector<Vertex> next;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const Vertex c = candidates[ci];
      double v = value;
      bool coincident = false;
      for (Vertex u : verts) {
        const double d = pc_.distance(u, c);
        coincident = coincident || d == 0.0;
        if (!cech_) v = std::max(v, d / 2.0);
      }
      if (cech_) {
        verts.push_back(c);
        v = min_enclosing_ball(pc_, verts).radius;
        verts.pop_back();
        if (v > max_radius_) continue;
      }
      next.clear();
      const auto& hc = higher_[c];
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(ci) + 1,
                            candidates.end(), hc.begin(), hc.end(), std::back_inserter(next));
      verts.push_back(c);
      grow(verts, v, distinct + (coincident ? 0 : 1), next);
      verts.pop_back();
    }
  }

  const PointCloud& pc_;
  int max_dim_;
  double max_radius_;
  bool cech_;
  std::vector<std::vector<Vertex>> higher_;
  std::vector<FilteredSimplex> out_;
};

// Enclosing-ball radii are computed independently per simplex, and rounding
// can leave a simplex a hair below one of its faces. Lift such values to the
// largest face value so the result is a filtration.
void lift_to_faces(std::vector<FilteredSimplex>& simplexes) {
  std::stable_sort(simplexes.begin(), simplexes.end(),
                   [](const FilteredSimplex& a, const FilteredSimplex& b) {
                     return a.simplex.size() < b.simplex.size();
                   });
  std::unordered_map<Simplex, double, SimplexHash> lower, current;
  std::size_t dim_size = 1;
  std::vector<Vertex> face;
  for (auto& fs : simplexes) {
    if (fs.simplex.size() != dim_size) {
      lower = std::move(current);
      current.clear();
      dim_size = fs.simplex.size();
    }
    if (dim_size > 1) {
      const auto& v = fs.simplex.vertices();
      for (std::size_t skip = 0; skip < v.size(); ++skip) {
        face.clear();
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i != skip) face.push_back(v[i]);
        }
        const auto it = lower.find(Simplex(face));
        if (it != lower.end()) fs.value = std::max(fs.value, it->second);
      }
    }
    current.emplace(fs.simplex, fs.value);
  }
}

void check_builder_args(int max_dim, double max_radius) {
  if (max_dim < 0) fail(ErrorCode::invalid_argument, "max_dim must be non-negative");
  if (!(max_radius >= 0.0)) fail(ErrorCode::invalid_argument, "max_radius must be non-negative");
}

}  // namespace

FilteredComplex rips_filtration(const PointCloud& pc, int max_dim, double max_radius) {
  check_builder_args(max_dim, max_radius);
  return FilteredComplex::from_simplices(CliqueExpansion(pc, max_dim, max_radius, false).run());
}

FilteredComplex cech_filtration(const PointCloud& pc, int max_dim, double max_radius) {
  check_builder_args(max_dim, max_radius);
  auto simplexes = CliqueExpansion(pc, max_dim, max_radius, true).run();
  lift_to_faces(simplexes);
  return FilteredComplex::from_simplices(std::move(simplexes));
}

FilteredComplex build_filtration(const PointCloud& pc, const BuilderParams& params) {
  return params.type == ComplexType::rips
             ? rips_filtration(pc, params.max_dim, params.max_radius)
             : cech_filtration(pc, params.max_dim, params.max_radius);
}

FilteredComplex explicit_filtration(std::vector<FilteredSimplex> simplexes) {
  return FilteredComplex::from_simplices(std::move(simplexes));
}

UnionFiltration union_filtration(const PointCloud& x, const FilteredComplex& fx,
                                 const PointCloud& y, const FilteredComplex& fy,
                                 const BuilderParams& params) {
  if (!x.empty() && !y.empty() && x.dim() != y.dim()) {
    fail(ErrorCode::dimension_mismatch, "clouds live in R^" + std::to_string(x.dim()) +
                                            " and R^" + std::to_string(y.dim()));
  }
  UnionFiltration u;
  u.z = build_filtration(PointCloud::concat(x, y), params);
  const auto offset = static_cast<Vertex>(x.size());
  u.from_x = SimplexMap::inclusion(fx, u.z);
  u.from_y = SimplexMap::from_vertex_map(fy, u.z, [offset](Vertex v) { return v + offset; });
  for (const auto* m : {&u.from_x, &u.from_y}) {
    const auto& source = m == &u.from_x ? fx : fy;
    for (Index i = 0; i < m->size(); ++i) {
      if ((*m)(i) == SimplexMap::none) {
        fail(ErrorCode::validation, "simplex " + source.simplex(i).to_string() +
                                        " has no copy in the union complex; were the source "
                                        "filtrations built with the same parameters?");
      }
    }
  }
  return u;
}

}  // namespace cyreg
