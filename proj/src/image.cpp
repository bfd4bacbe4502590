#include "cyreg/image.hpp"

#include <algorithm>
#include <unordered_map>

#include "reduction.hpp"

namespace cyreg {

std::string to_string(MapViolationKind kind) {
  switch (kind) {
    case MapViolationKind::size: return "size";
    case MapViolationKind::missing_image: return "missing_image";
    case MapViolationKind::dimension: return "dimension";
    case MapViolationKind::value: return "value";
    case MapViolationKind::faces: return "faces";
    case MapViolationKind::injectivity: return "injectivity";
  }
  return "unknown";
}

std::optional<MapViolation> validate_map(const SimplexMap& f, const FilteredComplex& fx,
                                         const FilteredComplex& fz) {
  if (f.size() != fx.size()) {
    return MapViolation{MapViolationKind::size, kNoSimplex,
                        "map has " + std::to_string(f.size()) + " entries for " +
                            std::to_string(fx.size()) + " simplexes"};
  }
  std::unordered_map<Index, Index> preimage;
  preimage.reserve(fx.size());
  std::vector<Index> mapped_faces;
  for (Index x = 0; x < fx.size(); ++x) {
    const auto& sx = fx.simplex(x);
    const Index z = f(x);
    if (z == SimplexMap::none || z >= fz.size()) {
      return MapViolation{MapViolationKind::missing_image, x,
                          "simplex " + sx.to_string() + " has no image"};
    }
    const auto& sz = fz.simplex(z);
    if (sz.dim() != sx.dim()) {
      return MapViolation{MapViolationKind::dimension, x,
                          "simplex " + sx.to_string() + " maps to " + sz.to_string() +
                              " of different dimension"};
    }
    if (fz.value(z) > fx.value(x)) {
      return MapViolation{MapViolationKind::value, x,
                          "simplex " + sx.to_string() + " enters at " +
                              std::to_string(fx.value(x)) + " but its image " + sz.to_string() +
                              " only at " + std::to_string(fz.value(z))};
    }
    mapped_faces.clear();
    for (Index face : fx.faces(x)) mapped_faces.push_back(f(face));
    std::sort(mapped_faces.begin(), mapped_faces.end());
    const auto zf = fz.faces(z);
    if (!std::equal(mapped_faces.begin(), mapped_faces.end(), zf.begin(), zf.end())) {
      return MapViolation{MapViolationKind::faces, x,
                          "faces of " + sx.to_string() + " do not map to the faces of " +
                              sz.to_string()};
    }
    auto [it, fresh] = preimage.emplace(z, x);
    if (!fresh) {
      return MapViolation{MapViolationKind::injectivity, x,
                          "simplexes " + fx.simplex(it->second).to_string() + " and " +
                              sx.to_string() + " both map to " + sz.to_string()};
    }
  }
  return std::nullopt;
}

Chain push_forward(const SimplexMap& f, const Chain& c) {
  std::vector<Index> terms;
  terms.reserve(c.size());
  for (Index x : c.terms()) terms.push_back(f(x));
  return Chain(c.dim(), std::move(terms));
}

std::vector<ImageInterval> reduce_image(const FilteredComplex& fz, const FilteredComplex& fx,
                                        const SimplexMap& f, int k,
                                        std::span<const Index> x_positive,
                                        const ImageOptions& options) {
  const auto xk = fx.of_dim(k);
  const auto zk = fz.of_dim(k);
  const auto nx = static_cast<Index>(xk.size());

  // Row keys: image rows in the order of their preimages, then the rest.
  std::vector<Index> key(zk.size(), detail::kNone);
  for (Index q = 0; q < nx; ++q) {
    const Index z = f(xk[q]);
    if (z == SimplexMap::none || fz.dim(z) != k) {
      fail(ErrorCode::validation, "map is not a dimension-preserving total map");
    }
    key[fz.position_in_dim(z)] = q;
  }
  Index next = nx;
  for (auto& kk : key) {
    if (kk == detail::kNone) kk = next++;
  }

  auto columns = detail::boundary_columns(fz, k + 1);
  const std::size_t genuine = columns.size();
  for (auto& col : columns) {
    for (auto& r : col) r = key[r];
    std::sort(col.begin(), col.end());
  }
  for (const auto& chain : options.pseudo_boundaries) {
    detail::Column col;
    col.reserve(chain.size());
    for (Index z : chain.terms()) col.push_back(key[fz.position_in_dim(z)]);
    std::sort(col.begin(), col.end());
    columns.push_back(std::move(col));
  }
  std::vector<char> known;
  if (options.known_zero) {
    known = *options.known_zero;
    known.resize(columns.size(), 0);
  }
  const auto m = detail::reduce_columns(std::move(columns), zk.size(), false,
                                        options.known_zero ? &known : nullptr);
  if (options.zero_columns) {
    options.zero_columns->assign(genuine, 0);
    for (std::size_t j = 0; j < genuine; ++j) (*options.zero_columns)[j] = m.r[j].empty();
  }

  const auto zk1 = fz.of_dim(k + 1);
  std::vector<ImageInterval> out;
  out.reserve(x_positive.size());
  for (Index x : x_positive) {
    const Index q = fx.position_in_dim(x);
    ImageInterval iv;
    iv.dim = k;
    iv.source_positive = x;
    iv.birth = fx.value(x);
    const Index col = m.pivot[q];
    if (col != detail::kNone) {
      if (col < genuine) {
        iv.death_simplex = zk1[col];
        iv.death = fz.value(iv.death_simplex);
      } else {
        iv.death_simplex = static_cast<Index>(fz.size() + (col - genuine));
        iv.pseudo = true;
      }
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const ImageInterval& a, const ImageInterval& b) {
    return a.source_positive < b.source_positive;
  });
  return out;
}

std::vector<ImageInterval> reduce_image(const FilteredComplex& fz, const FilteredComplex& fx,
                                        const SimplexMap& f, int k) {
  std::vector<Index> positive;
  for (const auto& iv : reduce(fx, k)) {
    if (iv.dim == k) positive.push_back(iv.birth_simplex);
  }
  return reduce_image(fz, fx, f, k, positive);
}

}  // namespace cyreg
