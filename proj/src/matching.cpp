#include "cyreg/matching.hpp"

#include <algorithm>
#include <unordered_map>

namespace cyreg {

double jaccard(Lifetime a, Lifetime b, double horizon) {
  if (std::isinf(a.death) && std::isinf(b.death) && a.birth == b.birth) return 1.0;
  const double ad = std::min(a.death, horizon);
  const double bd = std::min(b.death, horizon);
  const double la = std::max(0.0, ad - a.birth);
  const double lb = std::max(0.0, bd - b.birth);
  const double inter = std::max(0.0, std::min(ad, bd) - std::max(a.birth, b.birth));
  const double uni = la + lb - inter;
  if (!(uni > 0.0)) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

Affinity affinity(Lifetime gamma, Lifetime delta, Lifetime gamma_img, Lifetime delta_img,
                  double horizon) {
  Affinity a;
  a.a_gamma = jaccard(gamma, gamma_img, horizon);
  a.a_delta = jaccard(delta, delta_img, horizon);
  a.c = jaccard(gamma, delta, horizon);
  a.rho = a.a_gamma * a.a_delta * a.c;
  return a;
}

double default_horizon(const FilteredComplex& fz) {
  const double hi = fz.max_value();
  const double span = hi - fz.min_value();
  return hi + (span > 0.0 ? span : 1.0);
}

std::optional<std::size_t> MatchResult::match_of_x(std::size_t i) const {
  for (std::size_t m = 0; m < matches.size(); ++m) {
    if (matches[m].gamma == i) return m;
  }
  return std::nullopt;
}

std::optional<std::size_t> MatchResult::match_of_y(std::size_t j) const {
  for (std::size_t m = 0; m < matches.size(); ++m) {
    if (matches[m].delta == j) return m;
  }
  return std::nullopt;
}

std::vector<Chain> close_infinite(const SimplexMap& f,
                                  std::span<const PersistenceInterval> x_intervals) {
  std::vector<Chain> out;
  for (const auto& iv : x_intervals) {
    if (iv.infinite()) out.push_back(push_forward(f, iv.representative));
  }
  return out;
}

MatchResult match_intervals(const FilteredComplex& fx, const FilteredComplex& fy,
                            const FilteredComplex& fz, const SimplexMap& dx,
                            const SimplexMap& dy, int k, const MatchOptions& options) {
  const auto x = reduce(fx, k);
  const auto y = reduce(fy, k);
  return match_intervals(fx, fy, fz, dx, dy, k, x, y, options);
}

namespace {

std::vector<Index> positives(std::span<const PersistenceInterval> intervals) {
  std::vector<Index> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) out.push_back(iv.birth_simplex);
  return out;
}

std::unordered_map<Index, std::size_t> by_birth(std::span<const PersistenceInterval> intervals) {
  std::unordered_map<Index, std::size_t> out;
  for (std::size_t i = 0; i < intervals.size(); ++i) out.emplace(intervals[i].birth_simplex, i);
  return out;
}

Lifetime lifetime(const PersistenceInterval& iv) { return {iv.birth, iv.death}; }
Lifetime lifetime(const ImageInterval& iv) { return {iv.birth, iv.death}; }

}  // namespace

MatchResult match_intervals(const FilteredComplex& fx, const FilteredComplex& fy,
                            const FilteredComplex& fz, const SimplexMap& dx,
                            const SimplexMap& dy, int k,
                            std::span<const PersistenceInterval> x_intervals,
                            std::span<const PersistenceInterval> y_intervals,
                            const MatchOptions& options) {
  MatchResult res;
  res.k = k;
  for (const auto& iv : x_intervals) {
    if (iv.dim == k) res.x_intervals.push_back(iv);
  }
  for (const auto& iv : y_intervals) {
    if (iv.dim == k) res.y_intervals.push_back(iv);
  }
  res.horizon = std::isnan(options.horizon) ? default_horizon(fz) : options.horizon;

  std::vector<Chain> pseudo;
  if (options.close_infinite) pseudo = close_infinite(dx, res.x_intervals);

  std::vector<char> zero;
  ImageOptions fopt;
  fopt.pseudo_boundaries = pseudo;
  fopt.zero_columns = &zero;
  res.f_image = reduce_image(fz, fx, dx, k, positives(res.x_intervals), fopt);
  ImageOptions gopt;
  gopt.pseudo_boundaries = pseudo;
  gopt.known_zero = &zero;
  res.g_image = reduce_image(fz, fy, dy, k, positives(res.y_intervals), gopt);

  const auto x_of = by_birth(res.x_intervals);
  const auto y_of = by_birth(res.y_intervals);
  std::unordered_map<Index, std::size_t> g_by_death;
  for (std::size_t j = 0; j < res.g_image.size(); ++j) {
    const auto& g = res.g_image[j];
    if (g.death_simplex == kNoSimplex || g.empty()) continue;
    if (res.y_intervals[y_of.at(g.source_positive)].ignorable()) continue;
    g_by_death.emplace(g.death_simplex, j);
  }
  for (const auto& fimg : res.f_image) {
    if (fimg.death_simplex == kNoSimplex || fimg.empty()) continue;
    const std::size_t gi = x_of.at(fimg.source_positive);
    if (res.x_intervals[gi].ignorable()) continue;
    auto it = g_by_death.find(fimg.death_simplex);
    if (it == g_by_death.end()) continue;
    const auto& gimg = res.g_image[it->second];
    MatchRecord rec;
    rec.dim = k;
    rec.gamma = gi;
    rec.delta = y_of.at(gimg.source_positive);
    rec.gamma_img = fimg;
    rec.delta_img = gimg;
    rec.shared_death_simplex = fimg.death_simplex;
    rec.pseudo = fimg.pseudo;
    rec.affinity = affinity(lifetime(res.x_intervals[rec.gamma]),
                            lifetime(res.y_intervals[rec.delta]), lifetime(fimg),
                            lifetime(gimg), res.horizon);
    res.matches.push_back(rec);
  }
  return res;
}

}  // namespace cyreg
