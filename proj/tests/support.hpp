#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyreg/filtration.hpp"
#include "cyreg/io.hpp"

namespace cyreg::testing {

inline std::string fixture(const std::string& name) {
  return std::string(CYREG_FIXTURE_DIR) + "/" + name;
}

inline FilteredComplex load_fixture(const std::string& name) {
  return read_filtration_json(fixture(name));
}

/// Closure of a few random simplexes on at most `max_vertices` vertices,
/// with random monotone values drawn from a small integer range so that
/// ties are common.
inline std::vector<FilteredSimplex> random_filtration(std::mt19937_64& rng, int max_vertices = 12,
                                                      int max_dim = 3) {
  std::uniform_int_distribution<int> n_dist(1, max_vertices);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, 3 * n);
  std::uniform_int_distribution<int> dim_dist(0, std::min(max_dim, n - 1));
  std::set<std::vector<Vertex>> all;
  const int tops = count_dist(rng);
  std::vector<Vertex> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = static_cast<Vertex>(i);
  for (int t = 0; t < tops; ++t) {
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<Vertex> top(verts.begin(), verts.begin() + dim_dist(rng) + 1);
    std::sort(top.begin(), top.end());
    const unsigned m = static_cast<unsigned>(top.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<Vertex> face;
      for (unsigned b = 0; b < m; ++b) {
        if (mask & (1u << b)) face.push_back(top[b]);
      }
      all.insert(face);
    }
  }
  // Values in order of increasing dimension keep faces no later than cofaces.
  std::vector<std::vector<Vertex>> order(all.begin(), all.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::uniform_int_distribution<int> bump(0, 3);
  std::map<std::vector<Vertex>, double> value;
  for (const auto& s : order) {
    double v = bump(rng);
    if (s.size() > 1) {
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) face.push_back(s[i]);
        }
        v = std::max(v, value[face] + (bump(rng) == 0 ? 0.0 : bump(rng)));
      }
    }
    value[s] = v;
  }
  std::vector<FilteredSimplex> out;
  for (const auto& [s, v] : value) out.push_back({Simplex(s), v, 0});
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace cyreg::testing
