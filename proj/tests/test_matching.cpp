#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "cyreg/matching.hpp"
#include "support.hpp"

using namespace cyreg;
using cyreg::testing::load_fixture;

namespace {

PointCloud noisy_circle(std::mt19937_64& rng, std::size_t n, double cx, double r, double noise) {
  std::normal_distribution<double> eps(0.0, noise);
  PointCloud pc;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    const double p[2] = {cx + (r + eps(rng)) * std::cos(t), (r + eps(rng)) * std::sin(t)};
    pc.push_back(p);
  }
  return pc;
}

MatchResult match_clouds(const PointCloud& x, const PointCloud& y, const BuilderParams& params,
                         int k) {
  const auto fx = build_filtration(x, params);
  const auto fy = build_filtration(y, params);
  const auto u = union_filtration(x, fx, y, fy, params);
  return match_intervals(fx, fy, u.z, u.from_x, u.from_y, k);
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("Jaccard ratio of lifetimes") {
    CHECK(jaccard({0, 2}, {1, 3}, 10) == doctest::Approx(1.0 / 3));
    CHECK(jaccard({0, 2}, {0, 2}, 10) == 1.0);
    CHECK(jaccard({0, 1}, {2, 3}, 10) == 0.0);
    CHECK(jaccard({1, 1}, {1, 1}, 10) == 0.0);
    CHECK(jaccard({1, kInfinity}, {1, kInfinity}, 10) == 1.0);
    CHECK(jaccard({0, kInfinity}, {2, kInfinity}, 10) == doctest::Approx(0.8));
    CHECK(jaccard({0, kInfinity}, {0, 5}, 10) == doctest::Approx(0.5));
  }

  TEST_CASE("affinity is the product of three ratios") {
    const auto a = affinity({0, 4}, {1, 4}, {0, 2}, {1, 4}, 10);
    CHECK(a.a_gamma == doctest::Approx(0.5));
    CHECK(a.a_delta == 1.0);
    CHECK(a.c == doctest::Approx(0.75));
    CHECK(a.rho == doctest::Approx(0.375));
  }

  TEST_CASE("pants example: only the second cycle of X matches") {
    const auto x = load_fixture("fig9_x.json");
    const auto y = load_fixture("fig9_y.json");
    const auto z = load_fixture("fig9_z.json");
    const auto m = match_intervals(x, y, z, SimplexMap::inclusion(x, z),
                                   SimplexMap::inclusion(y, z), 1);
    REQUIRE(m.x_intervals.size() == 2);
    REQUIRE(m.y_intervals.size() == 1);
    REQUIRE(m.matches.size() == 1);
    const auto& rec = m.matches[0];
    CHECK(rec.gamma == 1);
    CHECK(rec.delta == 0);
    CHECK_FALSE(rec.pseudo);
    CHECK(z.simplex(rec.shared_death_simplex) == Simplex{1, 2, 9});
    CHECK(rec.gamma_img.death == 3);
    CHECK(rec.delta_img.death == 3);
    CHECK_FALSE(m.match_of_x(0).has_value());
    CHECK(*m.match_of_y(0) == 0);
  }

  TEST_CASE("a cloud matches itself perfectly") {
    std::mt19937_64 rng(3);
    const auto x = noisy_circle(rng, 24, 0, 1, 0.02);
    const BuilderParams params{ComplexType::rips, 2, 1.2};
    const auto m = match_clouds(x, x, params, 1);
    std::size_t visible = 0;
    for (const auto& iv : m.x_intervals) visible += !iv.ignorable();
    CHECK(m.matches.size() == visible);
    for (const auto& rec : m.matches) {
      CHECK(rec.gamma == rec.delta);
      CHECK(rec.affinity.rho == 1.0);
    }
  }

  TEST_CASE("infinite intervals match through pseudo columns") {
    std::mt19937_64 rng(4);
    const auto x = noisy_circle(rng, 20, 0, 1, 0.01);
    const auto y = noisy_circle(rng, 20, 0, 1, 0.01);
    // Too short a radius for the loop to fill in.
    const BuilderParams params{ComplexType::rips, 2, 0.5};
    const auto m = match_clouds(x, y, params, 1);
    bool found = false;
    for (const auto& rec : m.matches) {
      if (m.x_intervals[rec.gamma].infinite() && m.y_intervals[rec.delta].infinite()) {
        found = true;
        CHECK(rec.pseudo);
        CHECK(rec.affinity.rho > 0.9);
      }
    }
    CHECK(found);
  }

  TEST_CASE("matching is symmetric on finite intervals") {
    std::mt19937_64 rng(11);
    const BuilderParams params{ComplexType::rips, 2, 1.2};
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = noisy_circle(rng, 18, 0, 1, 0.05);
      const auto y = noisy_circle(rng, 18, 0.2, 0.9, 0.05);
      const auto xy = match_clouds(x, y, params, 1);
      const auto yx = match_clouds(y, x, params, 1);
      std::set<std::pair<std::size_t, std::size_t>> a, b;
      for (const auto& r : xy.matches) a.insert({r.gamma, r.delta});
      for (const auto& r : yx.matches) b.insert({r.delta, r.gamma});
      CHECK(a == b);
    }
  }

  TEST_CASE("affinities stay in the unit interval") {
    std::mt19937_64 rng(12);
    const BuilderParams params{ComplexType::rips, 2, 0.9};
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = noisy_circle(rng, 16, 0, 1, 0.15);
      const auto y = noisy_circle(rng, 16, 0.3, 0.8, 0.15);
      for (int k = 0; k <= 1; ++k) {
        const auto m = match_clouds(x, y, params, k);
        for (const auto& r : m.matches) {
          for (double v : {r.affinity.a_gamma, r.affinity.a_delta, r.affinity.c, r.affinity.rho}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
          }
          CHECK_FALSE(r.gamma_img.empty());
          CHECK_FALSE(r.delta_img.empty());
        }
      }
    }
  }
}
