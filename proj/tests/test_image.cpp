#include <doctest.h>

#include <random>

#include "cyreg/image.hpp"
#include "support.hpp"

using namespace cyreg;
using cyreg::testing::load_fixture;
using cyreg::testing::random_filtration;

TEST_SUITE("image") {
  TEST_CASE("identity map reproduces ordinary persistence") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
      const auto fc = FilteredComplex::from_simplices(random_filtration(rng, 10, 3));
      const auto id = SimplexMap::identity(fc.size());
      for (int k = 0; k < fc.max_dim(); ++k) {
        const auto ref = of_dim(reduce(fc, k), k);
        const auto img = reduce_image(fc, fc, id, k);
        REQUIRE(img.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
          CHECK(img[i].source_positive == ref[i].birth_simplex);
          CHECK(img[i].death_simplex == ref[i].death_simplex);
          CHECK(img[i].birth == ref[i].birth);
          CHECK(img[i].death == ref[i].death);
        }
      }
    }
  }

  TEST_CASE("non-injective vertex map is rejected") {
    const auto x = load_fixture("fig10_x.json");
    const auto z = load_fixture("fig10_z.json");
    const Vertex images[] = {0, 1, 2, 0};
    const auto f = SimplexMap::from_vertex_map(x, z, [&](Vertex v) { return images[v]; });
    const auto v = validate_map(f, x, z);
    REQUIRE(v.has_value());
    CHECK(v->kind == MapViolationKind::injectivity);
    CHECK(x.simplex(v->simplex) == Simplex{3});
  }

  TEST_CASE("map violations by kind") {
    const auto x = FilteredComplex::from_simplices(
        {{{0}, 0, 0}, {{1}, 0, 0}, {{0, 1}, 1, 0}});
    const auto z = FilteredComplex::from_simplices(
        {{{0}, 0, 0}, {{1}, 0, 0}, {{2}, 0, 0}, {{0, 1}, 2, 0}, {{0, 2}, 0.5, 0}});
    CHECK(validate_map(SimplexMap({0, 1}), x, z)->kind == MapViolationKind::size);
    CHECK(validate_map(SimplexMap({0, 1, SimplexMap::none}), x, z)->kind ==
          MapViolationKind::missing_image);
    CHECK(validate_map(SimplexMap({0, 1, 2}), x, z)->kind == MapViolationKind::dimension);
    CHECK(validate_map(SimplexMap({0, 1, 4}), x, z)->kind == MapViolationKind::value);
    CHECK(validate_map(SimplexMap({0, 1, 3}), x, z)->kind == MapViolationKind::faces);
    CHECK(validate_map(SimplexMap({0, 2, 3}), x, z) == std::nullopt);
    CHECK(to_string(MapViolationKind::injectivity) == "injectivity");
  }

  TEST_CASE("pants example image intervals") {
    const auto x = load_fixture("fig9_x.json");
    const auto y = load_fixture("fig9_y.json");
    const auto z = load_fixture("fig9_z.json");
    const auto f = SimplexMap::inclusion(x, z);
    const auto g = SimplexMap::inclusion(y, z);
    REQUIRE_FALSE(validate_map(f, x, z).has_value());
    REQUIRE_FALSE(validate_map(g, y, z).has_value());
    const auto fi = reduce_image(z, x, f, 1);
    REQUIRE(fi.size() == 2);
    CHECK(fi[0].birth == 1);
    CHECK(fi[0].death == 4);
    CHECK(fi[1].birth == 2);
    CHECK(fi[1].death == 3);
    const auto gi = reduce_image(z, y, g, 1);
    REQUIRE(gi.size() == 1);
    CHECK(gi[0].birth == 0);
    CHECK(gi[0].death == 3);
    CHECK(gi[0].death_simplex == fi[1].death_simplex);
  }

  TEST_CASE("pseudo columns close infinite images") {
    // X is a hollow triangle that stays open in Z as well.
    const auto x = FilteredComplex::from_simplices({{{0}, 0, 0}, {{1}, 0, 0}, {{2}, 0, 0},
                                                    {{0, 1}, 1, 0}, {{1, 2}, 1, 0}, {{0, 2}, 1, 0}});
    const auto f = SimplexMap::identity(x.size());
    const auto plain = reduce_image(x, x, f, 1);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].infinite());
    CHECK_FALSE(plain[0].pseudo);
    std::vector<Index> pos{plain[0].source_positive};
    const std::vector<Chain> extra{Chain(1, {3, 4, 5})};
    ImageOptions opts;
    opts.pseudo_boundaries = extra;
    const auto closed = reduce_image(x, x, f, 1, pos, opts);
    REQUIRE(closed.size() == 1);
    CHECK(closed[0].pseudo);
    CHECK(closed[0].death_simplex == x.size());
    CHECK(closed[0].infinite());
    CHECK_FALSE(closed[0].empty());
  }

  TEST_CASE("known-zero columns do not change the result") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const auto fc = FilteredComplex::from_simplices(random_filtration(rng, 10, 2));
      const auto id = SimplexMap::identity(fc.size());
      std::vector<Index> pos;
      for (const auto& iv : reduce(fc, 1)) {
        if (iv.dim == 1) pos.push_back(iv.birth_simplex);
      }
      std::vector<char> zeros;
      ImageOptions first;
      first.zero_columns = &zeros;
      const auto a = reduce_image(fc, fc, id, 1, pos, first);
      ImageOptions second;
      second.known_zero = &zeros;
      const auto b = reduce_image(fc, fc, id, 1, pos, second);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].death_simplex == b[i].death_simplex);
    }
  }
}
