// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyreg/bootstrap.hpp"
#include "cyreg/image.hpp"
#include "cyreg/io.hpp"
#include "cyreg/matching.hpp"
#include "cyreg/metric.hpp"
#include "support.hpp"

using namespace cyreg;
using cyreg::testing::fixture;
using cyreg::testing::load_fixture;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

constexpr std::uint64_t kSeed = 7;
// Random filtrations shared by criteria 2 and 3.
constexpr int kRandomFiltrations = 200;

std::vector<FilteredComplex> random_filtrations() {
  std::mt19937_64 rng(20240915);
  std::vector<FilteredComplex> out;
  for (int i = 0; i < kRandomFiltrations; ++i) {
    out.push_back(FilteredComplex::from_simplices(testing::random_filtration(rng, 12, 3)));
  }
  return out;
}

Outcome golden_persistence() {
  Outcome o;
  const auto start = Clock::now();
  const auto fc = load_fixture("fig8.json");
  PersistenceOptions opts;
  opts.eliminating_chains = true;
  const auto all = reduce(fc, 1, opts);
  const auto h0 = of_dim(all, 0);
  const auto h1 = of_dim(all, 1);

  std::set<std::pair<Simplex, Simplex>> finite0;
  std::set<Simplex> infinite0;
  for (const auto& iv : h0) {
    if (iv.infinite()) {
      infinite0.insert(fc.simplex(iv.birth_simplex));
    } else {
      finite0.insert({fc.simplex(iv.birth_simplex), fc.simplex(iv.death_simplex)});
    }
  }
  const Simplex v{0}, u{1}, w{2}, z{3};
  const Simplex a{0, 1}, b{0, 3}, c{2, 3}, d{1, 2}, e{0, 2}, A{0, 1, 2}, B{0, 2, 3};
  o.require(finite0 == std::set<std::pair<Simplex, Simplex>>{{u, a}, {w, c}, {z, b}},
            "PH0 finite intervals differ");
  o.require(infinite0 == std::set<Simplex>{v}, "PH0 infinite interval differs");

  using ChainPair = std::pair<std::vector<Simplex>, std::vector<Simplex>>;
  std::set<ChainPair> got1;
  for (const auto& iv : h1) {
    o.require(!iv.infinite(), "PH1 has an infinite interval");
    got1.insert({fc.to_simplices(iv.representative).terms(),
                 fc.to_simplices(iv.eliminating).terms()});
  }
  const std::set<ChainPair> want1{
      {SimplexChain(1, {a, b, c, d}).terms(), SimplexChain(2, {A, B}).terms()},
      {SimplexChain(1, {a, d, e}).terms(), SimplexChain(2, {A}).terms()}};
  o.require(got1 == want1, "PH1 representatives or eliminating chains differ");
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + fmt("%.2f s", t));
  o.note(std::to_string(h0.size()) + " PH0 and " + std::to_string(h1.size()) + " PH1 intervals");
  return o;
}

Outcome oracle(const std::vector<FilteredComplex>& cases) {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checks = 0, mismatches = 0;
  for (const auto& fc : cases) {
    const int top = fc.max_dim();
    const auto all = reduce(fc, top);
    for (Index step = 0; step < fc.size(); ++step) {
      const auto sub = fc.prefix(step + 1);
      for (int k = 0; k <= top; ++k) {
        ++checks;
        if (alive_count(all, k, step) != betti_bruteforce(sub, k)) ++mismatches;
      }
    }
  }
  const double t = seconds_since(start);
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(t < 30.0, "took " + fmt("%.1f s", t));
  o.note(std::to_string(checks) + " Betti comparisons in " + fmt("%.1f s", t));
  return o;
}

Outcome identity_image(const std::vector<FilteredComplex>& cases) {
  Outcome o;
  std::size_t compared = 0, mismatches = 0;
  for (const auto& fc : cases) {
    const auto id = SimplexMap::identity(fc.size());
    const auto all = reduce(fc, fc.max_dim());
    for (int k = 0; k < fc.max_dim(); ++k) {
      const auto ref = of_dim(all, k);
      const auto img = reduce_image(fc, fc, id, k);
      if (img.size() != ref.size()) {
        ++mismatches;
        continue;
      }
      for (std::size_t i = 0; i < ref.size(); ++i) {
        ++compared;
        if (img[i].source_positive != ref[i].birth_simplex ||
            img[i].death_simplex != ref[i].death_simplex || img[i].birth != ref[i].birth ||
            img[i].death != ref[i].death) {
          ++mismatches;
        }
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.note(std::to_string(compared) + " intervals compared");
  return o;
}

// Z2 coordinates of a chain of X pushed into the k-simplexes of Z.
std::vector<Index> coordinates(const FilteredComplex& fz, const SimplexMap& f, const Chain& c) {
  const Chain image = push_forward(f, c);
  std::vector<Index> out;
  for (Index s : image.terms()) out.push_back(fz.position_in_dim(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> sum(std::vector<Index> a, const std::vector<Index>& b) {
  std::vector<Index> out;
  std::sort(a.begin(), a.end());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Outcome pants_matching() {
  Outcome o;
  const auto x = load_fixture("fig9_x.json");
  const auto y = load_fixture("fig9_y.json");
  const auto z = load_fixture("fig9_z.json");
  const auto f = SimplexMap::inclusion(x, z);
  const auto g = SimplexMap::inclusion(y, z);
  o.require(!validate_map(f, x, z) && !validate_map(g, y, z), "inclusions fail validation");

  const auto m = match_intervals(x, y, z, f, g, 1);
  std::vector<std::pair<double, double>> fi, gi;
  for (const auto& iv : m.f_image) fi.push_back({iv.birth, iv.death});
  for (const auto& iv : m.g_image) gi.push_back({iv.birth, iv.death});
  o.require(fi == std::vector<std::pair<double, double>>{{1, 4}, {2, 3}},
            "f-image intervals differ");
  o.require(gi == std::vector<std::pair<double, double>>{{0, 3}}, "g-image intervals differ");
  o.require(m.matches.size() == 1 && m.matches[0].gamma == 1 && m.matches[0].delta == 0,
            "matching is not exactly gamma2 ~ delta");

  // Transported cycles at t = 2, where the images live in Z_2 with fixed
  // homology: gamma1 + gamma2 and delta are homologous, neither gamma alone is.
  if (m.x_intervals.size() == 2 && m.y_intervals.size() == 1) {
    const double t = 2.0;
    std::vector<std::vector<Index>> boundaries;
    for (Index s : z.of_dim(2)) {
      if (z.value(s) > t) continue;
      std::vector<Index> col;
      for (Index face : z.faces(s)) col.push_back(z.position_in_dim(face));
      boundaries.push_back(std::move(col));
    }
    const std::size_t len = z.of_dim(1).size();
    const auto g1 = coordinates(z, f, m.x_intervals[0].representative);
    const auto g2 = coordinates(z, f, m.x_intervals[1].representative);
    const auto dl = coordinates(z, g, m.y_intervals[0].representative);
    const bool sum_ok = in_span(boundaries, sum(sum(g1, g2), dl), len);
    const bool g1_alone = in_span(boundaries, sum(g1, dl), len);
    const bool g2_alone = in_span(boundaries, sum(g2, dl), len);
    const bool trivial = in_span(boundaries, dl, len);
    o.require(sum_ok, "gamma1 + gamma2 not homologous to delta");
    o.require(!g1_alone && !g2_alone && !trivial, "a single gamma is homologous to delta");
  } else {
    o.require(false, "unexpected interval counts");
  }
  o.note("f-image [1,4),[2,3); g-image [0,3); gamma2 ~ delta; oracle gamma1+gamma2 ~ delta");
  return o;
}

Outcome non_injective_map() {
  Outcome o;
  const auto x = load_fixture("fig10_x.json");
  const auto z = load_fixture("fig10_z.json");
  const auto doc = nlohmann::json::parse(read_text(fixture("fig10_map.json")));
  const auto images = doc["vertex_map"].get<std::vector<Vertex>>();
  const auto f = SimplexMap::from_vertex_map(x, z, [&](Vertex v) { return images.at(v); });
  const auto v = validate_map(f, x, z);
  o.require(v.has_value(), "map accepted");
  if (v) {
    o.require(v->kind == MapViolationKind::injectivity,
              "rejected for " + to_string(v->kind) + " instead of injectivity");
    o.note("rejected: " + v->message);
  }
  return o;
}

Outcome circle_metrics() {
  Outcome o;
  const auto start = Clock::now();
  const auto xs = read_csv(fixture("fig17_x.csv"));
  const auto ys = read_csv(fixture("fig17_y.csv"));
  const auto zs = read_csv(fixture("fig17_z.csv"));
  // Large enough for every circle, the biggest of radius 0.5, to fill in.
  const BuilderParams params{ComplexType::cech, 2, 0.51};
  const MetricParams euclid{1.0, Norm::euclidean};
  const MetricParams sup{1.0, Norm::sup};

  const auto fy = build_filtration(ys, params);
  const auto y1 = reduce(fy, 1);
  auto compare = [&](const PointCloud& other) {
    const auto fo = build_filtration(other, params);
    const auto o1 = reduce(fo, 1);
    const auto u = union_filtration(ys, fy, other, fo, params);
    const auto m = match_intervals(fy, fo, u.z, u.from_x, u.from_y, 1, y1, o1);
    return std::tuple{d_im(m, euclid).value, d_wasserstein(diagram(y1, 1), diagram(o1, 1), euclid),
                      d_im(m, sup).value};
  };
  const auto [im_x, w_x, im_x_sup] = compare(xs);
  const auto [im_z, w_z, im_z_sup] = compare(zs);
  const double t = seconds_since(start);
  o.require(std::abs(w_x - 0.2) <= 0.02, "d_W1(Y,X) = " + fmt("%.4f", w_x));
  o.require(std::abs(w_z) <= 0.02, "d_W1(Y,Z) = " + fmt("%.4f", w_z));
  o.require(std::abs(im_x - 0.2) <= 0.02, "d_IM1(Y,X) = " + fmt("%.4f", im_x));
  o.require(std::abs(im_z - 0.8) <= 0.05, "d_IM1(Y,Z) = " + fmt("%.4f", im_z));
  o.require(t < 60.0, "took " + fmt("%.1f s", t));
  o.note("euclidean norm: d_W1(Y,X)=" + fmt("%.4f", w_x) + " d_W1(Y,Z)=" + fmt("%.4f", w_z) +
         " d_IM1(Y,X)=" + fmt("%.4f", im_x) + " d_IM1(Y,Z)=" + fmt("%.4f", im_z) +
         "; sup norm d_IM1(Y,X)=" + fmt("%.4f", im_x_sup) + " d_IM1(Y,Z)=" +
         fmt("%.4f", im_z_sup) + "; " + fmt("%.1f s", t));
  return o;
}

Outcome self_resample() {
  Outcome o;
  std::size_t intervals = 0;
  auto rng = stream_rng(kSeed, 0);
  const auto torus = sample_torus(80, 0.3, 0.2, rng);
  const auto circle = sample_circle(60, 1.0, 0.1, rng);
  const auto clusters = sample_clusters_noise(120, 0.3, 0.01, rng);
  struct Case {
    const PointCloud* cloud;
    BuilderParams builder;
    int k;
  };
  const Case cases[] = {
      {&torus, {ComplexType::cech, 2, 0.3}, 1},
      {&torus, {ComplexType::rips, 2, 0.3}, 1},
      {&circle, {ComplexType::rips, 2, 1.0}, 1},
      {&circle, {ComplexType::cech, 2, 0.5}, 0},
      {&clusters, {ComplexType::cech, 2, 0.15}, 1},
  };
  for (const auto& c : cases) {
    PrevalenceParams params;
    params.builder = c.builder;
    params.k = c.k;
    params.B = 1;
    params.seed = kSeed;
    const auto r = prevalence(*c.cloud, params, [&](std::size_t, Rng&) { return *c.cloud; });
    for (const auto& ip : r.intervals) {
      ++intervals;
      if (ip.p_hat != 1.0) {
        o.require(false, "p_hat " + fmt("%.6f", ip.p_hat) + " for [" + fmt("%g", ip.interval.birth) +
                             ", " + fmt("%g", ip.interval.death) + ")");
      }
    }
  }
  o.require(intervals > 0, "no intervals to check");
  o.note(std::to_string(intervals) + " intervals over 5 configurations");
  return o;
}

// Parity of crossings of the cycle's edges with the half-plane {y = 0, x > 0}
// bounded by the torus axis: odd when the cycle winds around the central hole.
bool encircles_hole(const PointCloud& pc, const SimplexChain& cycle) {
  int n = 0;
  for (const auto& e : cycle.terms()) {
    const auto p = pc.point(e[0]);
    const auto q = pc.point(e[1]);
    if ((p[1] > 0) == (q[1] > 0)) continue;
    const double s = p[1] / (p[1] - q[1]);
    if (p[0] + s * (q[0] - p[0]) > 0) ++n;
  }
  return n % 2 == 1;
}

// Parity of crossings with the disk {z = 0, r < R} spanning the core circle
// of the tube: odd when the cycle winds around the tube.
bool encircles_tube(const PointCloud& pc, const SimplexChain& cycle, double big_r) {
  int n = 0;
  for (const auto& e : cycle.terms()) {
    const auto p = pc.point(e[0]);
    const auto q = pc.point(e[1]);
    if ((p[2] > 0) == (q[2] > 0)) continue;
    const double s = p[2] / (p[2] - q[2]);
    if (std::hypot(p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])) < big_r) ++n;
  }
  return n % 2 == 1;
}

PrevalenceReport newsample_run(const std::string& sampler, std::size_t n, double max_radius) {
  PrevalenceParams params;
  params.builder = {ComplexType::cech, 2, max_radius};
  params.k = 1;
  params.B = 20;
  params.n = n;
  params.mode = PrevalenceMode::newsample;
  params.sampler = parse_sampler(sampler);
  params.seed = kSeed;
  auto rng = stream_rng(kSeed, 0);
  const auto base = draw(params.sampler, n, rng);
  return prevalence(base, params);
}

double max_p_hat(const PrevalenceReport& r) {
  double m = 0.0;
  for (const auto& ip : r.intervals) m = std::max(m, ip.p_hat);
  return m;
}

// Shared between criteria 8 and 9.
double torus_top_p_hat = std::nan("");

Outcome torus() {
  Outcome o;
  const auto start = Clock::now();
  const auto r = newsample_run("torus:0.3,0.2", 100, 0.3);
  auto rng = stream_rng(kSeed, 0);
  const auto base = sample_torus(100, 0.3, 0.2, rng);
  const auto order = r.ranking();
  const double t = seconds_since(start);
  if (order.empty()) {
    o.require(false, "no intervals");
    return o;
  }
  const auto& top = r.intervals[order[0]];
  torus_top_p_hat = top.p_hat;
  o.require(encircles_hole(base, top.representative), "top interval does not encircle the hole");
  bool tube = false;
  std::string ranks;
  for (std::size_t i = 0; i < order.size() && i < 3; ++i) {
    const auto& ip = r.intervals[order[i]];
    const bool h = encircles_hole(base, ip.representative);
    const bool tb = encircles_tube(base, ip.representative, 0.5);
    tube = tube || tb;
    ranks += (i ? ", " : "") + fmt("p=%.3f", ip.p_hat) + (h ? " hole" : "") + (tb ? " tube" : "");
  }
  o.require(tube, "no tube cycle in the top 3");
  o.require(t < 600.0, "took " + fmt("%.0f s", t));
  o.note("top 3: " + ranks + "; " + fmt("%.1f s", t));
  return o;
}

Outcome noise() {
  Outcome o;
  const auto start = Clock::now();
  if (std::isnan(torus_top_p_hat)) torus_top_p_hat = max_p_hat(newsample_run("torus:0.3,0.2", 100, 0.3));
  const double small = max_p_hat(newsample_run("uniform:2", 200, 0.1));
  const double large = max_p_hat(newsample_run("uniform:2", 500, 0.1));
  const double t = seconds_since(start);
  o.require(large <= 1.5 * small, "max p_hat grew from " + fmt("%.3f", small) + " to " + fmt("%.3f", large));
  o.require(small < torus_top_p_hat && large < torus_top_p_hat, "noise reaches the torus signal");
  o.require(t < 600.0, "took " + fmt("%.0f s", t));
  o.note("max p_hat n=200: " + fmt("%.3f", small) + ", n=500: " + fmt("%.3f", large) +
         ", torus top: " + fmt("%.3f", torus_top_p_hat) + "; " + fmt("%.1f s", t));
  return o;
}

bool same(Lifetime a, Lifetime b) { return a.birth == b.birth && a.death == b.death; }

Outcome affinity_bounds() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t records = 0, perfect = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    auto srng = stream_rng(kSeed, 100 + trial);
    const std::size_t n = 20 + trial % 15;
    const auto x = trial % 2 ? sample_circle(n, 1.0, 0.15, srng) : sample_uniform(n, 2, srng);
    // Alternate between independent draws, jittered copies and exact copies.
    PointCloud y;
    switch (trial % 3) {
      case 0: y = sample_circle(n, 0.9, 0.2, srng); break;
      case 1: y = kde_sample(x, 0.001, n, srng); break;
      default: y = x; break;
    }
    const BuilderParams params{trial % 4 < 2 ? ComplexType::rips : ComplexType::cech, 2,
                               0.2 + 0.6 * unit(rng)};
    const auto fx = build_filtration(x, params);
    const auto fy = build_filtration(y, params);
    const auto u = union_filtration(x, fx, y, fy, params);
    for (int k = 0; k <= 1; ++k) {
      const auto m = match_intervals(fx, fy, u.z, u.from_x, u.from_y, k);
      for (const auto& r : m.matches) {
        ++records;
        const auto& a = r.affinity;
        for (double v : {a.a_gamma, a.a_delta, a.c, a.rho}) {
          if (!(v >= 0.0 && v <= 1.0)) o.require(false, "value " + fmt("%g", v) + " out of range");
        }
        const Lifetime g{m.x_intervals[r.gamma].birth, m.x_intervals[r.gamma].death};
        const Lifetime d{m.y_intervals[r.delta].birth, m.y_intervals[r.delta].death};
        const Lifetime gi{r.gamma_img.birth, r.gamma_img.death};
        const Lifetime di{r.delta_img.birth, r.delta_img.death};
        const bool coincide = same(g, gi) && same(d, di) && same(g, d);
        if ((a.rho == 1.0) != coincide) o.require(false, "rho = 1 disagrees with coincidence");
        perfect += coincide;
      }
    }
  }
  o.require(records > 0 && perfect > 0 && perfect < records, "degenerate sample of matches");
  o.note(std::to_string(records) + " matches, " + std::to_string(perfect) + " with rho = 1");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  auto selected = [&](int n) { return wanted.empty() || wanted.count(n) > 0; };

  std::vector<FilteredComplex> cases;
  if (selected(2) || selected(3)) cases = random_filtrations();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden persistence with representatives", golden_persistence},
      {"oracle equivalence on 200 random filtrations", [&] { return oracle(cases); }},
      {"image persistence with identity maps", [&] { return identity_image(cases); }},
      {"pants matching and transported-cycle oracle", pants_matching},
      {"non-injective map rejected", non_injective_map},
      {"three-circle metric discrimination", circle_metrics},
      {"self-resample prevalence is 1", self_resample},
      {"torus prevalence ranks the true cycles first", torus},
      {"noise prevalence stays bounded", noise},
      {"affinity bounds", affinity_bounds},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!selected(n)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", n,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
