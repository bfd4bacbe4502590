#include <cmath>
#include <numbers>
#include <sstream>

#include "cyreg/bootstrap.hpp"

namespace cyreg {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state = a ^ (index * 0xd1b54a32d192ed03ull);
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state)),
                    static_cast<std::uint32_t>(splitmix64(state))};
  return Rng(seq);
}

PointCloud kde_sample(const PointCloud& base, double h, std::size_t n, Rng& rng) {
  if (base.empty()) fail(ErrorCode::invalid_argument, "KDE sampling from an empty cloud");
  if (!(h >= 0.0)) fail(ErrorCode::invalid_argument, "KDE bandwidth must be non-negative");
  std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
  std::normal_distribution<double> noise(0.0, std::sqrt(h));
  std::vector<double> coords;
  coords.reserve(n * base.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = base.point(pick(rng));
    for (double c : p) coords.push_back(h > 0.0 ? c + noise(rng) : c);
  }
  return PointCloud(base.dim(), std::move(coords));
}

PointCloud sample_torus(std::size_t n, double r_center, double r_tube, Rng& rng) {
  if (!(r_center > 0.0) || !(r_tube > 0.0)) {
    fail(ErrorCode::invalid_argument, "torus radii must be positive");
  }
  const double major = r_center + r_tube;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords;
  coords.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    double theta = 0.0;
    // Area element is proportional to major + r_tube cos(theta).
    do {
      theta = angle(rng);
    } while (unit(rng) * (major + r_tube) > major + r_tube * std::cos(theta));
    const double phi = angle(rng);
    const double ring = major + r_tube * std::cos(theta);
    coords.push_back(ring * std::cos(phi));
    coords.push_back(ring * std::sin(phi));
    coords.push_back(r_tube * std::sin(theta));
  }
  return PointCloud(3, std::move(coords));
}

PointCloud sample_clusters_noise(std::size_t n, double p, double sigma, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "p must lie in [0, 1]");
  if (!(sigma >= 0.0)) fail(ErrorCode::invalid_argument, "sigma must be non-negative");
  std::bernoulli_distribution s(p);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> which(0, 4);
  std::normal_distribution<double> gauss(0.0, sigma);
  std::vector<double> coords;
  coords.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s(rng)) {
      coords.push_back(unit(rng));
      coords.push_back(unit(rng));
    } else {
      const double a = 2.0 * std::numbers::pi * which(rng) / 5.0;
      coords.push_back(0.1 * std::cos(a) + (sigma > 0.0 ? gauss(rng) : 0.0));
      coords.push_back(0.1 * std::sin(a) + (sigma > 0.0 ? gauss(rng) : 0.0));
    }
  }
  return PointCloud(2, std::move(coords));
}

PointCloud sample_uniform(std::size_t n, std::size_t dim, Rng& rng) {
  if (dim == 0) fail(ErrorCode::invalid_argument, "uniform sampler needs a positive dimension");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords(n * dim);
  for (auto& c : coords) c = unit(rng);
  return PointCloud(dim, std::move(coords));
}

PointCloud sample_circle(std::size_t n, double radius, double noise, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, noise > 0.0 ? noise : 1.0);
  std::vector<double> coords;
  coords.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = angle(rng);
    const double r = radius + (noise > 0.0 ? gauss(rng) : 0.0);
    coords.push_back(r * std::cos(a));
    coords.push_back(r * std::sin(a));
  }
  return PointCloud(2, std::move(coords));
}

SamplerSpec parse_sampler(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        fail(ErrorCode::invalid_argument, "bad sampler parameter '" + item + "' in '" + text + "'");
      }
    }
  }
  SamplerSpec spec;
  auto fill = [&](std::vector<double> defaults) {
    if (params.size() > defaults.size()) {
      fail(ErrorCode::invalid_argument, "too many parameters for sampler '" + name + "'");
    }
    for (std::size_t i = 0; i < params.size(); ++i) defaults[i] = params[i];
    spec.params = std::move(defaults);
  };
  if (name == "torus") {
    spec.kind = SamplerKind::torus;
    fill({0.3, 0.2});
  } else if (name == "clusters") {
    spec.kind = SamplerKind::clusters;
    fill({0.3, 0.01});
  } else if (name == "uniform") {
    spec.kind = SamplerKind::uniform;
    fill({2.0});
  } else if (name == "circle") {
    spec.kind = SamplerKind::circle;
    fill({1.0, 0.0});
  } else {
    fail(ErrorCode::invalid_argument,
         "unknown sampler '" + name + "' (expected torus, clusters, uniform or circle)");
  }
  return spec;
}

std::string to_string(const SamplerSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case SamplerKind::torus: os << "torus"; break;
    case SamplerKind::clusters: os << "clusters"; break;
    case SamplerKind::uniform: os << "uniform"; break;
    case SamplerKind::circle: os << "circle"; break;
  }
  for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? ',' : ':') << spec.params[i];
  return os.str();
}

PointCloud draw(const SamplerSpec& spec, std::size_t n, Rng& rng) {
  auto param = [&](std::size_t i, double fallback) {
    return i < spec.params.size() ? spec.params[i] : fallback;
  };
  switch (spec.kind) {
    case SamplerKind::torus: return sample_torus(n, param(0, 0.3), param(1, 0.2), rng);
    case SamplerKind::clusters:
      return sample_clusters_noise(n, param(0, 0.3), param(1, 0.01), rng);
    case SamplerKind::uniform: {
      const double d = param(0, 2.0);
      if (!(d >= 1.0) || d != std::floor(d)) {
        fail(ErrorCode::invalid_argument, "uniform sampler dimension must be a positive integer");
      }
      return sample_uniform(n, static_cast<std::size_t>(d), rng);
    }
    case SamplerKind::circle: return sample_circle(n, param(0, 1.0), param(1, 0.0), rng);
  }
  fail(ErrorCode::invalid_argument, "unknown sampler");
}

}  // namespace cyreg
