#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cyreg/filtration.hpp"
#include "cyreg/matching.hpp"
#include "cyreg/persistence.hpp"

namespace cyreg {

using Rng = std::mt19937_64;

/// Independent generator for stream `index` of a master seed (splitmix64
/// of the pair), so parallel and serial runs draw the same numbers.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// n draws from the Gaussian KDE of `base`: a base point chosen uniformly
/// with replacement plus isotropic noise of variance h per coordinate.
PointCloud kde_sample(const PointCloud& base, double h, std::size_t n, Rng& rng);

/// n points uniform (by area) on the torus in R^3 whose central hole has
/// radius r_center and whose tube has radius r_tube.
PointCloud sample_torus(std::size_t n, double r_center, double r_tube, Rng& rng);

/// n draws of S W + (1 - S) V in R^2 with W uniform on [0,1]^2,
/// S ~ Bernoulli(p) and V a mixture of five Gaussians of deviation sigma
/// centered at 0.1 (cos(2 pi i / 5), sin(2 pi i / 5)).
PointCloud sample_clusters_noise(std::size_t n, double p, double sigma, Rng& rng);

/// n points uniform on [0,1]^dim.
PointCloud sample_uniform(std::size_t n, std::size_t dim, Rng& rng);

/// n points on a circle of the given radius in R^2 with Gaussian radial
/// noise of deviation `noise`.
PointCloud sample_circle(std::size_t n, double radius, double noise, Rng& rng);

enum class SamplerKind { torus, clusters, uniform, circle };

struct SamplerSpec {
  SamplerKind kind = SamplerKind::uniform;
  // torus: r_center, r_tube; clusters: p, sigma; uniform: dim; circle: radius, noise
  std::vector<double> params;
};

/// Parses "torus:0.3,0.2", "clusters:0.3", "clusters:0.3,0.01", "uniform",
/// "uniform:3", "circle:1,0.05". Missing parameters take defaults.
SamplerSpec parse_sampler(const std::string& text);
std::string to_string(const SamplerSpec& spec);
PointCloud draw(const SamplerSpec& spec, std::size_t n, Rng& rng);

enum class PrevalenceMode { resample, newsample };

std::string to_string(PrevalenceMode mode);
PrevalenceMode parse_mode(const std::string& name);

struct PrevalenceParams {
  BuilderParams builder;
  int k = 1;
  std::size_t B = 20;
  std::size_t n = 0;  // resample size; 0 means |X|
  PrevalenceMode mode = PrevalenceMode::resample;
  double h = 0.001;
  SamplerSpec sampler;  // used by newsample
  std::uint64_t seed = 0;
  unsigned threads = 1;
  MatchOptions match;
};

struct IntervalPrevalence {
  PersistenceInterval interval;
  SimplexChain representative;  // interval.representative as vertex lists
  double p_hat = 0.0;
  std::size_t match_count = 0;
  std::vector<double> rho;  // one per resample, 0 when unmatched
};

struct PrevalenceReport {
  PrevalenceParams params;
  std::vector<IntervalPrevalence> intervals;  // non-ignorable k-intervals of X
  std::size_t degenerate_resamples = 0;       // resamples with an empty complex
  std::vector<std::string> warnings;

  /// Interval positions sorted by decreasing p_hat (ties by position).
  std::vector<std::size_t> ranking() const;
};

/// Draws resample i (0-based) with the generator assigned to it.
using ResampleFn = std::function<PointCloud(std::size_t i, Rng& rng)>;

/// Cycle prevalence of the k-intervals of X over B resamples drawn by
/// `draw_resample`: p_hat = mean over resamples of the affinity of the
/// match in Z_i = X u X_i (0 when unmatched). Deterministic given the seed.
PrevalenceReport prevalence(const PointCloud& base, const PrevalenceParams& params,
                            const ResampleFn& draw_resample);

/// Same with resamples chosen by params.mode: KDE resampling of the base or
/// fresh draws from params.sampler.
PrevalenceReport prevalence(const PointCloud& base, const PrevalenceParams& params);

}  // namespace cyreg
