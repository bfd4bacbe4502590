#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "cyreg/bootstrap.hpp"

namespace cyreg {

std::string to_string(PrevalenceMode mode) {
  return mode == PrevalenceMode::resample ? "resample" : "newsample";
}

PrevalenceMode parse_mode(const std::string& name) {
  if (name == "resample") return PrevalenceMode::resample;
  if (name == "newsample") return PrevalenceMode::newsample;
  fail(ErrorCode::invalid_argument,
       "unknown prevalence mode '" + name + "' (expected resample or newsample)");
}

std::vector<std::size_t> PrevalenceReport::ranking() const {
  std::vector<std::size_t> order(intervals.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return intervals[a].p_hat > intervals[b].p_hat;
  });
  return order;
}

namespace {

struct ResampleOutcome {
  std::vector<double> rho;  // per tracked interval
  std::vector<char> matched;
  bool degenerate = false;
};

}  // namespace

PrevalenceReport prevalence(const PointCloud& base, const PrevalenceParams& params,
                            const ResampleFn& draw_resample) {
  if (params.B == 0) fail(ErrorCode::invalid_argument, "B must be at least 1");
  if (params.k < 0) fail(ErrorCode::invalid_argument, "k must be non-negative");
  if (base.empty()) fail(ErrorCode::invalid_argument, "prevalence of an empty cloud");

  PrevalenceReport report;
  report.params = params;
  const auto fx = build_filtration(base, params.builder);
  const auto x_all = reduce(fx, params.k);

  // Tracked intervals: non-ignorable k-intervals, in birth-simplex order.
  std::vector<std::size_t> tracked;  // positions among the k-intervals
  std::vector<PersistenceInterval> xk;
  for (const auto& iv : x_all) {
    if (iv.dim != params.k) continue;
    if (!iv.ignorable()) tracked.push_back(xk.size());
    xk.push_back(iv);
  }

  std::vector<ResampleOutcome> outcomes(params.B);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= params.B) return;
      try {
        Rng rng = stream_rng(params.seed, i + 1);
        const PointCloud xi = draw_resample(i, rng);
        ResampleOutcome& out = outcomes[i];
        out.rho.assign(tracked.size(), 0.0);
        out.matched.assign(tracked.size(), 0);
        const auto fy = build_filtration(xi, params.builder);
        if (fx.empty() || fy.empty()) {
          out.degenerate = true;
          continue;
        }
        const auto u = union_filtration(base, fx, xi, fy, params.builder);
        const auto y_all = reduce(fy, params.k);
        const auto res = match_intervals(fx, fy, u.z, u.from_x, u.from_y, params.k, xk, y_all,
                                         params.match);
        for (std::size_t t = 0; t < tracked.size(); ++t) {
          if (auto m = res.match_of_x(tracked[t])) {
            out.rho[t] = std::max(out.rho[t], res.matches[*m].affinity.rho);
            out.matched[t] = 1;
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(params.B);
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(params.threads,
                                                           static_cast<unsigned>(params.B)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  report.intervals.resize(tracked.size());
  for (std::size_t t = 0; t < tracked.size(); ++t) {
    report.intervals[t].interval = xk[tracked[t]];
    report.intervals[t].representative = fx.to_simplices(xk[tracked[t]].representative);
    report.intervals[t].rho.reserve(params.B);
  }
  for (std::size_t i = 0; i < params.B; ++i) {
    const auto& out = outcomes[i];
    if (out.degenerate) ++report.degenerate_resamples;
    for (std::size_t t = 0; t < tracked.size(); ++t) {
      const double r = out.rho.empty() ? 0.0 : out.rho[t];
      auto& ip = report.intervals[t];
      ip.rho.push_back(r);
      if (!out.matched.empty() && out.matched[t]) ++ip.match_count;
    }
  }
  for (auto& ip : report.intervals) {
    double sum = 0.0;
    for (double r : ip.rho) sum += r;
    ip.p_hat = std::clamp(sum / static_cast<double>(params.B), 0.0, 1.0);
  }
  if (report.degenerate_resamples > 0) {
    report.warnings.push_back(std::to_string(report.degenerate_resamples) +
                              " resample(s) produced an empty complex; their affinities are 0");
  }
  return report;
}

PrevalenceReport prevalence(const PointCloud& base, const PrevalenceParams& params) {
  const std::size_t n = params.n == 0 ? base.size() : params.n;
  if (params.mode == PrevalenceMode::resample) {
    return prevalence(base, params, [&](std::size_t, Rng& rng) {
      return kde_sample(base, params.h, n, rng);
    });
  }
  return prevalence(base, params,
                    [&](std::size_t, Rng& rng) { return draw(params.sampler, n, rng); });
}

}  // namespace cyreg
