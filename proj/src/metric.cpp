#include "cyreg/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cyreg {

std::string to_string(Norm norm) { return norm == Norm::sup ? "sup" : "euclidean"; }

Norm parse_norm(const std::string& name) {
  if (name == "sup" || name == "inf" || name == "max") return Norm::sup;
  if (name == "euclidean" || name == "l2") return Norm::euclidean;
  fail(ErrorCode::invalid_argument, "unknown norm '" + name + "' (expected sup or euclidean)");
}

double point_distance(DiagramPoint a, DiagramPoint b, Norm norm) {
  const bool ia = std::isinf(a.death);
  const bool ib = std::isinf(b.death);
  if (ia && ib) return std::abs(a.birth - b.birth);
  if (ia || ib) return kInfinity;
  const double db = std::abs(a.birth - b.birth);
  const double dd = std::abs(a.death - b.death);
  return norm == Norm::sup ? std::max(db, dd) : std::hypot(db, dd);
}

double diagonal_distance(DiagramPoint a, Norm norm) {
  const double len = std::max(0.0, a.death - a.birth);
  return norm == Norm::sup ? len / 2.0 : len / std::numbers::sqrt2;
}

namespace {

void check_p(double p) {
  if (!(p >= 1.0)) fail(ErrorCode::invalid_argument, "p must be at least 1");
}

class PowerSum {
 public:
  explicit PowerSum(double p) : p_(p) {}
  void add(double term) {
    if (std::isinf(p_)) acc_ = std::max(acc_, term);
    else acc_ += std::pow(term, p_);
  }
  double value() const { return std::isinf(p_) ? acc_ : std::pow(acc_, 1.0 / p_); }

 private:
  double p_;
  double acc_ = 0.0;
};

DiagramPoint point(const PersistenceInterval& iv) { return {iv.birth, iv.death}; }

}  // namespace

DimResult d_im(const MatchResult& m, const MetricParams& params) {
  check_p(params.p);
  DimResult r;
  PowerSum sum(params.p);
  std::vector<char> used_x(m.x_intervals.size(), 0), used_y(m.y_intervals.size(), 0);
  for (const auto& rec : m.matches) {
    used_x[rec.gamma] = used_y[rec.delta] = 1;
    const double d =
        point_distance(point(m.x_intervals[rec.gamma]), point(m.y_intervals[rec.delta]), params.norm);
    if (std::isinf(d)) {
      ++r.excluded_infinite;
      continue;
    }
    ++r.matched;
    sum.add(d);
  }
  auto unmatched = [&](const std::vector<PersistenceInterval>& ivs, const std::vector<char>& used,
                       std::size_t& count) {
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (used[i] || ivs[i].ignorable()) continue;
      if (ivs[i].infinite()) {
        ++r.excluded_infinite;
        continue;
      }
      ++count;
      sum.add(diagonal_distance(point(ivs[i]), params.norm));
    }
  };
  unmatched(m.x_intervals, used_x, r.unmatched_x);
  unmatched(m.y_intervals, used_y, r.unmatched_y);
  r.value = sum.value();
  return r;
}

std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n) {
  // Shortest augmenting paths with potentials; 1-based internally.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

double d_wasserstein(const Diagram& a, const Diagram& b, const MetricParams& params) {
  check_p(params.p);
  if (std::isinf(params.p)) {
    fail(ErrorCode::invalid_argument, "Wasserstein distance needs a finite p");
  }
  std::vector<DiagramPoint> fa, fb;
  std::vector<double> ia, ib;
  for (const auto& q : a) (std::isinf(q.death) ? ia.push_back(q.birth) : fa.push_back(q));
  for (const auto& q : b) (std::isinf(q.death) ? ib.push_back(q.birth) : fb.push_back(q));
  if (ia.size() != ib.size()) return kInfinity;
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());

  double total = 0.0;
  for (std::size_t i = 0; i < ia.size(); ++i) total += std::pow(std::abs(ia[i] - ib[i]), params.p);

  const std::size_t na = fa.size(), nb = fb.size(), n = na + nb;
  if (n > 0) {
    std::vector<double> cost(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double c = 0.0;
        if (i < na && j < nb) c = point_distance(fa[i], fb[j], params.norm);
        else if (i < na) c = diagonal_distance(fa[i], params.norm);
        else if (j < nb) c = diagonal_distance(fb[j], params.norm);
        cost[i * n + j] = std::pow(c, params.p);
      }
    }
    const auto assignment = hungarian(cost, n);
    for (std::size_t i = 0; i < n; ++i) total += cost[i * n + assignment[i]];
  }
  return std::pow(total, 1.0 / params.p);
}

}  // namespace cyreg
