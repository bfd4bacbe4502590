#include "cyreg/enclosing_ball.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>

namespace cyreg {

namespace {

// Gaussian elimination with partial pivoting on a small dense system.
bool solve_small(std::vector<double>& a, std::vector<double>& b, std::size_t n, double scale) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) <= 1e-12 * scale) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * b[c];
    b[i] = s / a[i * n + i];
  }
  return true;
}

}  // namespace

bool circumsphere(const PointCloud& pc, std::span<const Vertex> support, Ball& out) {
  const std::size_t d = pc.dim();
  const std::size_t m = support.size();
  if (m == 0) return false;
  const auto p0 = pc.point(support[0]);
  out.center.assign(p0.begin(), p0.end());
  out.radius = 0.0;
  if (m == 1) return true;
  if (m - 1 > d) return false;

  const std::size_t n = m - 1;
  std::vector<double> v(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = pc.point(support[i + 1]);
    for (std::size_t c = 0; c < d; ++c) v[i * d + c] = pi[c] - p0[c];
  }
  // Center c = p0 + sum_j lambda_j v_j with 2 <v_i, c - p0> = |v_i|^2.
  std::vector<double> gram(n * n), rhs(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) s += v[i * d + c] * v[j * d + c];
      gram[i * n + j] = 2.0 * s;
    }
    rhs[i] = gram[i * n + i] / 2.0;
    scale = std::max(scale, gram[i * n + i]);
  }
  if (scale == 0.0 || !solve_small(gram, rhs, n, scale)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < d; ++c) out.center[c] += rhs[j] * v[j * d + c];
  }
  double r2 = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    const double t = out.center[c] - p0[c];
    r2 += t * t;
  }
  out.radius = std::sqrt(r2);
  return true;
}

Ball min_enclosing_ball(const PointCloud& pc, std::span<const Vertex> points) {
  if (points.empty()) fail(ErrorCode::invalid_argument, "enclosing ball of an empty point set");
  if (points.size() > 16) fail(ErrorCode::invalid_argument, "enclosing ball supports at most 16 points");

  // Work on the distinct locations in coordinate order, so that the result
  // depends only on the point set and not on labels or repeats.
  std::vector<Vertex> pts(points.begin(), points.end());
  auto coords_less = [&](Vertex a, Vertex b) {
    const auto pa = pc.point(a), pb = pc.point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(pts.begin(), pts.end(), coords_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](Vertex a, Vertex b) { return !coords_less(a, b) && !coords_less(b, a); }),
            pts.end());
  const std::size_t m = pts.size();
  const std::size_t max_support = std::min(m, pc.dim() + 1);

  Ball best;
  best.radius = std::numeric_limits<double>::infinity();
  Ball candidate;
  std::vector<Vertex> support;
  support.reserve(max_support);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count > max_support) continue;
    support.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) support.push_back(pts[i]);
    }
    if (!circumsphere(pc, support, candidate)) continue;
    if (candidate.radius >= best.radius) continue;
    const double limit = candidate.radius * candidate.radius * (1.0 + 1e-10) + 1e-300;
    bool encloses = true;
    for (std::size_t i = 0; i < m && encloses; ++i) {
      if (mask & (1u << i)) continue;
      const auto p = pc.point(pts[i]);
      double r2 = 0.0;
      for (std::size_t c = 0; c < pc.dim(); ++c) {
        const double t = p[c] - candidate.center[c];
        r2 += t * t;
      }
      encloses = r2 <= limit;
    }
    if (encloses) best = candidate;
  }
  return best;
}

}  // namespace cyreg
