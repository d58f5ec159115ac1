#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zust {

/// Deterministic summation by fixed-shape binary tree reduction.
/// The tree depends only on the length, so sums of elementwise-negated
/// inputs come out exactly negated.
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

/// Sum a handful of signed terms in an input-order-independent way:
/// sort by (|t|, t), then accumulate.  Negating every term negates the
/// result exactly as long as magnitudes are distinct.
inline double canonical_signed_sum(std::span<double> terms) {
  std::sort(terms.begin(), terms.end(), [](double a, double b) {
    const double fa = std::fabs(a), fb = std::fabs(b);
    if (fa != fb) return fa < fb;
    return a < b;
  });
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

struct LinFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares for y = slope*x + intercept.
inline LinFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
  LinFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

inline int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

/// Run fn over [0,n) split into contiguous chunks, one per worker.
/// Chunk boundaries depend only on (n, threads), so writers that own
/// disjoint output slots stay deterministic.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
  threads = resolve_threads(threads);
  if (n <= 0) return;
  if (threads == 1 || n < 1024) {
    fn(0, n);
    return;
  }
  const std::int64_t nchunks = std::min<std::int64_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nchunks));
  for (std::int64_t c = 0; c < nchunks; ++c) {
    const std::int64_t lo = n * c / nchunks;
    const std::int64_t hi = n * (c + 1) / nchunks;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace zust
