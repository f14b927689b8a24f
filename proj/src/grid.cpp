#include "liegeo/grid.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace liegeo {

std::uint64_t ProductGrid::size() const {
  std::uint64_t n = 1;
  for (auto p : points) {
    if (p != 0 && n > UINT64_MAX / p) throw std::overflow_error("grid too large");
    n *= p;
  }
  return n;
}

Vector ProductGrid::point(std::uint64_t index) const {
  Vector v(points.size());
  for (std::size_t i = points.size(); i-- > 0;) {
    v[i] = static_cast<long>(index % points[i]);
    index /= points[i];
  }
  return v;
}

std::optional<GridHit> grid_find_first(const ProductGrid& grid, const std::function<bool(const Vector&)>& nonzero,
                                       unsigned threads) {
  const std::uint64_t total = grid.size();
  if (total == 0) return std::nullopt;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));

  std::atomic<std::uint64_t> best{UINT64_MAX};
  auto sweep = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (nonzero(grid.point(i))) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };

  if (threads <= 1) {
    sweep(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(sweep, begin, end);
    }
  }
  const std::uint64_t hit = best.load();
  if (hit == UINT64_MAX) return std::nullopt;
  return GridHit{hit, grid.point(hit)};
}

long RationalSampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Rational RationalSampler::next() { return frac(uniform(-bound_, bound_), uniform(1, bound_)); }

Vector RationalSampler::vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = next();
  return v;
}

Vector RationalSampler::sparse_vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = uniform(-1, 1);
  return v;
}

}  // namespace liegeo
