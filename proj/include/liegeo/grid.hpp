#pragma once

#include "liegeo/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace liegeo {

/// Product grid {0, ..., points[i]-1} over each coordinate i.
struct ProductGrid {
  std::vector<std::size_t> points;

  std::uint64_t size() const;
  /// Grid point with the given mixed-radix index (first coordinate varies slowest).
  Vector point(std::uint64_t index) const;
};

struct GridHit {
  std::uint64_t index;
  Vector point;
};

/// Returns the lowest-index grid point where `nonzero` holds, or nullopt
/// after evaluating every point. Chunks are swept concurrently; the answer
/// is independent of the thread count. `nonzero` must be thread-safe.
std::optional<GridHit> grid_find_first(const ProductGrid& grid, const std::function<bool(const Vector&)>& nonzero,
                                       unsigned threads = 0);

/// Seeded source of small rationals num/den with |num| <= bound, 1 <= den <= bound.
/// Uses only raw mt19937_64 output so streams are identical across platforms.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long bound = 10) : engine_(seed), bound_(bound) {}
  Rational next();
  Vector vector(std::size_t n);
  /// Entries drawn from {-1, 0, 1}.
  Vector sparse_vector(std::size_t n);
  std::uint64_t raw() { return engine_(); }

 private:
  long uniform(long lo, long hi);
  std::mt19937_64 engine_;
  long bound_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

}  // namespace liegeo
