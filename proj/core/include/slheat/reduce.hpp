#pragma once

#include <cstddef>
#include <span>

namespace slheat {

/// Pairwise (tree) summation with a fixed split order.
///
/// The result depends only on the input values and their order, never on
/// thread count or scheduling, so grid integrals are bit-reproducible.
/// Error grows like O(log n) ulps instead of O(n) for a naive loop.
double pairwise_sum(std::span<const double> values);

/// Pairwise sum of f(values[i]) without materializing the mapped array.
template <class Map>
double pairwise_sum_mapped(std::span<const double> values, Map&& map) {
  constexpr std::size_t kLeaf = 16;
  if (values.size() <= kLeaf) {
    double acc = 0.0;
    for (double v : values) acc += map(v);
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum_mapped(values.first(half), map) +
         pairwise_sum_mapped(values.subspan(half), map);
}

}  // namespace slheat
