#pragma once

#include <cstddef>
#include <span>

namespace rieszlab {

/// Pairwise (cascade) sum with a fixed split order, so the result depends only
/// on the input sequence and never on how work was scheduled.
inline double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n <= 16) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace rieszlab
