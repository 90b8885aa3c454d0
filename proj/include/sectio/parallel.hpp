#ifndef SECTIO_PARALLEL_HPP
#define SECTIO_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sectio/common.hpp"

namespace sectio {

// Worker count: min(hardware, SECTIO_THREADS). Results never depend on it.
int worker_count();

// Runs fn(i) for i in [0, count) on the worker pool. fn must only write
// to per-index slots; iteration order is unspecified.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Fixed-shape pairwise tree sum; bit-reproducible regardless of the
// worker count used to fill the buffer.
double pairwise_sum(std::span<const double> values);

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(std::span<const double>(v.data(), v.size()));
}

inline double pairwise_sum(const Vec& v) {
  return pairwise_sum(std::span<const double>(v.data(), std::size_t(v.size())));
}

}  // namespace sectio

#endif
