#ifndef SECTIO_RNG_HPP
#define SECTIO_RNG_HPP

#include <cstdint>

#include "sectio/common.hpp"

namespace sectio {

// Counter-based RNG: every draw is a pure function of (seed, stream,
// counter), so sampling parallelizes over items with no shared state and
// the results do not depend on the worker count.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

  // Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const {
    const std::uint64_t z = mix(key_ ^ mix(counter + 0x632be59bd9b4e019ull));
    return double(z >> 11) * 0x1.0p-53;
  }

  // Standard normal (Box-Muller; each counter yields one deviate).
  double normal(std::uint64_t counter) const {
    const double u1 = uniform(counter * 2 + 1);
    const double u2 = uniform(counter * 2 + 2);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * pi * u2);
  }

  // Uniform direction on S^{n-1}; consumes n normal counters.
  Vec unit_vector(int n, std::uint64_t counter) const {
    Vec v(n);
    do {
      for (int i = 0; i < n; ++i) v[i] = normal(counter * std::uint64_t(n) + i);
      counter += 0x100000001ull;
    } while (v.norm() < 1e-8);
    return v / v.norm();
  }

  std::uint64_t pick_index(std::uint64_t counter, std::uint64_t bound) const {
    return std::uint64_t(uniform(counter) * double(bound)) % bound;
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

}  // namespace sectio

#endif
