#ifndef SECTIO_COMMON_HPP
#define SECTIO_COMMON_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sectio {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Invalid run configuration (bad dimensions, unsupported parameters,
// malformed specs). Maps to exit code 2 at the CLI.
class config_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to converge or produced non-finite
// values. Maps to exit code 3.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A mathematically meaningless request was refused (e.g. asking for a
// counterexample when the kernel is positive definite). Exit code 4.
class refusal_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double pi = 3.14159265358979323846;

// Surface area of the unit sphere S^{n-1} in R^n.
inline double sphere_area(int n) {
  if (n < 1) throw config_error("sphere_area: dimension must be >= 1");
  return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

// Volume of the unit Euclidean ball in R^n.
inline double ball_volume(int n) { return sphere_area(n) / n; }

// Volume of the unit l_p ball in R^n, [2*Gamma(1+1/p)]^n / Gamma(1+n/p).
// p = infinity gives the cube [-1,1]^n.
inline double lp_ball_volume(int n, double p) {
  if (n < 1) throw config_error("lp_ball_volume: dimension must be >= 1");
  if (!(p > 0)) throw config_error("lp_ball_volume: p must be positive");
  if (std::isinf(p)) return std::pow(2.0, n);
  const double lg =
      n * (std::log(2.0) + std::lgamma(1.0 + 1.0 / p)) - std::lgamma(1.0 + double(n) / p);
  return std::exp(lg);
}

}  // namespace sectio

#endif
