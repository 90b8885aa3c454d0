#include "sectio/quadrature.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include <Eigen/Eigenvalues>

namespace sectio {

namespace {

std::uint64_t key_bits(double x) {
  std::uint64_t k;
  std::memcpy(&k, &x, sizeof k);
  return k;
}

Rule1D build_gauss_jacobi(int r, double alpha, double beta) {
  if (r < 1) throw config_error("gauss_jacobi: need at least one node");
  if (alpha <= -1.0 || beta <= -1.0)
    throw config_error("gauss_jacobi: weight exponents must exceed -1");

  // Jacobi matrix of the three-term recurrence for monic Jacobi
  // polynomials; eigenvalues are the nodes, weights come from the first
  // eigenvector components scaled by the zeroth moment.
  Vec diag(r), sub(std::max(r - 1, 0));
  const double ab = alpha + beta;
  for (int k = 0; k < r; ++k) {
    const double d = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[k] = d == 0.0 ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / d;
  }
  if (ab <= -1.0) throw config_error("gauss_jacobi: alpha + beta must exceed -1");
  for (int k = 1; k < r; ++k) {
    const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    const double den =
        (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0);
    sub[k - 1] = std::sqrt(num / den);
  }

  Eigen::SelfAdjointEigenSolver<Mat> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw numeric_error("gauss_jacobi: tridiagonal eigensolve failed");

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));

  Rule1D rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = Vec(r);
  for (int i = 0; i < r; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }

  if (alpha == beta) {
    // Enforce exact +-t symmetry so antipodal sphere nodes pair up.
    for (int i = 0; i < r / 2; ++i) {
      const int j = r - 1 - i;
      const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
      rule.nodes[i] = -t;
      rule.nodes[j] = t;
      const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
      rule.weights[i] = rule.weights[j] = w;
    }
    if (r % 2 == 1) rule.nodes[r / 2] = 0.0;
  }
  return rule;
}

}  // namespace

const Rule1D& gauss_jacobi(int points, double alpha, double beta) {
  using Key = std::tuple<int, std::uint64_t, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<Rule1D>> cache;
  const Key key{points, key_bits(alpha), key_bits(beta)};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<Rule1D>(build_gauss_jacobi(points, alpha, beta)))
             .first;
  }
  return *it->second;
}

double radial_power_integral(double power, double upper) {
  if (power <= -1.0) throw config_error("radial integral diverges: power <= -1");
  return std::pow(upper, power + 1.0) / (power + 1.0);
}

double radial_integrate(double power, double upper, const std::function<double(double)>& smooth,
                        int base_points, double tol) {
  if (power <= -1.0) throw config_error("radial integral diverges: power <= -1");
  if (upper < 0.0) throw config_error("radial integral: negative upper limit");
  if (upper == 0.0) return 0.0;

  // t = upper*(1+u)/2 maps the weight t^power to the Jacobi weight
  // (1+u)^power; the prefactor carries (upper/2)^{power+1}.
  auto apply = [&](int r) {
    const Rule1D& rule = gauss_jacobi(r, 0.0, power);
    double sum = 0.0;
    for (int i = 0; i < r; ++i) {
      const double t = 0.5 * upper * (1.0 + rule.nodes[i]);
      const double g = smooth(t);
      if (!std::isfinite(g)) throw numeric_error("radial integrand is not finite");
      sum += rule.weights[i] * g;
    }
    return std::pow(0.5 * upper, power + 1.0) * sum;
  };

  double prev = apply(base_points);
  for (int r = 2 * base_points; r <= 1024; r *= 2) {
    const double cur = apply(r);
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw numeric_error("radial integral failed to converge");
}

}  // namespace sectio
