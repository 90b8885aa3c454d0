#ifndef SECTIO_SPHERE_HPP
#define SECTIO_SPHERE_HPP

#include <functional>
#include <memory>
#include <vector>

#include "sectio/common.hpp"
#include "sectio/rng.hpp"

namespace sectio {

using SphereFn = std::function<double(const Vec&)>;

// Unit vector in R^n, n >= 2. Inputs whose norm deviates from 1 by more
// than 1e-6 are rejected instead of silently normalized.
class Direction {
public:
  explicit Direction(Vec coords);
  const Vec& coords() const { return coords_; }
  int dim() const { return int(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

private:
  Vec coords_;
};

Direction axis_direction(int n, int axis);

// Quadrature nodes and positive weights on a unit sphere, possibly one
// embedded in a higher-dimensional space (a great subsphere). Nodes come
// in antipodal pairs with equal weight; `antipode(i)` gives the pair
// index. Immutable and cheap to copy.
class SphereGrid {
public:
  int ambient_dim() const;          // dimension of the coordinates
  int sphere_dim() const;           // d for a grid covering S^{d-1}
  int resolution() const;
  int size() const;
  Vec node(int i) const;
  const Mat& nodes() const;         // size() x ambient_dim(), row per node
  const Vec& weights() const;
  int antipode(int i) const;
  double area() const;              // |S^{d-1}|, the exact weight total

  struct Impl;
  explicit SphereGrid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }

private:
  std::shared_ptr<const Impl> impl_;
};

// Orthonormal frame splitting R^n into a subspace (basis columns) and its
// orthogonal complement (normal columns).
struct SubspaceFrame {
  Mat basis;    // n x (n-k)
  Mat normals;  // n x k
  int ambient_dim() const { return int(basis.rows()); }
  int subspace_dim() const { return int(basis.cols()); }
};

// Product Gauss-Jacobi/uniform-circle rule on S^{n-1}. Exact (to
// rounding) for polynomials of degree <= 2*resolution - 1 in the ambient
// coordinates. Grids are cached per (n, resolution).
SphereGrid build_sphere_grid(int n, int resolution);

// Deterministic orthonormal basis of xi^perp via the Householder
// reflection exchanging e1 and xi (identity completion near xi = e1).
SubspaceFrame orthonormal_complement(const Direction& xi);

// Frame validation used by constructors and tests.
void check_frame(const SubspaceFrame& frame, double tol = 1e-12);

// Uniformly random frame for an (n-k)-dimensional subspace, from a
// QR-orthonormalized Gaussian matrix (sign-fixed, so deterministic for a
// fixed rng/counter).
SubspaceFrame random_subspace_frame(int n, int subspace_dim, const CounterRng& rng,
                                    std::uint64_t counter);

// Grid on the unit sphere of span(frame.basis), embedded in R^n; weights
// total the area of S^{d-1} for d = subspace_dim.
SphereGrid great_subsphere_grid(const SubspaceFrame& frame, int resolution);

// Sum of w_i * f(node_i) with a fixed pairwise reduction tree. Integrand
// evaluations run in parallel; the result is worker-count independent.
double integrate_on_grid(const SphereGrid& grid, const SphereFn& f);

// Same, for precomputed node values.
double integrate_values(const SphereGrid& grid, const Vec& values);

// Node values of f, evaluated in parallel.
Vec grid_values(const SphereGrid& grid, const SphereFn& f);

}  // namespace sectio

#endif
