#include "sectio/sphere.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <Eigen/QR>

#include "sectio/parallel.hpp"
#include "sectio/quadrature.hpp"

namespace sectio {

Direction::Direction(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw config_error("Direction: dimension must be >= 2");
  const double norm = coords_.norm();
  if (std::abs(norm - 1.0) > 1e-6)
    throw config_error("Direction: vector norm deviates from 1 by more than 1e-6");
  coords_ /= norm;
}

Direction axis_direction(int n, int axis) {
  if (axis < 0 || axis >= n) throw config_error("axis_direction: axis out of range");
  Vec v = Vec::Zero(n);
  v[axis] = 1.0;
  return Direction(v);
}

struct SphereGrid::Impl {
  int sphere_dim = 0;  // grid covers S^{sphere_dim - 1}
  int resolution = 0;
  Mat nodes;           // count x ambient
  Vec weights;
  std::vector<int> antipode;
  double area = 0.0;
};

int SphereGrid::ambient_dim() const { return int(impl_->nodes.cols()); }
int SphereGrid::sphere_dim() const { return impl_->sphere_dim; }
int SphereGrid::resolution() const { return impl_->resolution; }
int SphereGrid::size() const { return int(impl_->nodes.rows()); }
Vec SphereGrid::node(int i) const { return impl_->nodes.row(i).transpose(); }
const Mat& SphereGrid::nodes() const { return impl_->nodes; }
const Vec& SphereGrid::weights() const { return impl_->weights; }
int SphereGrid::antipode(int i) const { return impl_->antipode[i]; }
double SphereGrid::area() const { return impl_->area; }

namespace {

// Recursive product construction: S^{d-1} splits into a Gauss-Jacobi
// level t in [-1,1] with weight (1-t^2)^{(d-3)/2} and a copy of S^{d-2}
// scaled by sqrt(1-t^2). The base circle uses the uniform rule, exact
// for trigonometric polynomials of degree < 2*resolution.
void build_unit_grid(int d, int resolution, Mat& nodes, Vec& weights,
                     std::vector<int>& antipode) {
  if (d == 2) {
    const int count = 2 * resolution;
    nodes.resize(count, 2);
    weights.resize(count);
    antipode.resize(count);
    for (int k = 0; k < count; ++k) {
      const double phi = 2.0 * pi * k / count;
      nodes(k, 0) = std::cos(phi);
      nodes(k, 1) = std::sin(phi);
      weights[k] = 2.0 * pi / count;
      antipode[k] = (k + resolution) % count;
    }
    return;
  }

  Mat sub_nodes;
  Vec sub_weights;
  std::vector<int> sub_antipode;
  build_unit_grid(d - 1, resolution, sub_nodes, sub_weights, sub_antipode);

  const Rule1D& rule = gauss_jacobi(resolution, 0.5 * (d - 3), 0.5 * (d - 3));
  const int levels = resolution;
  const int sub_count = int(sub_nodes.rows());
  const int count = levels * sub_count;
  nodes.resize(count, d);
  weights.resize(count);
  antipode.resize(count);
  for (int i = 0; i < levels; ++i) {
    const double t = rule.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    for (int j = 0; j < sub_count; ++j) {
      const int idx = i * sub_count + j;
      nodes(idx, 0) = t;
      nodes.block(idx, 1, 1, d - 1) = s * sub_nodes.row(j);
      weights[idx] = rule.weights[i] * sub_weights[j];
      antipode[idx] = (levels - 1 - i) * sub_count + sub_antipode[j];
    }
  }
}

std::shared_ptr<const SphereGrid::Impl> make_impl(int d, int resolution) {
  auto impl = std::make_shared<SphereGrid::Impl>();
  impl->sphere_dim = d;
  impl->resolution = resolution;
  build_unit_grid(d, resolution, impl->nodes, impl->weights, impl->antipode);
  impl->area = sphere_area(d);
  return impl;
}

}  // namespace

SphereGrid build_sphere_grid(int n, int resolution) {
  if (n < 2) throw config_error("build_sphere_grid: dimension must be >= 2");
  if (resolution < 4) throw config_error("build_sphere_grid: resolution must be >= 4");

  using Key = std::pair<int, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const SphereGrid::Impl>> cache;
  const Key key{n, resolution};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_impl(n, resolution)).first;
  return SphereGrid(it->second);
}

void check_frame(const SubspaceFrame& frame, double tol) {
  const int n = frame.ambient_dim();
  Mat full(n, frame.basis.cols() + frame.normals.cols());
  full << frame.basis, frame.normals;
  if (full.cols() != n) throw config_error("frame: basis plus normals must span R^n");
  const Mat gram = full.transpose() * full;
  if ((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    throw numeric_error("frame: basis/normal system is not orthonormal");
}

SubspaceFrame orthonormal_complement(const Direction& xi) {
  const int n = xi.dim();
  const Vec& x = xi.coords();
  SubspaceFrame frame;
  frame.basis.resize(n, n - 1);
  frame.normals = x;

  if (x[0] > 1.0 - 1e-9) {
    frame.basis.setZero();
    for (int j = 1; j < n; ++j) frame.basis(j, j - 1) = 1.0;
  } else {
    Vec v = x;
    v[0] -= 1.0;
    const double vv = v.squaredNorm();
    for (int j = 1; j < n; ++j) {
      Vec col = Vec::Zero(n);
      col[j] = 1.0;
      col -= (2.0 * v[j] / vv) * v;
      frame.basis.col(j - 1) = col;
    }
  }
  check_frame(frame);
  return frame;
}

SubspaceFrame random_subspace_frame(int n, int subspace_dim, const CounterRng& rng,
                                    std::uint64_t counter) {
  if (subspace_dim < 1 || subspace_dim >= n)
    throw config_error("random_subspace_frame: need 1 <= dim < n");
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = rng.normal(counter * std::uint64_t(n * n) + std::uint64_t(i * n + j));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  SubspaceFrame frame;
  frame.basis = q.leftCols(subspace_dim);
  frame.normals = q.rightCols(n - subspace_dim);
  check_frame(frame, 1e-10);
  return frame;
}

SphereGrid great_subsphere_grid(const SubspaceFrame& frame, int resolution) {
  const int d = frame.subspace_dim();
  if (d < 2) throw config_error("great_subsphere_grid: subspace dimension must be >= 2");
  if (resolution < 4) throw config_error("great_subsphere_grid: resolution must be >= 4");
  check_frame(frame, 1e-10);

  auto impl = std::make_shared<SphereGrid::Impl>();
  {
    Mat nodes;
    build_unit_grid(d, resolution, nodes, impl->weights, impl->antipode);
    impl->nodes = nodes * frame.basis.transpose();
  }
  impl->sphere_dim = d;
  impl->resolution = resolution;
  impl->area = sphere_area(d);
  return SphereGrid(impl);
}

Vec grid_values(const SphereGrid& grid, const SphereFn& f) {
  Vec values(grid.size());
  parallel_for(std::size_t(grid.size()),
               [&](std::size_t i) { values[long(i)] = f(grid.node(int(i))); });
  return values;
}

double integrate_values(const SphereGrid& grid, const Vec& values) {
  if (values.size() != grid.size())
    throw config_error("integrate_values: value count does not match grid");
  const Vec terms = grid.weights().cwiseProduct(values);
  return pairwise_sum(terms);
}

double integrate_on_grid(const SphereGrid& grid, const SphereFn& f) {
  return integrate_values(grid, grid_values(grid, f));
}

}  // namespace sectio
