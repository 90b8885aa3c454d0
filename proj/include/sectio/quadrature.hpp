#ifndef SECTIO_QUADRATURE_HPP
#define SECTIO_QUADRATURE_HPP

#include <functional>

#include "sectio/common.hpp"

namespace sectio {

// One-dimensional rule on [-1, 1] for the weight (1-t)^alpha (1+t)^beta.
struct Rule1D {
  Vec nodes;
  Vec weights;
};

// Gauss-Jacobi rule (Golub-Welsch). Exact for polynomial integrands of
// degree <= 2*points - 1 against the Jacobi weight. Cached per
// (points, alpha, beta); when alpha == beta the rule is symmetrized so
// antipodal node pairs match bit-for-bit.
const Rule1D& gauss_jacobi(int points, double alpha, double beta);

inline const Rule1D& gauss_legendre(int points) { return gauss_jacobi(points, 0.0, 0.0); }

// Integral of t^power * smooth(t) over [0, upper]. `power` > -1 may be
// fractional; it is folded into a Gauss-Jacobi weight so only the smooth
// part needs to be resolved. Node count doubles from `base_points` until
// two successive rules agree to `tol` (relative); throws numeric_error
// when the cap is hit without agreement or the integrand is non-finite.
double radial_integrate(double power, double upper, const std::function<double(double)>& smooth,
                        int base_points = 64, double tol = 1e-10);

// Fast path for integrands t^power * c with constant c: one rule, no
// agreement test (the rule is already exact).
double radial_power_integral(double power, double upper);

}  // namespace sectio

#endif
