#ifndef HFSIM_QUADRATURE_HPP
#define HFSIM_QUADRATURE_HPP

#include <cmath>
#include <functional>

namespace hfsim {

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;  // absolute error estimate of the final refinement
  bool converged = true;
};

/// Adaptive Simpson integration of f over [a, b] to an absolute tolerance.
/// Depth-limited; on hitting the depth limit the result is still returned
/// with converged = false and the achieved error estimate.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth = 24);

}  // namespace hfsim

#endif  // HFSIM_QUADRATURE_HPP
