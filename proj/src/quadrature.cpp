#include "hfsim/quadrature.hpp"

namespace hfsim {

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  double worst_err = 0.0;
  bool converged = true;
};

double simpson_recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = (*st.f)(lm);
  const double frm = (*st.f)(rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) {
    if (depth <= 0 && std::abs(err) > tol) {
      st.converged = false;
      if (std::abs(err) > st.worst_err) st.worst_err = std::abs(err);
    }
    return left + right + err;
  }
  return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth) {
  SimpsonState st{&f};
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  QuadratureResult res;
  res.value = simpson_recurse(st, a, b, fa, fm, fb, whole, abs_tol, max_depth);
  res.converged = st.converged;
  res.est_error = st.worst_err;
  return res;
}

}  // namespace hfsim
