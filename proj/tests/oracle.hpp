#pragma once

// Test-only reference computations, independent of the library's quadrature
// path: adaptive Simpson integration plus closed forms for the operators on
// monomials. Fractional integrals of point values are evaluated through the
// substitution u = v^(1/mu) which removes the endpoint singularity exactly.

#include <cmath>
#include <functional>
#include <vector>

#include "fracdelay/special.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

inline double adaptive_simpson_rec(const Fn& f, double a, double b, double fa,
                                   double fb, double fm, double whole,
                                   double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double err = (refined - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) return refined + err;
  return adaptive_simpson_rec(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

inline double integrate(const Fn& f, double a, double b, double tol = 1e-12) {
  if (b <= a) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fb, fm, whole, tol, 48);
}

/// Left fractional integral (1/Gamma(mu)) int_a^t (t-s)^(mu-1) f(s) ds.
/// Substitution s = t - v^(1/mu) turns the integrand into f(t - v^(1/mu))
/// with constant weight, so the kernel singularity disappears.
inline double frac_integral_left(const Fn& f, double a, double t, double mu,
                                 double tol = 1e-12) {
  if (t <= a) return 0.0;
  const double top = std::pow(t - a, mu);
  auto g = [&](double v) { return f(t - std::pow(v, 1.0 / mu)); };
  return oracle::integrate(g, 0.0, top, tol) / (mu * fracdelay::gamma_fn(mu));
}

inline double frac_integral_right(const Fn& f, double b, double t, double mu,
                                  double tol = 1e-12) {
  if (t >= b) return 0.0;
  const double top = std::pow(b - t, mu);
  auto g = [&](double v) { return f(t + std::pow(v, 1.0 / mu)); };
  return oracle::integrate(g, 0.0, top, tol) / (mu * fracdelay::gamma_fn(mu));
}

/// Left RL derivative of order alpha in (0,1) by central differencing of the
/// (1-alpha)-order integral. Step chosen for ~1e-9 accuracy on smooth data.
inline double rl_left_derivative(const Fn& f, double a, double t, double alpha,
                                 double step = 1e-5) {
  auto I = [&](double x) {
    return frac_integral_left(f, a, x, 1.0 - alpha, 1e-13);
  };
  return (I(t + step) - I(t - step)) / (2.0 * step);
}

/// A polynomial sum c_i x^(p_i), together with its exact left/right RL
/// derivatives via the power rule (anchored at a resp. b; for the right
/// version the coefficients are powers of (b - x)).
struct PowerSum {
  std::vector<double> coeff;
  std::vector<double> expo;

  double operator()(double x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coeff.size(); ++i)
      s += coeff[i] * std::pow(x, expo[i]);
    return s;
  }

  /// Left RL derivative anchored at 0 of sum c_i x^(p_i).
  double rl_left(double x, double alpha) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coeff.size(); ++i)
      s += coeff[i] * fracdelay::gamma_fn(expo[i] + 1.0) *
           fracdelay::reciprocal_gamma(expo[i] - alpha + 1.0) *
           std::pow(x, expo[i] - alpha);
    return s;
  }
};

}  // namespace oracle
