#pragma once

namespace fracdelay {

/// Gamma function for positive arguments, Lanczos approximation (g = 7).
/// Accurate to at least 12 significant digits on (0, 171]; overflows to +inf
/// beyond ~171.6. Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// 1/Gamma(x) for any real x. Returns exactly 0 at the poles x = 0, -1, -2, ...
/// Negative non-integer arguments go through the reflection formula.
double reciprocal_gamma(double x);

/// Natural log of Gamma(x), x > 0.
double log_gamma(double x);

/// Argument/value pair, convenient for tabulating and for recurrence checks.
struct GammaValue {
  double argument = 0.0;
  double value = 0.0;
};

GammaValue gamma_value(double x);

}  // namespace fracdelay
