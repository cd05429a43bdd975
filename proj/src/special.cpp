#include "fracdelay/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdelay {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's tabulation).
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;

// Valid for re(x) > 0.5.
double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12 * (1.0 + std::abs(x));
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  // pow(t, z+0.5) overflows before Gamma itself does; go through logs there.
  if (x > 140.0) return std::exp(log_gamma(x));
  return lanczos_gamma(x);
}

double reciprocal_gamma(double x) {
  if (x > 0.0) return 1.0 / gamma_fn(x);
  if (is_nonpositive_integer(x)) return 0.0;
  // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi, with 1-x > 1.
  return std::sin(kPi * x) * gamma_fn(1.0 - x) / kPi;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
  const double z = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

GammaValue gamma_value(double x) { return GammaValue{x, gamma_fn(x)}; }

}  // namespace fracdelay
