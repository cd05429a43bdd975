#pragma once

#include <limits>
#include <span>
#include <vector>

#include "fracdelay/grid.hpp"

namespace fracdelay {

enum class FracKind {
  IntegralLeft,
  IntegralRight,
  RLLeft,
  RLRight,
  CaputoLeft,
  CaputoRight
};

/// Which operator to apply, at which order, anchored where. Anchors default
/// to the active interval ends; when given they must lie on grid nodes and
/// the operator acts on that sub-interval (output is zero outside it).
/// Derivative orders are meant to satisfy n-1 < order < n strictly; integer
/// orders are routed to classical finite-difference derivatives and the
/// result carries the classical_route flag.
struct FracOpSpec {
  FracKind kind = FracKind::IntegralLeft;
  double order = 0.5;
  double anchor_left = std::numeric_limits<double>::quiet_NaN();
  double anchor_right = std::numeric_limits<double>::quiet_NaN();
};

bool is_derivative_kind(FracKind k);
bool is_caputo_kind(FracKind k);

/// ceil(order) for non-integer orders, the paper's n with n-1 < order < n.
int derivative_index(double order);

// Slice-level operators on uniformly sampled values; margin (if non-null)
// receives the number of one-sided-stencil nodes at each end, classical the
// integer-order routing flag.
std::vector<double> rl_left_span(std::span<const double> v, double h,
                                 double order, int* margin = nullptr,
                                 bool* classical = nullptr);
std::vector<double> rl_right_span(std::span<const double> v, double h,
                                  double order, int* margin = nullptr,
                                  bool* classical = nullptr);
std::vector<double> caputo_left_span(std::span<const double> v, double h,
                                     double order, int* margin = nullptr,
                                     bool* classical = nullptr);
std::vector<double> caputo_right_span(std::span<const double> v, double h,
                                      double order, int* margin = nullptr,
                                      bool* classical = nullptr);

/// Riemann-Liouville fractional integral (kind IntegralLeft/IntegralRight).
SampledFunction frac_integral(const SampledFunction& f, const FracOpSpec& spec);

/// Riemann-Liouville derivative: n-th finite-difference derivative of the
/// (n-order)-order fractional integral, with the (-d/dt)^n sign built into
/// the right-sided version.
SampledFunction rl_derivative(const SampledFunction& f, const FracOpSpec& spec);

/// Caputo derivative: (n-order)-order fractional integral of the n-th
/// finite-difference derivative, (-1)^n sign for the right-sided version.
SampledFunction caputo_derivative(const SampledFunction& f,
                                  const FracOpSpec& spec);

/// Dispatch on spec.kind.
SampledFunction frac_apply(const SampledFunction& f, const FracOpSpec& spec);

/// Max-norm over interior grid points of the Caputo-vs-RL connection
/// identity: Caputo(f) - RL(f) + sum_k f^(k)(endpoint) (t-endpoint)^(k-order)
/// / Gamma(k-order+1), endpoint derivatives by one-sided differences. The
/// norm excludes `exclude_width` (default 4h) plus the stencil margins at
/// each end; pass a fixed width when comparing across refinement levels.
double connection_residual(const SampledFunction& f, const FracOpSpec& spec,
                           double exclude_width = -1.0);

/// Closed-form left RL derivative of (t-a)^beta, the power rule
/// Gamma(beta+1) (t-a)^(beta-alpha) / Gamma(beta-alpha+1). Gamma poles in
/// the denominator give 0. `printed_numerator` switches the numerator to
/// Gamma(alpha+1) for comparison against the commonly misprinted form; the
/// default is the quadrature-confirmed one.
double analytic_power_rl(double beta, double alpha, double t_minus_a,
                         bool printed_numerator = false);

}  // namespace fracdelay
