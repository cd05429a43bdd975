#include "fracdelay/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdelay/finite_difference.hpp"
#include "fracdelay/power_kernel.hpp"
#include "fracdelay/special.hpp"

namespace fracdelay {

bool is_derivative_kind(FracKind k) {
  return k != FracKind::IntegralLeft && k != FracKind::IntegralRight;
}

bool is_caputo_kind(FracKind k) {
  return k == FracKind::CaputoLeft || k == FracKind::CaputoRight;
}

int derivative_index(double order) {
  return static_cast<int>(std::ceil(order));
}

namespace {

bool integer_order(double order) {
  return std::abs(order - std::round(order)) < 1e-12;
}

std::vector<double> reversed(std::span<const double> v) {
  return std::vector<double>(v.rbegin(), v.rend());
}

}  // namespace

std::vector<double> rl_left_span(std::span<const double> v, double h,
                                 double order, int* margin, bool* classical) {
  if (!(order > 0.0))
    throw std::domain_error("rl derivative: order must be positive");
  if (integer_order(order)) {
    const int n = static_cast<int>(std::round(order));
    if (margin) *margin = fd_margin(n);
    if (classical) *classical = true;
    return fd_derivative(v, h, n);
  }
  const int n = derivative_index(order);
  auto g = frac_integral_left_span(v, h, n - order);
  if (margin) *margin = fd_margin(n);
  if (classical) *classical = false;
  return fd_derivative(g, h, n);
}

std::vector<double> rl_right_span(std::span<const double> v, double h,
                                  double order, int* margin, bool* classical) {
  auto rev = reversed(v);
  auto out = rl_left_span(rev, h, order, margin, classical);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<double> caputo_left_span(std::span<const double> v, double h,
                                     double order, int* margin,
                                     bool* classical) {
  if (!(order > 0.0))
    throw std::domain_error("caputo derivative: order must be positive");
  if (integer_order(order)) {
    const int n = static_cast<int>(std::round(order));
    if (margin) *margin = fd_margin(n);
    if (classical) *classical = true;
    return fd_derivative(v, h, n);
  }
  const int n = derivative_index(order);
  auto d = fd_derivative(v, h, n);
  if (margin) *margin = fd_margin(n);
  if (classical) *classical = false;
  return frac_integral_left_span(d, h, n - order);
}

std::vector<double> caputo_right_span(std::span<const double> v, double h,
                                      double order, int* margin,
                                      bool* classical) {
  auto rev = reversed(v);
  auto out = caputo_left_span(rev, h, order, margin, classical);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct Slice {
  int begin;  // active index of anchor_left
  int end;    // active index of anchor_right (inclusive)
};

Slice resolve_anchors(const SampledFunction& f, const FracOpSpec& spec) {
  const Grid& g = f.grid;
  Slice s{0, g.n_active() - 1};
  if (!std::isnan(spec.anchor_left)) s.begin = g.active_index_of(spec.anchor_left);
  if (!std::isnan(spec.anchor_right)) s.end = g.active_index_of(spec.anchor_right);
  if (s.end - s.begin < 1)
    throw std::invalid_argument("fracops: anchored interval is degenerate");
  return s;
}

using SpanOp = std::vector<double> (*)(std::span<const double>, double, double,
                                       int*, bool*);

SampledFunction apply_sliced(const SampledFunction& f, const FracOpSpec& spec,
                             SpanOp op) {
  const Slice s = resolve_anchors(f, spec);
  auto slice = f.active().subspan(s.begin, s.end - s.begin + 1);
  int margin = 0;
  bool classical = false;
  auto vals = op(slice, f.grid.h(), spec.order, &margin, &classical);
  SampledFunction out = SampledFunction::zeros(f.grid);
  std::copy(vals.begin(), vals.end(), out.active().begin() + s.begin);
  out.margin_left = margin;
  out.margin_right = margin;
  out.classical_route = classical;
  return out;
}

std::vector<double> integral_span(std::span<const double> v, double h,
                                  double order, int* margin, bool* classical) {
  if (margin) *margin = 0;
  if (classical) *classical = false;
  return frac_integral_left_span(v, h, order);
}

std::vector<double> integral_right_adapter(std::span<const double> v, double h,
                                           double order, int* margin,
                                           bool* classical) {
  if (margin) *margin = 0;
  if (classical) *classical = false;
  return frac_integral_right_span(v, h, order);
}

}  // namespace

SampledFunction frac_integral(const SampledFunction& f,
                              const FracOpSpec& spec) {
  if (!(spec.order > 0.0))
    throw std::domain_error("frac_integral: order must be positive");
  if (spec.kind == FracKind::IntegralLeft)
    return apply_sliced(f, spec, &integral_span);
  if (spec.kind == FracKind::IntegralRight)
    return apply_sliced(f, spec, &integral_right_adapter);
  throw std::invalid_argument("frac_integral: spec.kind is not an integral");
}

SampledFunction rl_derivative(const SampledFunction& f,
                              const FracOpSpec& spec) {
  if (spec.kind == FracKind::RLLeft)
    return apply_sliced(f, spec, &rl_left_span);
  if (spec.kind == FracKind::RLRight)
    return apply_sliced(f, spec, &rl_right_span);
  throw std::invalid_argument("rl_derivative: spec.kind is not RL");
}

SampledFunction caputo_derivative(const SampledFunction& f,
                                  const FracOpSpec& spec) {
  if (spec.kind == FracKind::CaputoLeft)
    return apply_sliced(f, spec, &caputo_left_span);
  if (spec.kind == FracKind::CaputoRight)
    return apply_sliced(f, spec, &caputo_right_span);
  throw std::invalid_argument("caputo_derivative: spec.kind is not Caputo");
}

SampledFunction frac_apply(const SampledFunction& f, const FracOpSpec& spec) {
  switch (spec.kind) {
    case FracKind::IntegralLeft:
    case FracKind::IntegralRight:
      return frac_integral(f, spec);
    case FracKind::RLLeft:
    case FracKind::RLRight:
      return rl_derivative(f, spec);
    case FracKind::CaputoLeft:
    case FracKind::CaputoRight:
      return caputo_derivative(f, spec);
  }
  throw std::invalid_argument("frac_apply: unknown kind");
}

double connection_residual(const SampledFunction& f, const FracOpSpec& spec,
                           double exclude_width) {
  if (!is_caputo_kind(spec.kind))
    throw std::invalid_argument("connection_residual: needs a Caputo kind");
  const bool left = spec.kind == FracKind::CaputoLeft;
  const double alpha = spec.order;
  const int n = derivative_index(alpha);
  const Grid& g = f.grid;
  const double h = g.h();

  FracOpSpec cspec = spec;
  FracOpSpec rspec = spec;
  rspec.kind = left ? FracKind::RLLeft : FracKind::RLRight;
  auto cap = caputo_derivative(f, cspec);
  auto rl = rl_derivative(f, rspec);

  // Endpoint derivatives f^(k), k = 0..n-1, one-sided from the anchor side.
  std::vector<double> fk(n);
  for (int k = 0; k < n; ++k)
    fk[k] = one_sided_derivative(f.active(), h, k, left);

  const int margin = std::max(cap.margin_left, rl.margin_left);
  const double width = exclude_width < 0.0 ? 4.0 * h : exclude_width;
  const int excl =
      std::max(margin, static_cast<int>(std::ceil(width / h - 1e-9)));

  double worst = 0.0;
  const double endpoint = left ? g.a() : g.b();
  for (int j = excl; j < g.n_active() - excl; ++j) {
    const double t = g.active_node(j);
    const double dist = left ? t - endpoint : endpoint - t;
    double taylor = 0.0;
    for (int k = 0; k < n; ++k) {
      const double sign = left ? 1.0 : (k % 2 == 0 ? 1.0 : -1.0);
      taylor += sign * fk[k] * reciprocal_gamma(k - alpha + 1.0) *
                std::pow(dist, k - alpha);
    }
    worst = std::max(worst,
                     std::abs(cap.at_active(j) - rl.at_active(j) + taylor));
  }
  return worst;
}

double analytic_power_rl(double beta, double alpha, double t_minus_a,
                         bool printed_numerator) {
  if (!(beta > -1.0))
    throw std::domain_error("analytic_power_rl: requires beta > -1");
  if (!(alpha >= 0.0))
    throw std::domain_error("analytic_power_rl: requires alpha >= 0");
  const double num = gamma_fn((printed_numerator ? alpha : beta) + 1.0);
  const double rden = reciprocal_gamma(beta - alpha + 1.0);
  if (rden == 0.0) return 0.0;
  return num * rden * std::pow(t_minus_a, beta - alpha);
}

}  // namespace fracdelay
