#include "fracdelay/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdelay {

Grid::Grid(double a, double b, double tau, int n_active, int n_history)
    : a_(a), b_(b), tau_(tau), h_((b - a) / (n_active - 1)),
      n_active_(n_active), n_history_(n_history) {}

Grid Grid::with_delay(double a, double b, double tau, int n_active) {
  if (!(b > a)) throw std::invalid_argument("grid: requires b > a");
  if (n_active < 2) throw std::invalid_argument("grid: requires n_active >= 2");
  if (!(tau > 0.0))
    throw std::invalid_argument("grid: delay tau must be positive");
  if (!(tau < b - a))
    throw std::invalid_argument("grid: delay tau must satisfy tau < b - a");
  const double h = (b - a) / (n_active - 1);
  const double steps = tau / h;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps) || rounded < 1.0)
    throw std::invalid_argument(
        "grid: delay-grid alignment violated, tau must be an integer "
        "multiple of h");
  return Grid(a, b, tau, n_active, static_cast<int>(rounded));
}

Grid Grid::no_delay(double a, double b, int n_active) {
  if (!(b > a)) throw std::invalid_argument("grid: requires b > a");
  if (n_active < 2) throw std::invalid_argument("grid: requires n_active >= 2");
  return Grid(a, b, 0.0, n_active, 0);
}

int Grid::active_index_of(double t) const {
  const double steps = (t - a_) / h_;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps)))
    throw std::invalid_argument("grid: point does not lie on a grid node");
  const int j = static_cast<int>(rounded);
  if (j < 0 || j >= n_active_)
    throw std::invalid_argument("grid: point outside the active interval");
  return j;
}

bool Grid::same_layout(const Grid& o) const {
  return a_ == o.a_ && b_ == o.b_ && tau_ == o.tau_ &&
         n_active_ == o.n_active_ && n_history_ == o.n_history_;
}

SampledFunction SampledFunction::zeros(const Grid& g) {
  SampledFunction f{g, std::vector<double>(g.n_total(), 0.0)};
  return f;
}

SampledFunction SampledFunction::from_callable(
    const Grid& g, const std::function<double(double)>& fn) {
  SampledFunction f{g, std::vector<double>(g.n_total())};
  for (int i = 0; i < g.n_total(); ++i) f.values[i] = fn(g.node(i));
  return f;
}

bool SampledFunction::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

double interior_max_norm(std::span<const double> v, int lo, int hi) {
  double m = 0.0;
  for (int i = lo; i < static_cast<int>(v.size()) - hi; ++i)
    m = std::max(m, std::abs(v[i]));
  return m;
}

double interior_max_norm(const SampledFunction& f, int exclude) {
  return interior_max_norm(f.active(), exclude + f.margin_left,
                           exclude + f.margin_right);
}

double trapezoid(std::span<const double> v, double h) {
  if (v.size() < 2) return 0.0;
  double s = 0.5 * (v.front() + v.back());
  for (std::size_t i = 1; i + 1 < v.size(); ++i) s += v[i];
  return s * h;
}

}  // namespace fracdelay
