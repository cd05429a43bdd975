#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fracdelay {

/// Uniform discretization of [a - tau, b]. The active interval is [a, b]
/// (n_active nodes, step h = (b-a)/(n_active-1)); the history segment holds
/// n_history nodes in [a - tau, a). The delay must be an integer number of
/// steps so delayed values are plain index shifts; a delayed problem further
/// requires 0 < tau < b - a. Grids without a history segment (tau = 0) are
/// used for plain operator work.
class Grid {
 public:
  /// Grid for a delayed problem; rejects tau outside (0, b-a) and delays that
  /// do not align with the step.
  static Grid with_delay(double a, double b, double tau, int n_active);

  /// Plain grid on [a, b] with no history segment.
  static Grid no_delay(double a, double b, int n_active);

  double a() const { return a_; }
  double b() const { return b_; }
  double tau() const { return tau_; }
  double h() const { return h_; }
  int n_active() const { return n_active_; }
  int n_history() const { return n_history_; }
  int n_total() const { return n_history_ + n_active_; }

  /// Node position by global index (0 = a - tau, n_history = a).
  double node(int i) const { return a_ - tau_ + h_ * i; }
  /// Node position by active index (0 = a).
  double active_node(int j) const { return a_ + h_ * j; }

  /// Active index of an on-grid point in [a, b]; throws if t is not aligned.
  int active_index_of(double t) const;

  bool same_layout(const Grid& o) const;

 private:
  Grid(double a, double b, double tau, int n_active, int n_history);

  double a_, b_, tau_, h_;
  int n_active_, n_history_;
};

/// Values on a Grid, history segment included. Operators record how many
/// nodes at each end of their output were produced by one-sided stencils
/// (margin_left/margin_right, counted at the ends of the anchored interval);
/// those nodes are excluded from residual norms. classical_route marks
/// results where an integer order was routed to a classical derivative.
struct SampledFunction {
  Grid grid;
  std::vector<double> values;
  int margin_left = 0;
  int margin_right = 0;
  bool classical_route = false;

  static SampledFunction zeros(const Grid& g);
  static SampledFunction from_callable(const Grid& g,
                                       const std::function<double(double)>& f);

  double at_active(int j) const { return values[grid.n_history() + j]; }
  double& at_active(int j) { return values[grid.n_history() + j]; }

  std::span<const double> active() const {
    return std::span<const double>(values).subspan(grid.n_history(),
                                                   grid.n_active());
  }
  std::span<double> active() {
    return std::span<double>(values).subspan(grid.n_history(),
                                             grid.n_active());
  }

  bool all_finite() const;
};

/// max |v_i| over i in [lo, n - hi).
double interior_max_norm(std::span<const double> v, int lo, int hi);

/// max |f| over active nodes, excluding `exclude` nodes at each active end
/// plus the function's own stencil margins.
double interior_max_norm(const SampledFunction& f, int exclude);

/// Composite trapezoid of uniformly sampled values.
double trapezoid(std::span<const double> v, double h);

}  // namespace fracdelay
