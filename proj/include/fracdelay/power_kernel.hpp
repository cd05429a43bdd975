#pragma once

#include <span>
#include <vector>

namespace fracdelay {

/// Product-trapezoidal quadrature against the weakly singular kernel
/// |t - s|^(alpha-1) on a uniform grid: the smooth factor is interpolated
/// linearly on each cell and the kernel moments are integrated exactly, so
/// the endpoint singularity needs no regularization. All rows include the
/// 1/Gamma(alpha) normalization of the fractional integral.
class PowerKernel {
 public:
  /// max_nodes bounds the largest slice the weight tables must serve.
  PowerKernel(double alpha, double h, int max_nodes);

  double alpha() const { return alpha_; }

  /// Node weights of the left fractional integral at target node j
  /// (uses nodes 0..j). Writes j+1 entries.
  void left_row(int j, std::span<double> row) const;

  /// Node weights of int_slice (s - t)^(alpha-1) w(s) ds / Gamma(alpha)
  /// where the target t sits `offset` steps before the first slice node
  /// (offset = 0 puts the target on the singular endpoint).
  void tail_row(int offset, int n_nodes, std::span<double> row) const;

  static double apply(std::span<const double> w, std::span<const double> row);

 private:
  double alpha_, scale_;
  std::vector<double> pa_, pb_;  // k^alpha, k^(alpha+1)
};

/// Left/right Riemann-Liouville fractional integral of a uniform slice
/// (result on the same node set; value 0 at the anchored end).
std::vector<double> frac_integral_left_span(std::span<const double> v,
                                            double h, double alpha);
std::vector<double> frac_integral_right_span(std::span<const double> v,
                                             double h, double alpha);

}  // namespace fracdelay
