#include "fracdelay/power_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracdelay/special.hpp"

namespace fracdelay {

PowerKernel::PowerKernel(double alpha, double h, int max_nodes)
    : alpha_(alpha), scale_(std::pow(h, alpha) / gamma_fn(alpha)) {
  if (!(alpha > 0.0))
    throw std::domain_error("power kernel: order must be positive");
  const int n = std::max(max_nodes + 1, 2);
  pa_.resize(n);
  pb_.resize(n);
  for (int k = 0; k < n; ++k) {
    pa_[k] = std::pow(static_cast<double>(k), alpha);
    pb_[k] = std::pow(static_cast<double>(k), alpha + 1.0);
  }
}

void PowerKernel::left_row(int j, std::span<double> row) const {
  std::fill(row.begin(), row.begin() + j + 1, 0.0);
  const double inv_a = 1.0 / alpha_;
  const double inv_a1 = 1.0 / (alpha_ + 1.0);
  for (int i = 0; i < j; ++i) {
    const int u0 = j - i - 1, u1 = j - i;
    const double m0 = (pa_[u1] - pa_[u0]) * inv_a;
    const double m1 = (pb_[u1] - pb_[u0]) * inv_a1;
    row[i] += m1 - u0 * m0;      // node i is the far end of the cell
    row[i + 1] += u1 * m0 - m1;  // node i+1 is the near end
  }
  for (int i = 0; i <= j; ++i) row[i] *= scale_;
}

void PowerKernel::tail_row(int offset, int n_nodes,
                           std::span<double> row) const {
  std::fill(row.begin(), row.begin() + n_nodes, 0.0);
  const double inv_a = 1.0 / alpha_;
  const double inv_a1 = 1.0 / (alpha_ + 1.0);
  for (int k = 0; k + 1 < n_nodes; ++k) {
    const int u0 = offset + k, u1 = offset + k + 1;
    const double m0 = (pa_[u1] - pa_[u0]) * inv_a;
    const double m1 = (pb_[u1] - pb_[u0]) * inv_a1;
    row[k] += u1 * m0 - m1;
    row[k + 1] += m1 - u0 * m0;
  }
  for (int k = 0; k < n_nodes; ++k) row[k] *= scale_;
}

double PowerKernel::apply(std::span<const double> w,
                          std::span<const double> row) {
  double acc = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * w[i];
  return acc;
}

std::vector<double> frac_integral_left_span(std::span<const double> v,
                                            double h, double alpha) {
  const int n = static_cast<int>(v.size());
  PowerKernel kern(alpha, h, n);
  std::vector<double> out(n, 0.0), row(n);
  for (int j = 1; j < n; ++j) {
    kern.left_row(j, row);
    out[j] = PowerKernel::apply(std::span<const double>(v).first(j + 1),
                                std::span<const double>(row).first(j + 1));
  }
  return out;
}

std::vector<double> frac_integral_right_span(std::span<const double> v,
                                             double h, double alpha) {
  std::vector<double> rev(v.rbegin(), v.rend());
  auto out = frac_integral_left_span(rev, h, alpha);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace fracdelay
