#include "fracdelay/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdelay {

std::vector<double> fornberg_weights(double z, std::span<const double> nodes,
                                     int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (n < m) throw std::invalid_argument("fornberg_weights: too few nodes");
  // c[j][k] = weight of node j for the k-th derivative.
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = c[j][m];
  return w;
}

int fd_margin(int order) { return (order + 1) / 2 + 1; }

int fd_window(int order) { return 2 * fd_margin(order) + 1; }

namespace {

// All stencils for one (order, window) pair on integer offsets 0..w-1:
// row z = weights for the derivative evaluated at offset z.
std::vector<std::vector<double>> stencil_table(int order, int w) {
  std::vector<double> offs(w);
  for (int i = 0; i < w; ++i) offs[i] = static_cast<double>(i);
  std::vector<std::vector<double>> rows(w);
  for (int z = 0; z < w; ++z) {
    rows[z] = fornberg_weights(static_cast<double>(z), offs, order);
    if (order >= 1) {
      // Shave rounding noise off the weight at the evaluation point so a
      // constant array differentiates to exactly zero.
      double s = 0.0;
      for (double x : rows[z]) s += x;
      rows[z][z] -= s;
    }
  }
  return rows;
}

}  // namespace

std::vector<double> fd_derivative(std::span<const double> v, double h,
                                  int order) {
  const int n = static_cast<int>(v.size());
  if (order == 0) return std::vector<double>(v.begin(), v.end());
  const int w = fd_window(order);
  if (n < w)
    throw std::invalid_argument("fd_derivative: array shorter than stencil");
  const int r = fd_margin(order);
  const auto rows = stencil_table(order, w);
  const double scale = 1.0 / std::pow(h, order);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const int start = std::clamp(i - r, 0, n - w);
    const auto& row = rows[i - start];
    // Differencing against the center value keeps constant arrays at exactly
    // zero and trims cancellation on smooth data.
    const double pivot = v[i];
    double acc = 0.0;
    for (int j = 0; j < w; ++j) acc += row[j] * (v[start + j] - pivot);
    out[i] = acc * scale;
  }
  return out;
}

double one_sided_derivative(std::span<const double> v, double h, int order,
                            bool from_left) {
  const int n = static_cast<int>(v.size());
  if (order == 0) return from_left ? v[0] : v[n - 1];
  const int w = std::min(n, fd_window(order));
  if (w < order + 1)
    throw std::invalid_argument("one_sided_derivative: too few samples");
  std::vector<double> offs(w);
  for (int i = 0; i < w; ++i) offs[i] = static_cast<double>(i);
  const double z = from_left ? 0.0 : static_cast<double>(w - 1);
  auto row = fornberg_weights(z, offs, order);
  double s = 0.0;
  for (double x : row) s += x;
  row[static_cast<int>(z)] -= s;
  const int base = from_left ? 0 : n - w;
  const double pivot = v[base + static_cast<int>(z)];
  double acc = 0.0;
  for (int j = 0; j < w; ++j) acc += row[j] * (v[base + j] - pivot);
  return acc / std::pow(h, order);
}

}  // namespace fracdelay
