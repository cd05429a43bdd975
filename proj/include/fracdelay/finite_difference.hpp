#pragma once

#include <span>
#include <vector>

namespace fracdelay {

/// Finite-difference weights on arbitrary nodes (Fornberg's recursion).
/// Returns the weights of the m-th derivative at z for the given nodes.
std::vector<double> fornberg_weights(double z, std::span<const double> nodes,
                                     int m);

/// Stencil window width used for the n-th derivative: wide enough for
/// 4th-order central stencils (5 points for n <= 2, 7 for n <= 4, ...).
int fd_window(int order);

/// Half-width of the centered window; nodes closer than this to an end of
/// the array are produced by shifted (one-sided) stencils.
int fd_margin(int order);

/// n-th derivative of uniformly sampled values. The window slides to stay
/// inside the array near the ends. For order >= 1 the stencil weights are
/// normalized to annihilate constants exactly. order = 0 copies the input.
std::vector<double> fd_derivative(std::span<const double> v, double h,
                                  int order);

/// n-th derivative at a single endpoint with a one-sided stencil anchored at
/// the given side (from_left = stencil grows rightward from v[0]; otherwise
/// leftward from v[n-1]).
double one_sided_derivative(std::span<const double> v, double h, int order,
                            bool from_left);

}  // namespace fracdelay
