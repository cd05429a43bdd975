#include "fracdelay/ibp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracdelay/csvio.hpp"
#include "fracdelay/fracops.hpp"
#include "fracdelay/power_kernel.hpp"

namespace fracdelay {

namespace {

constexpr int kSplitLayer = 4;  // nodes skipped next to the split point

void require_same_grid(const SampledFunction& x, const SampledFunction& y) {
  if (!x.grid.same_layout(y.grid))
    throw std::invalid_argument("ibp: functions live on different grids");
}

double dot_trapezoid(std::span<const double> a, std::span<const double> b,
                     double h) {
  const std::size_t n = a.size();
  if (n < 2) return 0.0;
  double s = 0.5 * (a[0] * b[0] + a[n - 1] * b[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) s += a[i] * b[i];
  return s * h;
}

IbpReport finish(double lhs, double rhs, double correction, double h) {
  return IbpReport{lhs, rhs, correction,
                   std::abs(lhs - rhs - correction), h};
}

std::vector<double> slice(std::span<const double> v, int begin, int count) {
  return std::vector<double>(v.begin() + begin, v.begin() + begin + count);
}

// Tail values on the target slice for w on the source slice; FromRight
// means w sits to the right of the targets.
std::vector<double> tail_span(std::span<const double> w, double h,
                              double alpha, int n_out, bool from_right) {
  std::vector<double> src(w.begin(), w.end());
  if (!from_right) std::reverse(src.begin(), src.end());
  const int n = static_cast<int>(src.size());
  PowerKernel kern(alpha, h, n_out + n);
  std::vector<double> row(n), out(n_out);
  for (int i = 0; i < n_out; ++i) {
    kern.tail_row(n_out - 1 - i, n, row);
    out[i] = PowerKernel::apply(src, row);
  }
  if (!from_right) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

IbpReport ibp_whole(const SampledFunction& phi, const SampledFunction& psi,
                    double alpha) {
  require_same_grid(phi, psi);
  if (!(alpha > 0.0)) throw std::domain_error("ibp_whole: alpha must be > 0");
  const double h = phi.grid.h();
  auto I_psi = frac_integral_left_span(psi.active(), h, alpha);
  auto I_phi = frac_integral_right_span(phi.active(), h, alpha);
  const double lhs = dot_trapezoid(phi.active(), I_psi, h);
  const double rhs = dot_trapezoid(psi.active(), I_phi, h);
  return finish(lhs, rhs, 0.0, h);
}

IbpReport ibp_whole_deriv(const SampledFunction& g, const SampledFunction& f,
                          double alpha) {
  require_same_grid(g, f);
  const double h = f.grid.h();
  auto Df = rl_left_span(f.active(), h, alpha);
  auto Dg = rl_right_span(g.active(), h, alpha);
  const double lhs = dot_trapezoid(g.active(), Df, h);
  const double rhs = dot_trapezoid(f.active(), Dg, h);
  return finish(lhs, rhs, 0.0, h);
}

IbpReport ibp_split(const SampledFunction& g, const SampledFunction& f,
                    double alpha, const SplitSpec& split) {
  require_same_grid(g, f);
  const Grid& grid = f.grid;
  const double h = grid.h();
  const int jr = grid.active_index_of(split.r);
  if (jr <= 0 || jr >= grid.n_active() - 1)
    throw std::invalid_argument("ibp_split: r must lie strictly inside (a, b)");
  const int n = grid.n_active();
  const int n_left = jr + 1;        // nodes of [a, r]
  const int n_right = n - jr;       // nodes of [r, b]

  const auto expected_side = [&] {
    switch (split.lemma) {
      case Lemma::L2a: return PieceSide::LeftPiece;
      case Lemma::L2b: return PieceSide::RightPiece;
      case Lemma::L3a: return PieceSide::RightPiece;
      case Lemma::L3b: return PieceSide::LeftPiece;
      default:
        throw std::invalid_argument("ibp_split: lemma must be a split variant");
    }
  }();
  if (split.side != expected_side)
    throw std::invalid_argument(
        "ibp_split: side does not match the lemma variant");

  switch (split.lemma) {
    case Lemma::L2a: {
      // int_a^r g (D_left f) = int_a^r f (D_{r,right} g)
      auto Df = rl_left_span(f.active(), h, alpha);
      auto g_left = slice(g.active(), 0, n_left);
      auto f_left = slice(f.active(), 0, n_left);
      auto Dg = rl_right_span(g_left, h, alpha);
      const double lhs =
          dot_trapezoid(g_left, std::span<const double>(Df).first(n_left), h);
      const double rhs = dot_trapezoid(f_left, Dg, h);
      return finish(lhs, rhs, 0.0, h);
    }
    case Lemma::L3a: {
      // int_r^b g (D_right f) = int_r^b f (D_{r,left} g)
      auto Df = rl_right_span(f.active(), h, alpha);
      auto g_right = slice(g.active(), jr, n_right);
      auto f_right = slice(f.active(), jr, n_right);
      auto Dg = rl_left_span(g_right, h, alpha);
      const double lhs = dot_trapezoid(
          g_right, std::span<const double>(Df).subspan(jr, n_right), h);
      const double rhs = dot_trapezoid(f_right, Dg, h);
      return finish(lhs, rhs, 0.0, h);
    }
    case Lemma::L2b: {
      // int_r^b g (D_left f) = int_r^b f (D_{b,right} g) + correction,
      // correction = -(1/Gamma) int_a^r f D_{r,right}(tail of D_{b,right} g).
      auto Df = rl_left_span(f.active(), h, alpha);
      auto Dg = rl_right_span(g.active(), h, alpha);
      const double lhs = dot_trapezoid(
          slice(g.active(), jr, n_right),
          std::span<const double>(Df).subspan(jr, n_right), h);
      const double rhs = dot_trapezoid(
          slice(f.active(), jr, n_right),
          std::span<const double>(Dg).subspan(jr, n_right), h);
      auto w = slice(Dg, jr, n_right);
      std::vector<double> integrand;
      if (split.form == CorrectionForm::OuterDerivative) {
        auto tail = tail_span(w, h, alpha, n_left, true);
        auto Dtail = rl_right_span(tail, h, alpha);
        integrand = Dtail;
        for (int i = 0; i < n_left; ++i) integrand[i] *= f.at_active(i);
      } else {
        auto tail = tail_span(w, h, alpha, n_left, true);
        integrand = tail;
        for (int i = 0; i < n_left; ++i)
          integrand[i] *= Df[i];
      }
      const int keep = n_left - kSplitLayer;
      const double correction =
          -trapezoid(std::span<const double>(integrand).first(keep), h);
      return finish(lhs, rhs, correction, h);
    }
    case Lemma::L3b: {
      // int_a^r g (D_right f) = int_a^r f (D_left g) + correction,
      // correction = -(1/Gamma) int_r^b f D_{r,left}(tail of D_left g).
      auto Df = rl_right_span(f.active(), h, alpha);
      auto Dg = rl_left_span(g.active(), h, alpha);
      const double lhs =
          dot_trapezoid(slice(g.active(), 0, n_left),
                        std::span<const double>(Df).first(n_left), h);
      const double rhs =
          dot_trapezoid(slice(f.active(), 0, n_left),
                        std::span<const double>(Dg).first(n_left), h);
      auto w = slice(Dg, 0, n_left);
      std::vector<double> integrand;
      if (split.form == CorrectionForm::OuterDerivative) {
        auto tail = tail_span(w, h, alpha, n_right, false);
        auto Dtail = rl_left_span(tail, h, alpha);
        integrand = Dtail;
        for (int i = 0; i < n_right; ++i) integrand[i] *= f.at_active(jr + i);
      } else {
        auto tail = tail_span(w, h, alpha, n_right, false);
        integrand = tail;
        for (int i = 0; i < n_right; ++i) integrand[i] *= Df[jr + i];
      }
      const int skip = kSplitLayer;
      const double correction = -trapezoid(
          std::span<const double>(integrand).subspan(skip, n_right - skip), h);
      return finish(lhs, rhs, correction, h);
    }
    default:
      throw std::invalid_argument("ibp_split: lemma must be a split variant");
  }
}

SampledFunction tail_kernel(const SampledFunction& w, double alpha, double r,
                            TailSide side, double other_end) {
  if (!(alpha > 0.0)) throw std::domain_error("tail_kernel: alpha must be > 0");
  const Grid& wg = w.grid;
  const double h = wg.h();
  const double len = side == TailSide::FromRight ? r - other_end
                                                 : other_end - r;
  if (!(len > 0.0))
    throw std::invalid_argument("tail_kernel: empty complementary interval");
  const double steps = len / h;
  const int n_out = static_cast<int>(std::round(steps)) + 1;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps))
    throw std::invalid_argument(
        "tail_kernel: complementary interval does not align with the grid");

  if (side == TailSide::FromRight) {
    if (std::abs(wg.a() - r) > 1e-9 * std::max(1.0, std::abs(r)))
      throw std::invalid_argument("tail_kernel: w must be sampled on [r, b]");
    auto vals = tail_span(w.active(), h, alpha, n_out, true);
    SampledFunction out{Grid::no_delay(other_end, r, n_out), std::move(vals)};
    return out;
  }
  if (std::abs(wg.b() - r) > 1e-9 * std::max(1.0, std::abs(r)))
    throw std::invalid_argument("tail_kernel: w must be sampled on [a, r]");
  auto vals = tail_span(w.active(), h, alpha, n_out, false);
  SampledFunction out{Grid::no_delay(r, other_end, n_out), std::move(vals)};
  return out;
}

std::string lemma_name(Lemma lemma) {
  switch (lemma) {
    case Lemma::L1a: return "L1a";
    case Lemma::L1b: return "L1b";
    case Lemma::L2a: return "L2a";
    case Lemma::L2b: return "L2b";
    case Lemma::L3a: return "L3a";
    case Lemma::L3b: return "L3b";
  }
  return "?";
}

std::string ibp_csv_row(Lemma lemma, double alpha, double r,
                        const IbpReport& rep) {
  std::string row = lemma_name(lemma);
  for (double v : {alpha, r, rep.h, rep.lhs, rep.rhs, rep.correction,
                   rep.residual})
    row += "," + csv_number(v);
  return row;
}

}  // namespace fracdelay
