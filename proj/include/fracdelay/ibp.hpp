#pragma once

#include <string>

#include "fracdelay/grid.hpp"

namespace fracdelay {

/// Which integration-by-parts identity a split report refers to. The L1
/// identities live on the whole interval; L2a/L2b are the left/right pieces
/// of the split at r for left-anchored derivatives, L3a/L3b the mirrored
/// pair for right-anchored ones. Only the b-variants carry a correction.
enum class Lemma { L1a, L1b, L2a, L2b, L3a, L3b };

enum class PieceSide { LeftPiece, RightPiece };

enum class TailSide { FromRight, FromLeft };

/// How the b-variant correction term is evaluated: with the fractional
/// derivative applied outside the tail integral (the composed form used by
/// the Euler-Lagrange assembly) or already sitting on the test function
/// (the pre-exchange form). The two only differ by quadrature error.
enum class CorrectionForm { OuterDerivative, InnerDerivative };

struct SplitSpec {
  double r = 0.0;
  PieceSide side = PieceSide::LeftPiece;
  Lemma lemma = Lemma::L2a;
  CorrectionForm form = CorrectionForm::OuterDerivative;
};

/// One verified identity: residual = |lhs - rhs - correction|. The
/// correction is the signed term that completes the identity
/// lhs = rhs + correction (zero for the whole-interval and a-variant
/// identities). For b-variants the outer integral of the correction skips a
/// 4h layer at the split point, where the composed derivative is singular.
struct IbpReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double correction = 0.0;
  double residual = 0.0;
  double h = 0.0;
};

/// Adjoint identity of the fractional integral on [a, b]:
/// int phi (I_left^alpha psi) = int psi (I_right^alpha phi).
IbpReport ibp_whole(const SampledFunction& phi, const SampledFunction& psi,
                    double alpha);

/// Derivative form on [a, b]: int g (D_left^alpha f) = int f (D_right^alpha g).
/// Regularity comes from the test inputs: f should vanish at a and g at b.
IbpReport ibp_whole_deriv(const SampledFunction& g, const SampledFunction& f,
                          double alpha);

/// Split-interval identities at r (see Lemma). g and f live on the full
/// grid; r must be a grid node.
IbpReport ibp_split(const SampledFunction& g, const SampledFunction& f,
                    double alpha, const SplitSpec& split);

/// (1/Gamma(alpha)) int kernel^(alpha-1) w(s) ds evaluated on the
/// complementary subinterval: w on [r, b] with kernel (s-t) gives values on
/// [other_end, r] (FromRight); w on [a, r] with kernel (t-s) gives values on
/// [r, other_end] (FromLeft). Node spacing must match w's grid.
SampledFunction tail_kernel(const SampledFunction& w, double alpha, double r,
                            TailSide side, double other_end);

std::string lemma_name(Lemma lemma);

/// CSV row `lemma,alpha,r,h,lhs,rhs,correction,residual` (r printed as nan
/// for the whole-interval identities).
std::string ibp_csv_row(Lemma lemma, double alpha, double r,
                        const IbpReport& report);

}  // namespace fracdelay
