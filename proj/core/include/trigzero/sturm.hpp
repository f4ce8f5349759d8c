#pragma once

#include <optional>
#include <vector>

#include "trigzero/trigpoly.hpp"

namespace trigzero {

// How the smoothing order ell is selected.
//   Bound: closed-form order from the a-priori tail estimate
//          4M / ((ell-1) n^(ell-1)) < rho / n^ell, M >= sup|p|.
//   Tight: smallest order whose *measured* tail gap beats the leading
//          amplitude; smaller ell, fewer descent levels.
enum class EllMode { Bound, Tight };

// Outcome of the dominance test at smoothing order ell.
//
// All comparisons are made at the n^ell-rescaled working scale, where the
// ell-fold antiderivative of harmonic k is scaled by (n/k)^ell: the leading
// amplitude stays rho and nothing underflows.  The absolute-scale fields
// divide by n^ell and may underflow to 0 (or lose the comparison by a
// rounding ulp) for large n^ell; they are reported for reference, the
// rescaled fields are authoritative.
struct DominanceReport {
  int ell = 0;
  int n = 0;
  double d_ell_scaled = 0.0;       // sup of rescaled tail, n^ell * d_ell
  double threshold_scaled = 0.0;   // rho
  double tail_bound_scaled = 0.0;  // 4 M n / (ell - 1)
  double d_ell = 0.0;              // max |p^(-ell) - g^(-ell)|
  double threshold = 0.0;          // rho / n^ell
  double tail_bound = 0.0;         // 4 M / ((ell-1) n^(ell-1))
  double m_used = 0.0;
  bool satisfied = false;          // d_ell_scaled < threshold_scaled
};

// One point of the extremal grid with the sign the leading term pins there.
struct GridPoint {
  double x = 0.0;
  int sign = 0;  // -1 or +1
};

// Sign-change interval on the lifted line; hi may pass 2*pi for the
// wraparound arc.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int sign_lo = 0;
  int sign_hi = 0;
};

struct CertifyConfig {
  EllMode mode = EllMode::Bound;
  bool multiple_of_four = true;  // restrict ell so the antiderivative phase
                                 // rotation is the identity
  int ell_cap = 256;
  double xtol = 1e-10;
  double rtol = 1e-8;
  int samples_per_harmonic = 64;
  double leading_tol = 1e-9;
  double distinct_tol = 1e-7;
  std::optional<double> sup_bound;  // external M >= sup|p|, replaces sup_norm
  bool collect_trace = false;
};

// End-to-end result: p has at least 2n distinct zeros per period, and here
// they are.  trivial = true means the guarantee is empty (no oscillatory
// leading term, or the mean is not negligible): n = 0, no zeros claimed.
struct ZeroCertificate {
  int n = 0;
  int ell = 0;
  bool trivial = false;
  std::optional<LeadingHarmonic> leading;
  std::optional<DominanceReport> dominance;
  std::vector<double> zeros;      // sorted, in [0, 2*pi), >= 2n of them
  std::vector<double> residuals;  // |p(z)| per zero
  double sup = 0.0;               // sup_norm(p), the residual scale
  // Zero lists per level, smoothing order ell down to 0, when requested.
  std::vector<std::vector<double>> descent_trace;
};

// The single-harmonic polynomial carrying lh, rho * cos(nx - phi).
TrigPoly leading_term(const TrigPoly& p, const LeadingHarmonic& lh);

// Smallest ell (default: multiple of 4) making the a-priori tail bound
// beat the leading amplitude.  Throws InvalidBound on nonpositive or
// non-finite M or rho.
int choose_ell(const LeadingHarmonic& lh, double M,
               bool multiple_of_four = true);

// n^ell * p^(-ell): harmonic k scaled by (n/k)^ell with the quarter-turn
// phase rotation of ell antiderivatives.  Zeros and signs match p^(-ell)
// exactly (positive constant multiple).  Throws MeanNotZero on a constant
// term, std::overflow_error when an order k < n amplifies past the
// representable range.
TrigPoly antiderivative_rescaled(const TrigPoly& p, int n, int ell);

// Measures the tail gap of p at order ell and compares it against the
// leading amplitude.  p must be mean-zero.  M defaults to sup_norm(p).
DominanceReport dominance_gap(const TrigPoly& p, const LeadingHarmonic& lh,
                              int ell, int samples_per_harmonic = 64,
                              std::optional<double> sup_bound = {});

// The 2n points where the smoothed leading term attains +-rho/n^ell:
// x_m = (phi + ell*pi/2 + m*pi) / n reduced mod 2*pi, sign (-1)^m; sorted
// ascending, signs alternating.
std::vector<GridPoint> extremal_grid(const LeadingHarmonic& lh, int ell);

// Checks F has the pinned sign at every grid point and returns the 2n
// cyclic consecutive arcs as sign-change brackets (last arc lifted by
// 2*pi).  Throws SignMismatch on a wrong sign or an exact zero.
std::vector<Bracket> bracket_zeros(const TrigPoly& F,
                                   const std::vector<GridPoint>& grid);

// Bisection to width < xtol; returns the midpoint reduced mod 2*pi.
// Throws BadBracket when the endpoint signs do not straddle zero.
double refine_zero(const TrigPoly& F, const Bracket& br, double xtol = 1e-10);

// Walks zeros of F down `levels` derivatives: between cyclically adjacent
// zeros of the current level (alternating transversal crossings) the next
// derivative changes sign, so one zero per arc is bisected out; the count
// m is preserved at every level.  Returns the final level's sorted zeros.
// Throws CrossingDegenerate when a crossing is too flat to orient and
// DescentSignFailure when the alternation breaks down.
std::vector<double> rolle_descent(const TrigPoly& F,
                                  std::vector<double> zeros_of_F, int levels,
                                  double xtol = 1e-10);

// Full pipeline: leading harmonic -> smoothing order -> dominance ->
// extremal-grid brackets on the rescaled smoothing -> descent back to p.
// Throws DominanceUnreachable when no order up to cfg.ell_cap works and
// Underflow when the leading amplitude itself is subnormal; descent and
// bracketing errors propagate.
ZeroCertificate certify(const TrigPoly& p, const CertifyConfig& cfg = {});

}  // namespace trigzero
