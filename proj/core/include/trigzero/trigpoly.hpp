#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace trigzero {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 2.0 * kPi;

// x reduced to [0, 2*pi).
double reduce_angle(double x);

// One term a*cos(k x) + b*sin(k x).  Order k = 0 is the constant term and
// carries no sine part.
struct Harmonic {
  int k = 0;
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

// Real trigonometric polynomial in canonical form: harmonics sorted by
// strictly increasing order, identically-zero pairs dropped, and no sine
// coefficient at order zero.  The empty list is the zero function.
//
// All operations preserve canonical form, so two polynomials are equal as
// functions iff their harmonic lists are equal elementwise (up to rounding
// introduced by the coefficient arithmetic that produced them).
class TrigPoly {
 public:
  TrigPoly() = default;

  // Sorts, merges duplicate orders, drops vanished pairs.  Throws
  // std::invalid_argument on k < 0, a non-finite coefficient, or a sine
  // part at order zero.
  static TrigPoly from_harmonics(std::vector<Harmonic> hs);
  static TrigPoly harmonic(int k, double a, double b);
  static TrigPoly constant(double c);

  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  bool is_zero() const { return harmonics_.empty(); }
  std::size_t term_count() const { return harmonics_.size(); }

  // Largest stored order; 0 for constants and for the zero function.
  int degree() const;
  // Coefficient of the constant term.
  double mean() const;
  // (a_k, b_k); (0, 0) when order k is absent.
  std::pair<double, double> coeff(int k) const;

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  TrigPoly derivative() const;
  // Unique periodic antiderivative with zero mean.  Throws MeanNotZero if a
  // constant term is present.
  TrigPoly antiderivative() const;
  // ell-fold iterate, computed as ell successive single antiderivatives so
  // it agrees with repeated application exactly.
  TrigPoly antiderivative(int ell) const;

  TrigPoly operator-() const;
  // Exact coefficient equality of the canonical forms.
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;
  friend TrigPoly operator+(const TrigPoly& p, const TrigPoly& q);
  friend TrigPoly operator-(const TrigPoly& p, const TrigPoly& q);
  friend TrigPoly operator*(double c, const TrigPoly& p);
  friend TrigPoly operator*(const TrigPoly& p, double c) { return c * p; }

 private:
  explicit TrigPoly(std::vector<Harmonic> canonical)
      : harmonics_(std::move(canonical)) {}

  std::vector<Harmonic> harmonics_;
};

// p(x + shift), as a coefficient-space rotation of each harmonic.
TrigPoly translate(const TrigPoly& p, double shift);

// Lowest-order oscillatory term in amplitude-phase form,
// a cos(nx) + b sin(nx) = rho * cos(nx - phi).
struct LeadingHarmonic {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  double rho = 0.0;  // sqrt(a^2 + b^2), positive
  double phi = 0.0;  // in (-pi, pi]
};

// Smallest order n >= 1 whose amplitude exceeds tol times the largest
// amplitude in p.  Empty when no such order exists (zero function, pure
// constant, or everything oscillatory below threshold).
std::optional<LeadingHarmonic> leading_harmonic(const TrigPoly& p,
                                                double tol = 1e-9);

// Certified upper estimate of max |p| over a period.  Sampling on
// samples_per_harmonic * degree uniform points gives a lower bound; a
// derivative-based cushion and the coefficient amplitude sum cap it from
// above.  Always >= the sampled maximum and <= coefficient_sum(p).
double sup_norm(const TrigPoly& p, int samples_per_harmonic = 64);

// Sum of harmonic amplitudes sqrt(a_k^2 + b_k^2); a crude but rigorous
// bound on max |p|.
double coefficient_sum(const TrigPoly& p);

}  // namespace trigzero
