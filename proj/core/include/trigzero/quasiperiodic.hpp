#pragma once

#include <vector>

namespace trigzero {

// One term a*cos(lambda x) + b*sin(lambda x) with real frequency
// lambda > 0.
struct QPTerm {
  double lambda = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Finite sum of incommensurable-frequency cosine/sine pairs; the
// aperiodic cousin of TrigPoly.  Frequencies must be strictly increasing
// and positive, and at least one term must have a nonzero amplitude.
class QPSum {
 public:
  explicit QPSum(std::vector<QPTerm> terms);

  const std::vector<QPTerm>& terms() const { return terms_; }
  double lambda_min() const { return terms_.front().lambda; }
  double lambda_max() const { return terms_.back().lambda; }

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

 private:
  std::vector<QPTerm> terms_;
};

// Sign changes over the closed window [0, T], scanned at samples + 1
// uniform points with the same exact-zero half-step rule the periodic
// oracle uses.  Throws WindowUnderResolved when the grid is coarser than
// 64 points per period of the fastest term.
int zero_count_window(const QPSum& q, double T, int samples);

// zero_count_window / T.
double zero_density(const QPSum& q, double T, int samples);

}  // namespace trigzero
