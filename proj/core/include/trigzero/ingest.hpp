#pragma once

#include <vector>

#include "trigzero/trigpoly.hpp"

namespace trigzero {

// One period of a signal sampled at N uniform points x_j = 2*pi*j / N.
// Throws TooFewSamples for N < 2 and std::invalid_argument on non-finite
// entries.
struct SampledSignal {
  explicit SampledSignal(std::vector<double> v);

  const std::vector<double>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
};

// Real DFT of the samples as a trigonometric polynomial of degree
// <= N/2:
//   a_0     = (1/N) sum v_j
//   a_k     = (2/N) sum v_j cos(k x_j)      1 <= k < N/2   (b_k with sin)
//   a_{N/2} = (1/N) sum v_j cos((N/2) x_j)  even N only, b_{N/2} = 0
// Exact (to rounding) on signals band-limited below the Nyquist order.
TrigPoly analyze(const SampledSignal& s);

// p evaluated back on the same uniform grid.
std::vector<double> synthesize(const TrigPoly& p, int samples);

}  // namespace trigzero
