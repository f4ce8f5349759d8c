#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "trigzero/trigpoly.hpp"

namespace tztest {

using trigzero::Harmonic;
using trigzero::TrigPoly;

// Leading order exactly n, degree <= max_degree: standard-normal pairs on
// orders n..max_degree, nothing below n.
inline TrigPoly random_poly(std::mt19937_64& rng, int n, int max_degree) {
  std::normal_distribution<double> g;
  std::vector<Harmonic> hs;
  for (int k = n; k <= max_degree; ++k) hs.push_back({k, g(rng), g(rng)});
  return TrigPoly::from_harmonics(std::move(hs));
}

inline TrigPoly random_mean_zero(std::mt19937_64& rng, int max_degree) {
  return random_poly(rng, 1, max_degree);
}

inline double cyclic_dist(double a, double b) {
  const double d =
      std::abs(trigzero::reduce_angle(a) - trigzero::reduce_angle(b));
  return std::min(d, trigzero::kTwoPi - d);
}

// Smallest cyclic distance from x to any element of ys.
inline double dist_to_set(double x, const std::vector<double>& ys) {
  double best = trigzero::kTwoPi;
  for (double y : ys) best = std::min(best, cyclic_dist(x, y));
  return best;
}

}  // namespace tztest
