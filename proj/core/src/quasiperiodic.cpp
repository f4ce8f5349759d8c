#include "trigzero/quasiperiodic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trigzero/errors.hpp"
#include "trigzero/trigpoly.hpp"

namespace trigzero {

QPSum::QPSum(std::vector<QPTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("QPSum needs a term");
  double prev = 0.0;
  bool any = false;
  for (const auto& t : terms_) {
    if (!std::isfinite(t.lambda) || !std::isfinite(t.a) || !std::isfinite(t.b))
      throw std::invalid_argument("QPSum entries must be finite");
    if (!(t.lambda > prev))
      throw std::invalid_argument(
          "frequencies must be positive and strictly increasing");
    prev = t.lambda;
    any = any || t.a != 0.0 || t.b != 0.0;
  }
  if (!any) throw std::invalid_argument("QPSum must not vanish identically");
}

double QPSum::eval(double x) const {
  double s = 0.0;
  for (const auto& t : terms_)
    s += t.a * std::cos(t.lambda * x) + t.b * std::sin(t.lambda * x);
  return s;
}

int zero_count_window(const QPSum& q, double T, int samples) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("window length must be positive and finite");
  if (samples < 4) throw std::invalid_argument("need at least 4 scan samples");
  const double needed = 64.0 * q.lambda_max() * T / kTwoPi;
  if (samples < needed)
    throw WindowUnderResolved("window [0," + std::to_string(T) + "] needs >= " +
                              std::to_string(static_cast<long>(needed) + 1) +
                              " samples for lambda_max = " +
                              std::to_string(q.lambda_max()));

  const double h = T / samples;
  double offset = 0.0;
  std::vector<int> signs;
  for (int pass = 0; pass < 2; ++pass) {
    signs.clear();
    signs.reserve(samples + 1);
    bool hit_zero = false;
    for (int j = 0; j <= samples; ++j) {
      const double v = q.eval(j * h + offset);
      if (v == 0.0) hit_zero = true;
      signs.push_back(v < 0.0 ? -1 : 1);
    }
    if (!hit_zero || pass == 1) break;
    offset = 0.5 * h;
  }

  int changes = 0;
  for (int j = 0; j < samples; ++j)
    if (signs[j] != signs[j + 1]) ++changes;
  return changes;
}

double zero_density(const QPSum& q, double T, int samples) {
  return zero_count_window(q, T, samples) / T;
}

}  // namespace trigzero
