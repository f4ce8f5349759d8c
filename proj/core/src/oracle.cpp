#include "trigzero/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trigzero/errors.hpp"

namespace trigzero {
namespace {

struct Scan {
  double offset = 0.0;
  std::vector<int> signs;  // -1 or +1 at x_j = 2*pi*j/samples + offset
};

Scan scan_signs(const std::function<double(double)>& f, int samples) {
  if (samples < 4) throw std::invalid_argument("need at least 4 scan samples");
  Scan sc;
  for (int pass = 0; pass < 2; ++pass) {
    sc.signs.clear();
    sc.signs.reserve(samples);
    bool hit_zero = false;
    for (int j = 0; j < samples; ++j) {
      const double v = f(kTwoPi * j / samples + sc.offset);
      if (v == 0.0) hit_zero = true;
      sc.signs.push_back(v < 0.0 ? -1 : 1);
    }
    if (!hit_zero || pass == 1) break;
    // Exact zero on a sample: shift by half a step and look again.
    sc.offset = kPi / samples;
  }
  return sc;
}

}  // namespace

int default_scan_samples(int degree) {
  return std::max(4096, 64 * std::max(degree, 0));
}

int count_sign_changes(const std::function<double(double)>& f, int samples) {
  const Scan sc = scan_signs(f, samples);
  int changes = 0;
  for (int j = 0; j < samples; ++j)
    if (sc.signs[j] != sc.signs[(j + 1) % samples]) ++changes;
  return changes;
}

int count_sign_changes(const TrigPoly& p, int samples) {
  return count_sign_changes([&p](double x) { return p.eval(x); }, samples);
}

std::vector<double> locate_zeros(const std::function<double(double)>& f,
                                 int samples, double xtol) {
  if (!(xtol > 0.0)) throw std::invalid_argument("xtol must be > 0");
  const Scan sc = scan_signs(f, samples);
  std::vector<double> zeros;
  for (int j = 0; j < samples; ++j) {
    if (sc.signs[j] == sc.signs[(j + 1) % samples]) continue;
    double lo = kTwoPi * j / samples + sc.offset;
    double hi = kTwoPi * (j + 1) / samples + sc.offset;  // may pass 2*pi
    const int slo = sc.signs[j];
    while (hi - lo > xtol) {
      const double mid = 0.5 * (lo + hi);
      const double v = f(mid);
      const int sm = v < 0.0 ? -1 : 1;
      // v == 0 counts as +, matching the scan convention.
      if (sm == slo)
        lo = mid;
      else
        hi = mid;
    }
    zeros.push_back(reduce_angle(0.5 * (lo + hi)));
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

std::vector<double> locate_zeros(const TrigPoly& p, int samples, double xtol) {
  return locate_zeros([&p](double x) { return p.eval(x); }, samples, xtol);
}

}  // namespace trigzero
