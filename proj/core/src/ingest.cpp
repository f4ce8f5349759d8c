#include "trigzero/ingest.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "trigzero/errors.hpp"

namespace trigzero {

SampledSignal::SampledSignal(std::vector<double> v) : values_(std::move(v)) {
  if (values_.size() < 2)
    throw TooFewSamples("need at least 2 samples, got " +
                        std::to_string(values_.size()));
  for (double x : values_)
    if (!std::isfinite(x))
      throw std::invalid_argument("samples must be finite");
}

TrigPoly analyze(const SampledSignal& s) {
  const int n = s.size();
  const int kmax = n / 2;
  std::vector<std::complex<double>> acc(kmax + 1, 0.0);

  // acc[k] = sum_j v_j e^{-i k x_j}; powers by rotation, one sincos per j.
  for (int j = 0; j < n; ++j) {
    const std::complex<double> z = std::polar(1.0, -kTwoPi * j / n);
    std::complex<double> w(1.0, 0.0);
    const double v = s.values()[j];
    for (int k = 0; k <= kmax; ++k) {
      acc[k] += v * w;
      w *= z;
    }
  }

  std::vector<Harmonic> hs;
  hs.reserve(kmax + 1);
  hs.push_back({0, acc[0].real() / n, 0.0});
  for (int k = 1; k <= kmax; ++k) {
    // The top bin of an even-length transform is its own conjugate pair,
    // so it enters with half the usual weight and no sine part.
    const bool nyquist = (n % 2 == 0) && (k == kmax);
    const double w = nyquist ? 1.0 : 2.0;
    hs.push_back({k, w * acc[k].real() / n,
                  nyquist ? 0.0 : -w * acc[k].imag() / n});
  }
  return TrigPoly::from_harmonics(std::move(hs));
}

std::vector<double> synthesize(const TrigPoly& p, int samples) {
  if (samples < 2) throw TooFewSamples("need at least 2 samples");
  std::vector<double> out(samples);
  for (int j = 0; j < samples; ++j) out[j] = p.eval(kTwoPi * j / samples);
  return out;
}

}  // namespace trigzero
