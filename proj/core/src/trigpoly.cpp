#include "trigzero/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "trigzero/errors.hpp"

namespace trigzero {

double reduce_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can round the negative branch back up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

TrigPoly TrigPoly::from_harmonics(std::vector<Harmonic> hs) {
  for (auto& h : hs) {
    if (h.k < 0) throw std::invalid_argument("harmonic order must be >= 0");
    if (!std::isfinite(h.a) || !std::isfinite(h.b))
      throw std::invalid_argument("harmonic coefficients must be finite");
    if (h.k == 0 && h.b != 0.0)
      throw std::invalid_argument("order zero has no sine part");
    // Flush -0.0 so phases and serialized output are unambiguous.
    if (h.a == 0.0) h.a = 0.0;
    if (h.b == 0.0) h.b = 0.0;
  }
  std::stable_sort(hs.begin(), hs.end(),
                   [](const Harmonic& l, const Harmonic& r) { return l.k < r.k; });
  std::vector<Harmonic> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    if (!out.empty() && out.back().k == h.k) {
      out.back().a += h.a;
      out.back().b += h.b;
    } else {
      out.push_back(h);
    }
  }
  std::erase_if(out, [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
  out.shrink_to_fit();
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::harmonic(int k, double a, double b) {
  return from_harmonics({{k, a, b}});
}

TrigPoly TrigPoly::constant(double c) { return from_harmonics({{0, c, 0.0}}); }

int TrigPoly::degree() const {
  return harmonics_.empty() ? 0 : harmonics_.back().k;
}

double TrigPoly::mean() const {
  return (!harmonics_.empty() && harmonics_.front().k == 0)
             ? harmonics_.front().a
             : 0.0;
}

std::pair<double, double> TrigPoly::coeff(int k) const {
  auto it = std::lower_bound(
      harmonics_.begin(), harmonics_.end(), k,
      [](const Harmonic& h, int order) { return h.k < order; });
  if (it != harmonics_.end() && it->k == k) return {it->a, it->b};
  return {0.0, 0.0};
}

double TrigPoly::eval(double x) const {
  if (harmonics_.empty()) return 0.0;

  // cos(kx), sin(kx) via one complex rotation stepped through the sorted
  // orders: a single sincos call total instead of two per harmonic.  The
  // recurrence drifts by O(degree * eps), well inside every tolerance this
  // library traffics in.
  const std::complex<double> z = std::polar(1.0, x);
  std::complex<double> w(1.0, 0.0);  // z^k for the current order k
  int kw = 0;

  // Plain accumulation up to 64 terms, Neumaier-compensated beyond.
  const bool compensated = harmonics_.size() > 64;
  double sum = 0.0, comp = 0.0;
  for (const auto& h : harmonics_) {
    while (kw < h.k) {
      w *= z;
      ++kw;
    }
    const double term = h.a * w.real() + h.b * w.imag();
    if (!compensated) {
      sum += term;
    } else {
      const double t = sum + term;
      if (std::abs(sum) >= std::abs(term))
        comp += (sum - t) + term;
      else
        comp += (term - t) + sum;
      sum = t;
    }
  }
  return sum + comp;
}

TrigPoly TrigPoly::derivative() const {
  // d/dx [a cos(kx) + b sin(kx)] = (k b) cos(kx) + (-k a) sin(kx)
  std::vector<Harmonic> out;
  out.reserve(harmonics_.size());
  for (const auto& h : harmonics_) {
    if (h.k == 0) continue;
    out.push_back({h.k, h.k * h.b, -h.k * h.a});
  }
  return from_harmonics(std::move(out));
}

TrigPoly TrigPoly::antiderivative() const {
  std::vector<Harmonic> out;
  out.reserve(harmonics_.size());
  for (const auto& h : harmonics_) {
    if (h.k == 0)
      throw MeanNotZero("antiderivative requires a mean-zero polynomial");
    // Inverse of the derivative map: (a, b) -> (-b/k, a/k).
    out.push_back({h.k, -h.b / h.k, h.a / h.k});
  }
  return from_harmonics(std::move(out));
}

TrigPoly TrigPoly::antiderivative(int ell) const {
  if (ell < 0) throw std::invalid_argument("iterate count must be >= 0");
  TrigPoly r = *this;
  for (int i = 0; i < ell; ++i) r = r.antiderivative();
  return r;
}

TrigPoly TrigPoly::operator-() const { return -1.0 * *this; }

TrigPoly operator+(const TrigPoly& p, const TrigPoly& q) {
  std::vector<Harmonic> hs = p.harmonics_;
  hs.insert(hs.end(), q.harmonics_.begin(), q.harmonics_.end());
  return TrigPoly::from_harmonics(std::move(hs));
}

TrigPoly operator-(const TrigPoly& p, const TrigPoly& q) { return p + (-q); }

TrigPoly operator*(double c, const TrigPoly& p) {
  if (!std::isfinite(c)) throw std::invalid_argument("scale must be finite");
  std::vector<Harmonic> hs = p.harmonics_;
  for (auto& h : hs) {
    h.a *= c;
    h.b *= c;
  }
  return TrigPoly::from_harmonics(std::move(hs));
}

TrigPoly translate(const TrigPoly& p, double shift) {
  if (!std::isfinite(shift)) throw std::invalid_argument("shift must be finite");
  std::vector<Harmonic> hs = p.harmonics();
  for (auto& h : hs) {
    if (h.k == 0) continue;
    const double c = std::cos(h.k * shift), s = std::sin(h.k * shift);
    // a cos(k(x+s)) + b sin(k(x+s)) regrouped in cos(kx), sin(kx).
    const double a = h.a * c + h.b * s;
    const double b = h.b * c - h.a * s;
    h.a = a;
    h.b = b;
  }
  return TrigPoly::from_harmonics(std::move(hs));
}

std::optional<LeadingHarmonic> leading_harmonic(const TrigPoly& p, double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw std::invalid_argument("tolerance must be finite and >= 0");
  double largest = 0.0;
  for (const auto& h : p.harmonics())
    largest = std::max(largest, std::hypot(h.a, h.b));
  if (largest == 0.0) return std::nullopt;

  for (const auto& h : p.harmonics()) {
    if (h.k == 0) continue;
    const double rho = std::hypot(h.a, h.b);
    if (rho > tol * largest) {
      LeadingHarmonic lh;
      lh.n = h.k;
      lh.a = h.a;
      lh.b = h.b;
      lh.rho = rho;
      lh.phi = std::atan2(h.b, h.a);
      if (lh.phi <= -kPi) lh.phi = kPi;  // pin the branch cut to +pi
      return lh;
    }
  }
  return std::nullopt;
}

double coefficient_sum(const TrigPoly& p) {
  double s = 0.0;
  for (const auto& h : p.harmonics()) s += std::hypot(h.a, h.b);
  return s;
}

double sup_norm(const TrigPoly& p, int samples_per_harmonic) {
  if (samples_per_harmonic < 8)
    throw std::invalid_argument("samples_per_harmonic must be >= 8");
  if (p.is_zero()) return 0.0;

  const int grid = samples_per_harmonic * std::max(p.degree(), 1);
  double gm = 0.0;
  for (int i = 0; i < grid; ++i)
    gm = std::max(gm, std::abs(p.eval(kTwoPi * i / grid)));

  // Bernstein: |p'| <= degree * sup|p|, so a grid with spacing
  // 2*pi / (samples_per_harmonic * degree) can miss at most the factor
  // 1 - pi/samples_per_harmonic of the true maximum.
  const double cushion = 1.0 / (1.0 - kPi / samples_per_harmonic);
  return std::max(gm, std::min(gm * cushion, coefficient_sum(p)));
}

}  // namespace trigzero
