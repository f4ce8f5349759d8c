#include "trigzero/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "trigzero/errors.hpp"

namespace trigzero {
namespace {

int sign_of(double v) { return v < 0.0 ? -1 : (v > 0.0 ? 1 : 0); }

// Phase action of ell antiderivatives on one harmonic: a quarter turn of
// (a, b) per application, as d/dx maps (a, b) to (k b, -k a).
std::pair<double, double> quarter_turns(double a, double b, int ell) {
  switch (ell % 4) {
    case 0: return {a, b};
    case 1: return {-b, a};
    case 2: return {-a, -b};
    default: return {b, -a};
  }
}

// Coefficients of n^ell * p^(-ell); harmonic k picks up (n/k)^ell.  Empty
// when an order below n amplifies out of range.
std::optional<std::vector<Harmonic>> rescaled_coeffs(const TrigPoly& p, int n,
                                                     int ell) {
  std::vector<Harmonic> out;
  out.reserve(p.term_count());
  for (const auto& h : p.harmonics()) {
    if (h.k == 0)
      throw MeanNotZero("smoothing requires a mean-zero polynomial");
    const double f = std::pow(static_cast<double>(n) / h.k, ell);
    auto [a, b] = quarter_turns(h.a, h.b, ell);
    a *= f;
    b *= f;
    if (!std::isfinite(a) || !std::isfinite(b)) return std::nullopt;
    out.push_back({h.k, a, b});
  }
  return out;
}

// One Rolle level: given m zeros of the current polynomial with strictly
// alternating transversal crossings, P (a positive multiple of its
// derivative) changes sign across every cyclic arc; bisect one zero of P
// out of each.  The count m is preserved.
std::vector<double> descend_step(const TrigPoly& P,
                                 const std::vector<double>& z, double xtol,
                                 double simplicity_floor) {
  const int m = static_cast<int>(z.size());
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) {
    const double v = P.eval(z[i]);
    if (!(std::abs(v) >= simplicity_floor))
      throw CrossingDegenerate(
          "slope magnitude " + std::to_string(std::abs(v)) + " at zero x=" +
          std::to_string(z[i]) + " is below the simplicity floor " +
          std::to_string(simplicity_floor));
    s[i] = v < 0.0 ? -1 : 1;
  }
  for (int i = 0; i < m; ++i)
    if (s[i] == s[(i + 1) % m])
      throw DescentSignFailure("slope signs fail to alternate between x=" +
                               std::to_string(z[i]) + " and x=" +
                               std::to_string(z[(i + 1) % m]));

  std::vector<double> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    double lo = z[i];
    double hi = (i + 1 < m) ? z[i + 1] : z[0] + kTwoPi;
    const int slo = s[i];
    while (hi - lo > xtol) {
      const double mid = 0.5 * (lo + hi);
      const double v = P.eval(mid);
      if (v == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((v < 0.0 ? -1 : 1) == slo)
        lo = mid;
      else
        hi = mid;
    }
    out.push_back(reduce_angle(0.5 * (lo + hi)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TrigPoly leading_term(const TrigPoly&, const LeadingHarmonic& lh) {
  return TrigPoly::harmonic(lh.n, lh.a, lh.b);
}

int choose_ell(const LeadingHarmonic& lh, double M, bool multiple_of_four) {
  if (!(M > 0.0) || !std::isfinite(M))
    throw InvalidBound("sup bound M must be positive and finite, got " +
                       std::to_string(M));
  if (!(lh.rho > 0.0) || !std::isfinite(lh.rho))
    throw InvalidBound("leading amplitude must be positive and finite, got " +
                       std::to_string(lh.rho));

  // Admissibility 4M/((ell-1) n^(ell-1)) < rho/n^ell, evaluated in the
  // n^ell-rescaled form that cannot underflow.  Both say ell > 1 + 4Mn/rho.
  const double n = lh.n;
  auto admissible = [&](int ell) { return 4.0 * M * n / (ell - 1.0) < lh.rho; };

  const double t = 1.0 + 4.0 * M * n / lh.rho;
  if (!(t < 1e9))
    throw DominanceUnreachable("a-priori smoothing order above 1e9 (M/rho = " +
                               std::to_string(M / lh.rho) + ")");
  const int step = multiple_of_four ? 4 : 1;
  const int floor_ell = multiple_of_four ? 4 : 2;
  int ell = multiple_of_four
                ? 4 * (static_cast<int>(std::floor(t / 4.0)) + 1)
                : static_cast<int>(std::floor(t)) + 1;
  if (ell < floor_ell) ell = floor_ell;
  // The closed form can land one step off when t sits on a rounding edge;
  // settle it against the inequality itself.
  while (!admissible(ell)) ell += step;
  while (ell - step >= floor_ell && admissible(ell - step)) ell -= step;
  return ell;
}

TrigPoly antiderivative_rescaled(const TrigPoly& p, int n, int ell) {
  if (n < 1) throw std::invalid_argument("leading order must be >= 1");
  if (ell < 0) throw std::invalid_argument("iterate count must be >= 0");
  auto coeffs = rescaled_coeffs(p, n, ell);
  if (!coeffs)
    throw std::overflow_error(
        "rescaled smoothing overflows: an order below " + std::to_string(n) +
        " amplifies past the representable range at ell = " +
        std::to_string(ell));
  return TrigPoly::from_harmonics(std::move(*coeffs));
}

DominanceReport dominance_gap(const TrigPoly& p, const LeadingHarmonic& lh,
                              int ell, int samples_per_harmonic,
                              std::optional<double> sup_bound) {
  if (ell < 2) throw std::invalid_argument("ell must be >= 2");

  const double M =
      sup_bound ? *sup_bound : sup_norm(p, samples_per_harmonic);
  if (!(M > 0.0) || !std::isfinite(M))
    throw InvalidBound("sup bound M must be positive and finite, got " +
                       std::to_string(M));

  DominanceReport rep;
  rep.ell = ell;
  rep.n = lh.n;
  rep.m_used = M;
  rep.threshold_scaled = lh.rho;
  rep.tail_bound_scaled = 4.0 * M * lh.n / (ell - 1.0);

  // Tail of p: everything but the leading harmonic.  A constant term is a
  // precondition violation and surfaces as MeanNotZero.
  std::vector<Harmonic> tail;
  tail.reserve(p.term_count());
  for (const auto& h : p.harmonics()) {
    if (h.k == 0)
      throw MeanNotZero("dominance test requires a mean-zero polynomial");
    if (h.k == lh.n) continue;
    tail.push_back(h);
  }

  auto scaled = rescaled_coeffs(TrigPoly::from_harmonics(std::move(tail)),
                                lh.n, ell);
  if (!scaled) {
    // An order below n blows up under smoothing; dominance is hopeless at
    // this ell and the caller decides what to do about it.
    rep.d_ell_scaled = std::numeric_limits<double>::infinity();
  } else {
    rep.d_ell_scaled =
        sup_norm(TrigPoly::from_harmonics(std::move(*scaled)),
                 samples_per_harmonic);
  }
  rep.satisfied = rep.d_ell_scaled < rep.threshold_scaled;

  const double nl = std::pow(static_cast<double>(lh.n), ell);  // can overflow
  rep.d_ell = std::isfinite(rep.d_ell_scaled) ? rep.d_ell_scaled / nl
                                              : rep.d_ell_scaled;
  rep.threshold = rep.threshold_scaled / nl;
  rep.tail_bound = rep.tail_bound_scaled / nl;
  return rep;
}

std::vector<GridPoint> extremal_grid(const LeadingHarmonic& lh, int ell) {
  if (lh.n < 1) throw std::invalid_argument("leading order must be >= 1");
  if (!(lh.rho > 0.0))
    throw std::invalid_argument("leading amplitude must be positive");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");

  // The smoothed leading term is rho cos(nx - phi - ell*pi/2) / n^ell; its
  // extrema sit where the argument is a multiple of pi.
  const int n = lh.n;
  const double shift = (ell % 4) * (kPi / 2.0);
  std::vector<GridPoint> grid;
  grid.reserve(2 * n);
  for (int m = 0; m < 2 * n; ++m)
    grid.push_back({reduce_angle((lh.phi + shift + m * kPi) / n),
                    m % 2 == 0 ? 1 : -1});
  std::sort(grid.begin(), grid.end(),
            [](const GridPoint& l, const GridPoint& r) { return l.x < r.x; });
  return grid;
}

std::vector<Bracket> bracket_zeros(const TrigPoly& F,
                                   const std::vector<GridPoint>& grid) {
  const int m = static_cast<int>(grid.size());
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("grid must hold an even number of points");

  for (const auto& gp : grid) {
    const double v = F.eval(gp.x);
    const int s = sign_of(v);
    if (s == 0)
      throw SignMismatch("exact zero at grid point x=" + std::to_string(gp.x));
    if (s != gp.sign)
      throw SignMismatch("sign " + std::to_string(s) + " at grid point x=" +
                         std::to_string(gp.x) + ", leading term pins " +
                         std::to_string(gp.sign));
  }

  std::vector<Bracket> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto& a = grid[i];
    const auto& b = grid[(i + 1) % m];
    out.push_back({a.x, (i + 1 < m) ? b.x : b.x + kTwoPi, a.sign, b.sign});
  }
  return out;
}

double refine_zero(const TrigPoly& F, const Bracket& br, double xtol) {
  if (!(xtol > 0.0)) throw std::invalid_argument("xtol must be > 0");
  if (!(br.lo < br.hi))
    throw std::invalid_argument("bracket must have lo < hi");

  double lo = br.lo, hi = br.hi;
  const int slo = sign_of(F.eval(lo));
  const int shi = sign_of(F.eval(hi));
  if (slo * shi >= 0)
    throw BadBracket("no sign change on [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    const int sm = sign_of(F.eval(mid));
    if (sm == 0) return reduce_angle(mid);
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return reduce_angle(0.5 * (lo + hi));
}

std::vector<double> rolle_descent(const TrigPoly& F,
                                  std::vector<double> zeros_of_F, int levels,
                                  double xtol) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (!(xtol > 0.0)) throw std::invalid_argument("xtol must be > 0");
  if (zeros_of_F.size() < 2)
    throw std::invalid_argument("descent needs at least 2 zeros");
  for (double& z : zeros_of_F) z = reduce_angle(z);
  std::sort(zeros_of_F.begin(), zeros_of_F.end());

  TrigPoly G = F;
  for (int lvl = 0; lvl < levels; ++lvl) {
    TrigPoly D = G.derivative();
    zeros_of_F = descend_step(D, zeros_of_F, xtol, 1e-9 * sup_norm(D));
    G = std::move(D);
  }
  return zeros_of_F;
}

ZeroCertificate certify(const TrigPoly& p, const CertifyConfig& cfg) {
  if (cfg.ell_cap < 2) throw std::invalid_argument("ell_cap must be >= 2");
  if (!(cfg.xtol > 0.0) || !(cfg.rtol > 0.0) || !(cfg.distinct_tol > 0.0))
    throw std::invalid_argument("tolerances must be > 0");
  if (cfg.sup_bound && (!(*cfg.sup_bound > 0.0) || !std::isfinite(*cfg.sup_bound)))
    throw InvalidBound("sup bound must be positive and finite");
  if (p.is_zero())
    throw std::invalid_argument("certify requires a nonzero polynomial");

  ZeroCertificate cert;
  const auto lh = leading_harmonic(p, cfg.leading_tol);
  double largest = 0.0;
  for (const auto& h : p.harmonics())
    largest = std::max(largest, std::hypot(h.a, h.b));

  // No oscillatory leading term, or a mean that is not negligible: the
  // guarantee is empty (n = 0) and there is nothing to certify.
  if (!lh || std::abs(p.mean()) > cfg.leading_tol * largest) {
    cert.trivial = true;
    cert.leading = lh;
    return cert;
  }
  cert.leading = lh;
  cert.n = lh->n;

  // Drop the sub-tolerance constant term; smoothing needs an exact zero
  // mean.  Residuals are still measured against the full input below.
  TrigPoly q = p;
  if (p.mean() != 0.0) {
    std::vector<Harmonic> hs = p.harmonics();
    std::erase_if(hs, [](const Harmonic& h) { return h.k == 0; });
    q = TrigPoly::from_harmonics(std::move(hs));
  }

  if (lh->rho < std::numeric_limits<double>::min())
    throw Underflow("leading amplitude " + std::to_string(lh->rho) +
                    " is below the positive-normal floor");

  const double M =
      cfg.sup_bound ? *cfg.sup_bound : sup_norm(q, cfg.samples_per_harmonic);

  int ell = 0;
  DominanceReport rep;
  if (cfg.mode == EllMode::Bound) {
    ell = choose_ell(*lh, M, cfg.multiple_of_four);
    if (ell > cfg.ell_cap)
      throw DominanceUnreachable("a-priori order " + std::to_string(ell) +
                                 " exceeds the cap " +
                                 std::to_string(cfg.ell_cap));
    rep = dominance_gap(q, *lh, ell, cfg.samples_per_harmonic, M);
    // The a-priori order always passes for a clean band-limited input; a
    // few escalation steps absorb an optimistic user-supplied M.
    const int step = cfg.multiple_of_four ? 4 : 1;
    for (int tries = 0;
         !rep.satisfied && tries < 32 && ell + step <= cfg.ell_cap; ++tries) {
      ell += step;
      rep = dominance_gap(q, *lh, ell, cfg.samples_per_harmonic, M);
    }
  } else {
    for (ell = 2; ell <= cfg.ell_cap; ++ell) {
      rep = dominance_gap(q, *lh, ell, cfg.samples_per_harmonic, M);
      if (rep.satisfied) break;
    }
  }
  if (!rep.satisfied)
    throw DominanceUnreachable(
        "no smoothing order up to " + std::to_string(cfg.ell_cap) +
        " contracts the tail below the leading amplitude");
  cert.ell = ell;
  cert.dominance = rep;

  // Bracket the 2n sign changes of the rescaled smoothing on the extremal
  // grid of its leading term.  Dominance passed, so the coefficients are
  // finite.
  const int n = lh->n;
  TrigPoly F = TrigPoly::from_harmonics(std::move(*rescaled_coeffs(q, n, ell)));
  const auto grid = extremal_grid(*lh, ell);
  std::vector<Bracket> brackets;
  try {
    brackets = bracket_zeros(F, grid);
  } catch (const SignMismatch&) {
    // A grid point landed on an exact zero (or the dominance margin is
    // paper thin).  Rotate the grid half a spacing; any point set with
    // strictly alternating signs brackets just as well.
    std::vector<GridPoint> g2;
    g2.reserve(grid.size());
    bool usable = true;
    for (const auto& gp : grid) {
      const double x = reduce_angle(gp.x + kPi / (2.0 * n));
      const int s = sign_of(F.eval(x));
      if (s == 0) {
        usable = false;
        break;
      }
      g2.push_back({x, s});
    }
    if (usable) {
      std::sort(g2.begin(), g2.end(),
                [](const GridPoint& l, const GridPoint& r) { return l.x < r.x; });
      for (std::size_t i = 0; usable && i < g2.size(); ++i)
        usable = g2[i].sign != g2[(i + 1) % g2.size()].sign;
    }
    if (!usable) throw;
    brackets = bracket_zeros(F, g2);
  }

  std::vector<double> zs;
  zs.reserve(brackets.size());
  for (const auto& br : brackets) zs.push_back(refine_zero(F, br, cfg.xtol));
  std::sort(zs.begin(), zs.end());
  if (cfg.collect_trace) cert.descent_trace.push_back(zs);

  // Descend level by level on the rescaled chain: the derivative of
  // n^j p^(-j) is n times n^(j-1) p^(-(j-1)), so each level's polynomial is
  // rebuilt from q directly and shares signs with the true derivative.
  // The simplicity floor uses the amplitude sum, an upper bound on the sup
  // that only makes the degeneracy test more conservative.
  for (int j = ell; j >= 1; --j) {
    TrigPoly P =
        TrigPoly::from_harmonics(std::move(*rescaled_coeffs(q, n, j - 1)));
    zs = descend_step(P, zs, cfg.xtol, 1e-9 * coefficient_sum(P));
    if (cfg.collect_trace) cert.descent_trace.push_back(zs);
  }

  const int m = static_cast<int>(zs.size());
  for (int i = 0; i < m; ++i) {
    const double gap =
        (i + 1 < m) ? zs[i + 1] - zs[i] : zs[0] + kTwoPi - zs[m - 1];
    if (gap < cfg.distinct_tol)
      throw ToleranceFailure("zeros " + std::to_string(zs[i]) + " and " +
                             std::to_string(zs[(i + 1) % m]) +
                             " are closer than the distinctness threshold");
  }

  cert.sup = sup_norm(p, cfg.samples_per_harmonic);
  cert.zeros = zs;
  cert.residuals.reserve(zs.size());
  for (double z : zs) {
    const double r = std::abs(p.eval(z));
    if (r > cfg.rtol * cert.sup)
      throw ToleranceFailure("residual " + std::to_string(r) + " at x=" +
                             std::to_string(z) + " exceeds " +
                             std::to_string(cfg.rtol) + " * sup");
    cert.residuals.push_back(r);
  }
  return cert;
}

}  // namespace trigzero
