#pragma once

#include <functional>
#include <vector>

#include "trigzero/trigpoly.hpp"

namespace trigzero {

// Dense-scan zero finder, independent of the certification machinery and
// deliberately naive: uniform grid, sign changes, bisection.  Used as a
// cross-check, not as a proof.

// Scan resolution that comfortably separates the zeros of a polynomial of
// the given degree: max(4096, 64 * degree) points per period.
int default_scan_samples(int degree);

// Sign changes of f around one period, scanned at `samples` uniform points
// on [0, 2*pi) and counted cyclically (last point against first).  If any
// sample lands exactly on a zero the whole grid is shifted by half a step
// and rescanned; a zero that survives the shift counts as positive.
int count_sign_changes(const std::function<double(double)>& f, int samples);
int count_sign_changes(const TrigPoly& p, int samples);

// One bisection-refined zero per sign change, sorted, in [0, 2*pi).
// locate_zeros(f, s, xtol).size() == count_sign_changes(f, s) always.
std::vector<double> locate_zeros(const std::function<double(double)>& f,
                                 int samples, double xtol = 1e-10);
std::vector<double> locate_zeros(const TrigPoly& p, int samples,
                                 double xtol = 1e-10);

}  // namespace trigzero
