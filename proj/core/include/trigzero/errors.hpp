#pragma once

#include <stdexcept>

namespace trigzero {

// Base class for every error this library throws deliberately.  Plain
// std::invalid_argument is reserved for outright API misuse (malformed
// harmonic lists, nonpositive tolerances and the like).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Antidifferentiation requires a mean-zero input; a constant term has no
// periodic antiderivative.
struct MeanNotZero : Error {
  using Error::Error;
};

// Sample vector too short to carry any spectral content.
struct TooFewSamples : Error {
  using Error::Error;
};

// Sup-norm bound M fed to the smoothing-order rule is nonpositive or
// non-finite, or the leading amplitude is.
struct InvalidBound : Error {
  using Error::Error;
};

// A grid point whose sign was pinned by the leading term evaluated to the
// wrong sign (or to an exact zero) on the smoothed polynomial.
struct SignMismatch : Error {
  using Error::Error;
};

// Bisection was asked to run on an interval whose endpoint signs do not
// straddle zero.
struct BadBracket : Error {
  using Error::Error;
};

// A zero handed to the descent step is too flat: the next derivative is
// below the simplicity threshold there, so the crossing cannot be verified
// as transversal.
struct CrossingDegenerate : Error {
  using Error::Error;
};

// Signs at the current zero set fail to alternate, so the between-zeros
// bisection of the next level cannot proceed.
struct DescentSignFailure : Error {
  using Error::Error;
};

// No admissible smoothing order up to the configured cap makes the tail
// smaller than the leading amplitude.
struct DominanceUnreachable : Error {
  using Error::Error;
};

// A required quantity fell below the representable floating-point range.
struct Underflow : Error {
  using Error::Error;
};

// Scan resolution is too coarse for the highest frequency in the window.
struct WindowUnderResolved : Error {
  using Error::Error;
};

// A certificate was produced but failed its own final residual or
// distinctness check.
struct ToleranceFailure : Error {
  using Error::Error;
};

// Input document malformed (bad JSON, wrong kind, unknown keys...).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace trigzero
