#pragma once

#include <string>
#include <variant>
#include <vector>

#include "trigzero/ingest.hpp"
#include "trigzero/quasiperiodic.hpp"
#include "trigzero/sturm.hpp"
#include "trigzero/trigpoly.hpp"

namespace trigzero {

// The three self-describing input documents:
//   {"kind": "trigpoly", "harmonics": [{"k", "a", "b"}, ...]}
//   {"kind": "samples",  "values": [...]}
//   {"kind": "qpsum",    "terms": [{"lambda", "a", "b"}, ...]}
using ParsedInput = std::variant<TrigPoly, SampledSignal, QPSum>;

// Strict parse: unknown keys are rejected, numbers must be finite, the
// document must be a single object of one of the kinds above.  Malformed
// documents throw ParseError with the parser's line/column context; an
// empty "values" list throws TooFewSamples.
ParsedInput parse_input(const std::string& text);

// "trigpoly", "samples" or "qpsum".
const char* kind_name(const ParsedInput& in);

struct OracleSummary {
  int samples = 0;
  int count = 0;
  std::vector<double> zeros;
};

// Everything the certify command reports.  pass means the nontrivial
// guarantee held: n >= 1, at least 2n distinct zeros, all residuals within
// tolerance.
struct AnalysisReport {
  std::string input_path;
  std::string input_kind;
  int degree = 0;
  int harmonic_count = 0;
  EllMode mode = EllMode::Bound;
  int ell_cap = 0;
  double xtol = 0.0;
  double rtol = 0.0;
  ZeroCertificate cert;
  OracleSummary oracle;
  bool pass = false;
  double timing_ms = 0.0;  // the one nondeterministic field
};

struct OracleReport {
  std::string input_path;
  std::string input_kind;
  int samples = 0;
  double xtol = 0.0;
  int count = 0;
  std::vector<double> zeros;
  double timing_ms = 0.0;
};

struct QPReport {
  std::string input_path;
  int term_count = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double window = 0.0;
  int samples = 0;
  int count = 0;
  double density = 0.0;
  double reference_density = 0.0;  // lambda_min / pi, for comparison only
  double timing_ms = 0.0;
};

// Machine-readable forms: fixed key order, shortest-roundtrip float
// rendering; byte-identical for identical inputs and flags apart from the
// "timing_ms" member.
std::string to_json(const AnalysisReport& r);
std::string to_json(const OracleReport& r);
std::string to_json(const QPReport& r);

// Human-readable forms.
std::string to_text(const AnalysisReport& r);
std::string to_text(const OracleReport& r);
std::string to_text(const QPReport& r);

}  // namespace trigzero
