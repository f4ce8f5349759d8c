#include "trigzero/io.hpp"

#include <cmath>
#include <initializer_list>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "trigzero/errors.hpp"

namespace trigzero {
namespace {

using ordered_json = nlohmann::ordered_json;

double finite_number(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + " must be finite");
  return v;
}

int small_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + " must be an integer");
  const long long v = j.get<long long>();
  if (v < 0 || v > 1000000)
    throw ParseError(where + " out of range [0, 1000000]");
  return static_cast<int>(v);
}

void check_keys(const ordered_json& obj,
                std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok)
      throw ParseError("unknown key \"" + it.key() + "\" in " + where);
  }
}

const ordered_json& require_array(const ordered_json& obj, const char* key,
                                  const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_array())
    throw ParseError(where + " needs an array \"" + key + "\"");
  return obj[key];
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    // parse_error for malformed text, out_of_range for literals like 1e999
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("input must be a single object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("missing string field \"kind\"");
  const std::string kind = j["kind"].get<std::string>();

  // Structural violations surfaced by the value constructors (bad harmonic
  // orders, non-increasing frequencies...) are parse failures here.
  try {
    if (kind == "trigpoly") {
      check_keys(j, {"kind", "harmonics"}, "trigpoly document");
      std::vector<Harmonic> hs;
      for (const auto& e : require_array(j, "harmonics", "trigpoly document")) {
        if (!e.is_object()) throw ParseError("harmonic entries must be objects");
        check_keys(e, {"k", "a", "b"}, "harmonic entry");
        if (!e.contains("k")) throw ParseError("harmonic entry missing \"k\"");
        Harmonic h;
        h.k = small_int(e["k"], "\"k\"");
        if (e.contains("a")) h.a = finite_number(e["a"], "\"a\"");
        if (e.contains("b")) h.b = finite_number(e["b"], "\"b\"");
        hs.push_back(h);
      }
      return TrigPoly::from_harmonics(std::move(hs));
    }
    if (kind == "samples") {
      check_keys(j, {"kind", "values"}, "samples document");
      std::vector<double> vs;
      for (const auto& e : require_array(j, "values", "samples document"))
        vs.push_back(finite_number(e, "sample value"));
      return SampledSignal(std::move(vs));
    }
    if (kind == "qpsum") {
      check_keys(j, {"kind", "terms"}, "qpsum document");
      std::vector<QPTerm> ts;
      for (const auto& e : require_array(j, "terms", "qpsum document")) {
        if (!e.is_object()) throw ParseError("qpsum terms must be objects");
        check_keys(e, {"lambda", "a", "b"}, "qpsum term");
        if (!e.contains("lambda")) throw ParseError("qpsum term missing \"lambda\"");
        QPTerm t;
        t.lambda = finite_number(e["lambda"], "\"lambda\"");
        if (e.contains("a")) t.a = finite_number(e["a"], "\"a\"");
        if (e.contains("b")) t.b = finite_number(e["b"], "\"b\"");
        ts.push_back(t);
      }
      return QPSum(std::move(ts));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown kind \"" + kind + "\"");
}

const char* kind_name(const ParsedInput& in) {
  if (std::holds_alternative<TrigPoly>(in)) return "trigpoly";
  if (std::holds_alternative<SampledSignal>(in)) return "samples";
  return "qpsum";
}

namespace {

const char* mode_name(EllMode m) {
  return m == EllMode::Bound ? "bound" : "tight";
}

ordered_json leading_json(const std::optional<LeadingHarmonic>& lh) {
  if (!lh) return nullptr;
  return {{"n", lh->n},
          {"a", lh->a},
          {"b", lh->b},
          {"rho", lh->rho},
          {"phi", lh->phi}};
}

ordered_json dominance_json(const std::optional<DominanceReport>& d) {
  if (!d) return nullptr;
  return {{"ell", d->ell},
          {"n", d->n},
          {"d_ell_scaled", d->d_ell_scaled},
          {"threshold_scaled", d->threshold_scaled},
          {"tail_bound_scaled", d->tail_bound_scaled},
          {"d_ell", d->d_ell},
          {"threshold", d->threshold},
          {"tail_bound", d->tail_bound},
          {"m_used", d->m_used},
          {"satisfied", d->satisfied}};
}

std::ostringstream text_stream() {
  std::ostringstream os;
  os << std::setprecision(17);
  return os;
}

void put_list(std::ostringstream& os, const std::vector<double>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
}

}  // namespace

std::string to_json(const AnalysisReport& r) {
  ordered_json j{
      {"tool", "trigzero"},
      {"command", "certify"},
      {"input",
       {{"path", r.input_path},
        {"kind", r.input_kind},
        {"degree", r.degree},
        {"harmonics", r.harmonic_count}}},
      {"config",
       {{"mode", mode_name(r.mode)},
        {"ell_cap", r.ell_cap},
        {"xtol", r.xtol},
        {"rtol", r.rtol},
        {"oracle_samples", r.oracle.samples}}},
      {"trivial", r.cert.trivial},
      {"leading", leading_json(r.cert.leading)},
      {"ell", r.cert.ell},
      {"dominance", dominance_json(r.cert.dominance)},
      {"sup", r.cert.sup},
      {"zeros", r.cert.zeros},
      {"residuals", r.cert.residuals},
      {"oracle",
       {{"samples", r.oracle.samples},
        {"count", r.oracle.count},
        {"zeros", r.oracle.zeros}}},
      {"guarantee",
       {{"required", 2 * r.cert.n},
        {"certified", static_cast<int>(r.cert.zeros.size())},
        {"pass", r.pass}}},
      {"timing_ms", r.timing_ms}};
  return j.dump(2);
}

std::string to_json(const OracleReport& r) {
  ordered_json j{{"tool", "trigzero"},
                 {"command", "oracle"},
                 {"input", {{"path", r.input_path}, {"kind", r.input_kind}}},
                 {"samples", r.samples},
                 {"xtol", r.xtol},
                 {"count", r.count},
                 {"zeros", r.zeros},
                 {"timing_ms", r.timing_ms}};
  return j.dump(2);
}

std::string to_json(const QPReport& r) {
  ordered_json j{{"tool", "trigzero"},
                 {"command", "qp"},
                 {"input", {{"path", r.input_path}, {"kind", "qpsum"}, {"terms", r.term_count}}},
                 {"lambda_min", r.lambda_min},
                 {"lambda_max", r.lambda_max},
                 {"window", r.window},
                 {"samples", r.samples},
                 {"count", r.count},
                 {"density", r.density},
                 {"reference_density", r.reference_density},
                 {"timing_ms", r.timing_ms}};
  return j.dump(2);
}

std::string to_text(const AnalysisReport& r) {
  auto os = text_stream();
  os << "input:     " << r.input_path << " (" << r.input_kind << ", degree "
     << r.degree << ", " << r.harmonic_count
     << (r.harmonic_count == 1 ? " harmonic)\n" : " harmonics)\n");
  if (r.cert.trivial) {
    os << "result:    trivial certificate (no oscillatory leading term or "
          "non-negligible mean); empty guarantee, n = 0\n";
    return os.str();
  }
  const auto& lh = *r.cert.leading;
  os << "leading:   n=" << lh.n << "  rho=" << lh.rho << "  phi=" << lh.phi
     << "\n";
  os << "smoothing: ell=" << r.cert.ell << "  (mode " << mode_name(r.mode)
     << ")\n";
  if (r.cert.dominance) {
    const auto& d = *r.cert.dominance;
    os << "dominance: d_ell=" << d.d_ell_scaled << " < rho=" << d.threshold_scaled
       << " at the n^ell working scale  (tail bound " << d.tail_bound_scaled
       << ", M=" << d.m_used << ")\n";
  }
  os << "zeros (" << r.cert.zeros.size() << "):  ";
  put_list(os, r.cert.zeros);
  os << "\n";
  double rmax = 0.0;
  for (double v : r.cert.residuals) rmax = std::max(rmax, v);
  os << "residuals: max " << rmax << "  (limit " << r.rtol << " * sup, sup="
     << r.cert.sup << ")\n";
  os << "oracle:    " << r.oracle.count << " sign changes at "
     << r.oracle.samples << " samples\n";
  os << "guarantee: certified " << r.cert.zeros.size() << " >= 2n = "
     << 2 * r.cert.n << "  ->  " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string to_text(const OracleReport& r) {
  auto os = text_stream();
  os << "input:   " << r.input_path << " (" << r.input_kind << ")\n";
  os << "scan:    " << r.samples << " samples, xtol " << r.xtol << "\n";
  os << "count:   " << r.count << "\n";
  os << "zeros:   ";
  put_list(os, r.zeros);
  os << "\n";
  return os.str();
}

std::string to_text(const QPReport& r) {
  auto os = text_stream();
  os << "input:     " << r.input_path << " (qpsum, " << r.term_count
     << " terms, lambda " << r.lambda_min << " .. " << r.lambda_max << ")\n";
  os << "window:    [0, " << r.window << "]  at " << r.samples << " samples\n";
  os << "count:     " << r.count << "\n";
  os << "density:   " << r.density << " zeros per unit length\n";
  os << "reference: lambda_min/pi = " << r.reference_density
     << "  (comparison value, not an asserted bound)\n";
  return os.str();
}

}  // namespace trigzero
