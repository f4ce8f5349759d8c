#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "trigzero/errors.hpp"
#include "trigzero/ingest.hpp"
#include "trigzero/io.hpp"
#include "trigzero/oracle.hpp"
#include "trigzero/quasiperiodic.hpp"
#include "trigzero/sturm.hpp"
#include "trigzero/trigpoly.hpp"

namespace {

using namespace trigzero;

// Exit codes, stable and documented in the README:
//   0 guarantee certified and verified
//   1 unexpected internal failure
//   2 unreadable or malformed input, usage errors
//   3 precondition violation: zero function, non-negligible mean,
//     under-resolved window, bad bound
//   4 no admissible smoothing order up to the cap
//   5 degenerate (non-transversal) crossing
//   6 sign or tolerance breakdown inside the pipeline
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDominance = 4;
constexpr int kExitDegenerate = 5;
constexpr int kExitTolerance = 6;

struct Opts {
  std::string input;
  std::string mode = "bound";
  int ell_cap = 256;
  double xtol = 1e-10;
  double rtol = 1e-8;
  int samples = 0;  // 0 = pick from the degree / window
  int grid = 256;
  double window = 1000.0;
  std::string out;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    if (body.empty() || body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << body;
  if (body.empty() || body.back() != '\n') out << '\n';
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// certify/oracle/plotdata accept coefficients or one period of samples.
TrigPoly to_polynomial(const ParsedInput& in, const char* cmd) {
  if (std::holds_alternative<TrigPoly>(in)) return std::get<TrigPoly>(in);
  if (std::holds_alternative<SampledSignal>(in))
    return analyze(std::get<SampledSignal>(in));
  throw ParseError(std::string(cmd) + " expects a trigpoly or samples document");
}

CertifyConfig make_config(const Opts& o) {
  CertifyConfig cfg;
  cfg.mode = o.mode == "tight" ? EllMode::Tight : EllMode::Bound;
  cfg.ell_cap = o.ell_cap;
  cfg.xtol = o.xtol;
  cfg.rtol = o.rtol;
  return cfg;
}

int run_certify(const Opts& o) {
  const ParsedInput in = parse_input(read_file(o.input));
  const TrigPoly p = to_polynomial(in, "certify");
  if (p.is_zero()) {
    std::cerr << "error: input is the zero function; nothing to certify\n";
    return kExitPrecondition;
  }
  const CertifyConfig cfg = make_config(o);

  AnalysisReport r;
  r.input_path = o.input;
  r.input_kind = kind_name(in);
  r.degree = p.degree();
  r.harmonic_count = static_cast<int>(p.term_count());
  r.mode = cfg.mode;
  r.ell_cap = cfg.ell_cap;
  r.xtol = cfg.xtol;
  r.rtol = cfg.rtol;

  const auto t0 = std::chrono::steady_clock::now();
  r.cert = certify(p, cfg);
  r.oracle.samples =
      o.samples > 0 ? o.samples : default_scan_samples(p.degree());
  r.oracle.zeros = locate_zeros(p, r.oracle.samples, cfg.xtol);
  r.oracle.count = static_cast<int>(r.oracle.zeros.size());
  r.timing_ms = ms_since(t0);

  bool residuals_ok = true;
  for (double v : r.cert.residuals)
    residuals_ok = residuals_ok && v <= cfg.rtol * r.cert.sup;
  r.pass = !r.cert.trivial && r.cert.n >= 1 &&
           static_cast<int>(r.cert.zeros.size()) >= 2 * r.cert.n &&
           residuals_ok;

  emit(o.out, o.format == "json" ? to_json(r) : to_text(r));
  return r.pass ? 0 : kExitPrecondition;  // only the trivial case lands here
}

int run_oracle(const Opts& o) {
  const ParsedInput in = parse_input(read_file(o.input));
  const TrigPoly p = to_polynomial(in, "oracle");

  OracleReport r;
  r.input_path = o.input;
  r.input_kind = kind_name(in);
  r.samples = o.samples > 0 ? o.samples : default_scan_samples(p.degree());
  r.xtol = o.xtol;

  const auto t0 = std::chrono::steady_clock::now();
  r.count = count_sign_changes(p, r.samples);
  r.zeros = locate_zeros(p, r.samples, o.xtol);
  r.timing_ms = ms_since(t0);

  emit(o.out, o.format == "json" ? to_json(r) : to_text(r));
  return 0;
}

int run_qp(const Opts& o) {
  const ParsedInput in = parse_input(read_file(o.input));
  if (!std::holds_alternative<QPSum>(in))
    throw ParseError("qp expects a qpsum document");
  const QPSum& q = std::get<QPSum>(in);

  QPReport r;
  r.input_path = o.input;
  r.term_count = static_cast<int>(q.terms().size());
  r.lambda_min = q.lambda_min();
  r.lambda_max = q.lambda_max();
  r.window = o.window;
  r.samples =
      o.samples > 0
          ? o.samples
          : std::max(4096, 2 * static_cast<int>(std::ceil(
                               64.0 * q.lambda_max() * o.window / kTwoPi)));

  const auto t0 = std::chrono::steady_clock::now();
  r.count = zero_count_window(q, r.window, r.samples);
  r.density = r.count / r.window;
  r.reference_density = q.lambda_min() / kPi;
  r.timing_ms = ms_since(t0);

  emit(o.out, o.format == "json" ? to_json(r) : to_text(r));
  return 0;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_plotdata(const Opts& o) {
  const ParsedInput in = parse_input(read_file(o.input));
  const TrigPoly p = to_polynomial(in, "plotdata");
  if (p.is_zero()) {
    std::cerr << "error: input is the zero function; nothing to plot\n";
    return kExitPrecondition;
  }

  const CertifyConfig cfg = make_config(o);
  const ZeroCertificate cert = certify(p, cfg);
  if (cert.trivial) {
    std::cerr << "error: trivial certificate (no oscillatory leading term or "
                 "non-negligible mean); nothing to plot\n";
    return kExitPrecondition;
  }

  // Absolute-scale smoothings of the mean-stripped input and its leading
  // term; at extreme ell these columns underflow toward 0 together.
  std::vector<Harmonic> hs = p.harmonics();
  std::erase_if(hs, [](const Harmonic& h) { return h.k == 0; });
  const TrigPoly q = TrigPoly::from_harmonics(std::move(hs));
  const TrigPoly f_smooth = q.antiderivative(cert.ell);
  const TrigPoly g_smooth =
      leading_term(q, *cert.leading).antiderivative(cert.ell);

  const std::string prefix = o.out.empty() ? "plotdata" : o.out;
  {
    std::ofstream gridf(prefix + ".grid.tsv", std::ios::binary);
    if (!gridf)
      throw std::runtime_error("cannot write " + prefix + ".grid.tsv");
    gridf << "x\tf\tg_smoothed\tf_smoothed\n";
    for (int i = 0; i < o.grid; ++i) {
      const double x = kTwoPi * i / o.grid;
      gridf << g17(x) << '\t' << g17(p.eval(x)) << '\t' << g17(g_smooth.eval(x))
            << '\t' << g17(f_smooth.eval(x)) << '\n';
    }
  }
  {
    std::ofstream zf(prefix + ".zeros.tsv", std::ios::binary);
    if (!zf) throw std::runtime_error("cannot write " + prefix + ".zeros.tsv");
    zf << "zero\tresidual\n";
    for (std::size_t i = 0; i < cert.zeros.size(); ++i)
      zf << g17(cert.zeros[i]) << '\t' << g17(cert.residuals[i]) << '\n';
  }

  std::cout << "n=" << cert.n << " ell=" << cert.ell << "  wrote " << o.grid
            << " rows to " << prefix << ".grid.tsv and " << cert.zeros.size()
            << " zeros to " << prefix << ".zeros.tsv\n";
  return 0;
}

template <typename F>
int dispatch(F&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const TooFewSamples& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const MeanNotZero& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InvalidBound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const WindowUnderResolved& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const DominanceUnreachable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDominance;
  } catch (const CrossingDegenerate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Error& e) {
    // SignMismatch, BadBracket, DescentSignFailure, Underflow,
    // ToleranceFailure: the pipeline noticed its own breakdown.
    std::cerr << "error: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified zero counts and locations for trigonometric "
               "polynomials, with a dense-scan oracle and quasi-periodic "
               "window experiments"};
  app.require_subcommand(1);

  Opts o;
  auto* certify_cmd =
      app.add_subcommand("certify", "certify >= 2n zeros and locate them");
  auto* oracle_cmd =
      app.add_subcommand("oracle", "dense sign-scan count and locations");
  auto* qp_cmd = app.add_subcommand(
      "qp", "zero count and density of a qpsum over a window [0, T]");
  auto* plot_cmd = app.add_subcommand(
      "plotdata", "tab-separated grids of f and its smoothings, plus zeros");

  for (auto* sub : {certify_cmd, oracle_cmd, qp_cmd, plot_cmd}) {
    sub->add_option("input", o.input, "input document (JSON)")->required();
    sub->add_option("--samples", o.samples,
                    "scan resolution (default: from degree / window)")
        ->check(CLI::Range(4, 1000000000));
    sub->add_option("--out", o.out,
                    "output file (plotdata: filename prefix) instead of stdout");
  }
  for (auto* sub : {certify_cmd, oracle_cmd, qp_cmd})
    sub->add_option("--format", o.format, "report form")
        ->check(CLI::IsMember({"text", "json"}));
  for (auto* sub : {certify_cmd, plot_cmd}) {
    sub->add_option("--mode", o.mode,
                    "smoothing order selection: a-priori bound or measured")
        ->check(CLI::IsMember({"bound", "tight"}));
    sub->add_option("--ell-cap", o.ell_cap, "largest smoothing order to try")
        ->check(CLI::Range(2, 1000000000));
    sub->add_option("--rtol", o.rtol, "residual tolerance relative to sup|f|")
        ->check(CLI::PositiveNumber);
  }
  for (auto* sub : {certify_cmd, oracle_cmd, plot_cmd})
    sub->add_option("--xtol", o.xtol, "bisection width target")
        ->check(CLI::PositiveNumber);
  plot_cmd->add_option("--grid", o.grid, "number of sample rows")
      ->check(CLI::Range(1, 100000000));
  qp_cmd->add_option("--window", o.window, "window length T")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  if (certify_cmd->parsed()) return dispatch([&] { return run_certify(o); });
  if (oracle_cmd->parsed()) return dispatch([&] { return run_oracle(o); });
  if (qp_cmd->parsed()) return dispatch([&] { return run_qp(o); });
  return dispatch([&] { return run_plotdata(o); });
}
