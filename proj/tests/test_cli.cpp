#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "trigzero/ingest.hpp"
#include "trigzero/trigpoly.hpp"

// End-to-end tests: these exercise the installed binary through a shell,
// not the library.  The ctest harness exports TRIGZERO_CLI with the built
// executable's path.

namespace fs = std::filesystem;
using nlohmann::json;
using trigzero::kTwoPi;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const std::string& cli() {
  static const std::string path = [] {
    const char* p = std::getenv("TRIGZERO_CLI");
    REQUIRE_MESSAGE(p != nullptr, "TRIGZERO_CLI must point at the binary");
    return std::string(p);
  }();
  return path;
}

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("trigzero_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  static int seq = 0;
  const fs::path outfile = scratch() / ("out" + std::to_string(seq++));
  const std::string cmd = "\"" + cli() + "\" " + args + " > \"" +
                          outfile.string() + "\" 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

fs::path write_input(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string drop_timing(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line))
    if (line.find("timing_ms") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace

TEST_CASE("certify: a clean input passes with the full report") {
  const auto in = write_input(
      "sin3x.json", R"({"kind":"trigpoly","harmonics":[{"k":3,"b":1}]})");
  const auto r = run("certify \"" + in.string() + "\" --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["guarantee"]["pass"] == true);
  CHECK(j["guarantee"]["required"] == 6);
  CHECK(j["leading"]["n"] == 3);
  CHECK(j["zeros"].size() == 6);
  CHECK(j["oracle"]["count"] == 6);

  const auto t = run("certify \"" + in.string() + "\"");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
}

TEST_CASE("certify: empty guarantees exit 3") {
  const auto zero =
      write_input("zero.json", R"({"kind":"trigpoly","harmonics":[]})");
  CHECK(run("certify \"" + zero.string() + "\"").exit_code == 3);

  const auto mean = write_input(
      "mean.json",
      R"({"kind":"trigpoly","harmonics":[{"k":0,"a":5},{"k":1,"b":1}]})");
  CHECK(run("certify \"" + mean.string() + "\"").exit_code == 3);
}

TEST_CASE("unusable inputs exit 2") {
  const auto bad = write_input("bad.json", "{nope");
  CHECK(run("certify \"" + bad.string() + "\"").exit_code == 2);
  const auto unknown =
      write_input("unknown.json", R"({"kind":"wavelet","values":[1,2]})");
  CHECK(run("certify \"" + unknown.string() + "\"").exit_code == 2);
  const auto qp = write_input(
      "qp_for_certify.json",
      R"({"kind":"qpsum","terms":[{"lambda":1,"b":1}]})");
  CHECK(run("certify \"" + qp.string() + "\"").exit_code == 2);
  CHECK(run("certify \"" + (scratch() / "absent.json").string() + "\"")
            .exit_code == 2);
  CHECK(run("certify").exit_code == 2);
}

TEST_CASE("certify: sampled input certifies like its coefficient form") {
  using namespace trigzero;
  const TrigPoly p =
      TrigPoly::from_harmonics({{1, 1.0, 0.0}, {2, 0.3, 0.0}});
  std::ostringstream doc;
  doc << std::setprecision(17) << R"({"kind":"samples","values":[)";
  const auto vs = synthesize(p, 64);
  for (std::size_t i = 0; i < vs.size(); ++i)
    doc << (i ? "," : "") << vs[i];
  doc << "]}";
  const auto sampled = write_input("sampled.json", doc.str());
  const auto coeffs = write_input(
      "coeffs.json",
      R"({"kind":"trigpoly","harmonics":[{"k":1,"a":1},{"k":2,"a":0.3}]})");

  const auto rs = run("certify \"" + sampled.string() + "\" --format json");
  const auto rc = run("certify \"" + coeffs.string() + "\" --format json");
  REQUIRE(rs.exit_code == 0);
  REQUIRE(rc.exit_code == 0);
  const auto zs = json::parse(rs.out)["zeros"].get<std::vector<double>>();
  const auto zc = json::parse(rc.out)["zeros"].get<std::vector<double>>();
  REQUIRE(zs.size() == zc.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    CHECK(std::abs(zs[i] - zc[i]) < 1e-8);
}

TEST_CASE("certify: an unreachable smoothing order exits 4") {
  const auto in = write_input(
      "stiff.json",
      R"({"kind":"trigpoly","harmonics":[{"k":1,"b":1},{"k":2,"b":5}]})");
  CHECK(run("certify \"" + in.string() + "\" --ell-cap 4").exit_code == 4);
}

TEST_CASE("certify: json output is deterministic apart from timing") {
  const auto in = write_input(
      "det.json",
      R"({"kind":"trigpoly","harmonics":[{"k":2,"b":1},{"k":5,"b":0.1}]})");
  const auto a = run("certify \"" + in.string() + "\" --format json");
  const auto b = run("certify \"" + in.string() + "\" --format json");
  REQUIRE(a.exit_code == 0);
  CHECK(drop_timing(a.out) == drop_timing(b.out));
}

TEST_CASE("certify honors --out") {
  const auto in = write_input(
      "outflag.json", R"({"kind":"trigpoly","harmonics":[{"k":1,"b":1}]})");
  const fs::path dest = scratch() / "report.json";
  const auto r = run("certify \"" + in.string() + "\" --format json --out \"" +
                     dest.string() + "\"");
  REQUIRE(r.exit_code == 0);
  std::ifstream f(dest);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(json::parse(ss.str())["guarantee"]["pass"] == true);
}

TEST_CASE("oracle: counts and locates sign changes") {
  const auto in = write_input(
      "osc.json", R"({"kind":"trigpoly","harmonics":[{"k":3,"b":1}]})");
  const auto r = run("oracle \"" + in.string() + "\" --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["zeros"].size() == 6);
}

TEST_CASE("qp: density of a pure sinusoid approaches 1/pi") {
  const auto in = write_input(
      "qpsin.json", R"({"kind":"qpsum","terms":[{"lambda":1,"b":1}]})");
  const auto r = run("qp \"" + in.string() +
                     "\" --window 628.31853071795865 --format json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 200);
  CHECK(std::abs(j["density"].get<double>() - 1.0 / 3.14159265358979324) <
        1e-10);

  // Too few samples for the window: refused, not miscounted.
  CHECK(run("qp \"" + in.string() + "\" --window 628.3 --samples 100")
            .exit_code == 3);
}

TEST_CASE("plotdata writes the grid and zeros tables") {
  const auto in = write_input(
      "plot.json", R"({"kind":"trigpoly","harmonics":[{"k":1,"b":1}]})");
  const fs::path prefix = scratch() / "plots";
  const auto r = run("plotdata \"" + in.string() + "\" --grid 8 --out \"" +
                     prefix.string() + "\"");
  REQUIRE(r.exit_code == 0);

  std::ifstream grid(prefix.string() + ".grid.tsv");
  REQUIRE(grid.good());
  std::string header;
  std::getline(grid, header);
  CHECK(header == "x\tf\tg_smoothed\tf_smoothed");
  int rows = 0;
  double x, f, gs, fsm;
  while (grid >> x >> f >> gs >> fsm) {
    CHECK(std::abs(x - kTwoPi * rows / 8) < 1e-12);
    CHECK(std::abs(f - std::sin(x)) < 1e-15);
    CHECK(std::abs(fsm - gs) < 1e-15);  // single harmonic: no tail at all
    ++rows;
  }
  CHECK(rows == 8);

  std::ifstream zf(prefix.string() + ".zeros.tsv");
  REQUIRE(zf.good());
  std::getline(zf, header);
  CHECK(header == "zero\tresidual");
  int zrows = 0;
  double z, res;
  while (zf >> z >> res) {
    CHECK(res < 1e-10);
    ++zrows;
  }
  CHECK(zrows == 2);

  CHECK(run("plotdata \"" + in.string() + "\" --grid 0").exit_code == 2);
}

TEST_CASE("plotdata columns witness the smoothed tail gap") {
  const auto in = write_input(
      "plotgap.json",
      R"({"kind":"trigpoly","harmonics":[{"k":2,"b":1},{"k":5,"b":0.1}]})");
  const fs::path prefix = scratch() / "gap";
  const auto r = run("plotdata \"" + in.string() + "\" --grid 64 --out \"" +
                     prefix.string() + "\"");
  REQUIRE(r.exit_code == 0);
  std::ifstream grid(prefix.string() + ".grid.tsv");
  std::string header;
  std::getline(grid, header);
  double x, f, gs, fsm;
  int rows = 0;
  while (grid >> x >> f >> gs >> fsm) {
    // The tail is one harmonic of smoothed amplitude 0.1/5^12 at the
    // paper-bound order 12.
    CHECK(std::abs(fsm - gs) < 5e-10);
    ++rows;
  }
  CHECK(rows == 64);
}
