#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "abel/error.hpp"
#include "abelinv/commands.hpp"
#include "abelinv/plot.hpp"
#include "abelinv/table.hpp"

namespace fs = std::filesystem;
using namespace abelinv;
using abel::Errc;

namespace {

fs::path tmp(const std::string& name) {
  const fs::path dir(ABEL_TEST_TMPDIR);
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_quiet(const RunConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int rc = run(cfg, out, err);
  if (out_text) *out_text = out.str();
  return rc;
}

double report_value(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + "=", 0) == 0) return std::stod(line.substr(key.size() + 1));
  }
  FAIL("missing report key " << key);
  return 0.0;
}

int shell(const std::string& args) {
  const std::string cmd = std::string("\"") + ABELINV_EXE + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const abel::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("tables round-trip doubles exactly") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> mag(-300.0, 300.0);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  Table t;
  std::vector<double> a, b;
  for (int i = 0; i < 1000; ++i) {
    a.push_back(mant(gen) * std::pow(10.0, mag(gen)));
    b.push_back(mant(gen));
  }
  a[0] = 0.0;
  a[1] = -0.0;
  a[2] = std::numeric_limits<double>::denorm_min();
  a[3] = std::numeric_limits<double>::max();
  t.add("x", a);
  t.add("q", b);
  const auto path = tmp("roundtrip.csv");
  write_table(t, path);
  const auto back = read_table(path);
  REQUIRE(back.header == t.header);
  REQUIRE(back.rows() == 1000);
  for (std::size_t i = 0; i < 1000; ++i) {
    CHECK(std::bit_cast<std::uint64_t>(back.column("x")[i]) == std::bit_cast<std::uint64_t>(a[i]));
    CHECK(back.column("q")[i] == b[i]);
  }
  CHECK(format_table(back) == slurp(path));
}

TEST_CASE("table parsing edge cases") {
  const auto header_only = parse_table("x,q\n");
  CHECK(header_only.rows() == 0);
  CHECK(header_only.has("q"));

  const auto relaxed = parse_table("\xEF\xBB\xBF x , q \r\n\n 0 , 1.5 \r\n1,2\n");
  CHECK(relaxed.column("x") == std::vector<double>{0.0, 1.0});
  CHECK(relaxed.column("q") == std::vector<double>{1.5, 2.0});

  try {
    (void)parse_table("x,q\n0,1\n1,2,3\n");
    FAIL("expected parse error");
  } catch (const abel::Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { (void)parse_table("x,q\n0,abc\n"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_table("x,q\n0,nan\n"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_table("x,q\n0,inf\n"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_table(""); }) == Errc::parse_error);
  CHECK(code_of([] { (void)parse_table("x,q\n0,1\n").column("k"); }) == Errc::parse_error);
  CHECK(code_of([] { (void)read_table(tmp("does_not_exist.csv")); }) == Errc::file_not_found);
}

TEST_CASE("plot output") {
  const std::vector<Series> series{{"k", {0.0, 0.5, 1.0}, {1.0, 0.75, 0.0}},
                                   {"k_alpha", {0.0, 0.5, 1.0}, {0.9, 0.7, 0.0}}};
  const auto data = format_plot_data(series);
  CHECK(std::count(data.begin(), data.end(), '\n') == 7);
  CHECK(data.rfind("series,x,y\n", 0) == 0);
  CHECK(format_plot_data({}) == "series,x,y\n");

  const auto svg = format_svg(series, "demo");
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 2);
  CHECK(svg.find("demo") != std::string::npos);
}

TEST_CASE("every subcommand runs") {
  RunConfig syn;
  syn.subcommand = Subcommand::Synthetic;
  syn.output = tmp("syn.csv");
  syn.truth = tmp("syn_truth.csv");
  syn.n = 21;
  REQUIRE(run_quiet(syn) == 0);
  CHECK(read_table(*syn.truth).rows() == 21);

  RunConfig cfg;
  cfg.input = syn.output;
  for (const auto kind : {Subcommand::Invert, Subcommand::Errors, Subcommand::Smooth}) {
    cfg.subcommand = kind;
    cfg.output = tmp("out_" + std::to_string(static_cast<int>(kind)) + ".csv");
    CHECK(run_quiet(cfg) == 0);
    CHECK(read_table(cfg.output).rows() == 21);
  }
  CHECK(read_table(tmp("out_3.csv")).has("k_refined"));

  cfg.subcommand = Subcommand::Regularize;
  cfg.alpha = 1e-4;
  cfg.output = tmp("reg.csv");
  CHECK(run_quiet(cfg) == 0);
  CHECK(read_table(cfg.output).has("k_alpha"));

  cfg.subcommand = Subcommand::Forward;
  cfg.input = *syn.truth;
  cfg.output = tmp("fwd.csv");
  CHECK(run_quiet(cfg) == 0);

  Table intens;
  const auto x = read_table(syn.output).column("x");
  std::vector<double> inten;
  for (const double q : read_table(syn.output).column("q")) inten.push_back(std::exp(-q));
  intens.add("x", x);
  intens.add("I", inten);
  write_table(intens, tmp("intensity.csv"));
  RunConfig tomo;
  tomo.subcommand = Subcommand::Tomo;
  tomo.input = tmp("intensity.csv");
  tomo.output = tmp("tomo.csv");
  tomo.resample_n = 30;
  tomo.plot = true;
  tomo.diagnostics = tmp("tomo.json");
  CHECK(run_quiet(tomo) == 0);
  CHECK(read_table(tomo.output).rows() == 30);
  CHECK(fs::exists(tmp("tomo.csv.svg")));
  CHECK(fs::exists(tmp("tomo.csv.plot.csv")));
  CHECK(slurp(*tomo.diagnostics).find("\"residual_direct\"") != std::string::npos);
}

TEST_CASE("forward then invert recovers a uniform profile") {
  Table prof;
  std::vector<double> r, k;
  for (int i = 0; i <= 10; ++i) {
    r.push_back(0.1 * i);
    k.push_back(3.0);
  }
  r.back() = 1.0;
  prof.add("r", r);
  prof.add("k", k);
  write_table(prof, tmp("const_profile.csv"));
  RunConfig fwd;
  fwd.subcommand = Subcommand::Forward;
  fwd.input = tmp("const_profile.csv");
  fwd.output = tmp("const_q.csv");
  REQUIRE(run_quiet(fwd) == 0);
  RunConfig inv;
  inv.subcommand = Subcommand::Invert;
  inv.input = fwd.output;
  inv.output = tmp("const_k.csv");
  REQUIRE(run_quiet(inv) == 0);
  const auto result = read_table(inv.output);
  for (const double v : result.column("k")) CHECK(v == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("synthetic noise feeds the discrepancy principle") {
  RunConfig syn;
  syn.subcommand = Subcommand::Synthetic;
  syn.output = tmp("noisy.csv");
  syn.noise = 0.05;
  syn.seed = 11;
  syn.n = 15;
  std::string report;
  REQUIRE(run_quiet(syn, &report) == 0);
  const double delta = report_value(report, "noise_norm");
  RunConfig reg;
  reg.subcommand = Subcommand::Regularize;
  reg.input = syn.output;
  reg.output = tmp("noisy_reg.csv");
  reg.delta = delta;
  REQUIRE(run_quiet(reg, &report) == 0);
  if (report.find("alpha_status=converged") != std::string::npos) {
    CHECK(report_value(report, "residual_rel_gap") <= 1e-3);
  }
  reg.delta.reset();
  REQUIRE(run_quiet(reg, &report) == 0);
  CHECK(report.find("alpha_status=") != std::string::npos);
}

TEST_CASE("process runs are deterministic") {
  const std::string a = tmp("det_a.csv").string();
  const std::string b = tmp("det_b.csv").string();
  const std::string common = "synthetic --phantom semicircle --n 17 --noise 0.1 --seed 5 -o ";
  REQUIRE(shell(common + a) == 0);
  REQUIRE(shell(common + b) == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(shell("regularize -i " + a + " -o " + b + " --diagnostics " + b + ".json") == 0);
  const std::string first = slurp(b) + slurp(b + ".json");
  REQUIRE(shell("regularize -i " + a + " -o " + b + " --diagnostics " + b + ".json") == 0);
  CHECK(first == slurp(b) + slurp(b + ".json"));
}

TEST_CASE("failures map to distinct exit codes") {
  const std::string out = tmp("ignored.csv").string();
  CHECK(shell("invert -o " + out) == 2);
  CHECK(shell("invert -i " + tmp("missing.csv").string() + " -o " + out) == exit_code(Errc::file_not_found));
  {
    std::ofstream f(tmp("ragged.csv"));
    f << "x,q\n0,1\n0.5\n";
  }
  CHECK(shell("invert -i " + tmp("ragged.csv").string() + " -o " + out) == exit_code(Errc::parse_error));
  {
    std::ofstream f(tmp("badmesh.csv"));
    f << "x,q\n0,1\n0.5,1\n0.4,0\n";
  }
  CHECK(shell("invert -i " + tmp("badmesh.csv").string() + " -o " + out) == exit_code(Errc::invalid_mesh));
  {
    std::ofstream f(tmp("dark.csv"));
    f << "x,I\n0,0.5\n0.5,0\n1,1\n";
  }
  CHECK(shell("tomo -i " + tmp("dark.csv").string() + " -o " + out) == exit_code(Errc::invalid_measurement));
  CHECK(exit_code(Errc::file_not_found) != exit_code(Errc::parse_error));
  CHECK(exit_code(Errc::invalid_argument) > 2);
}
