#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "abelinv/commands.hpp"

namespace {

using abelinv::RunConfig;
using abelinv::Subcommand;

struct Flags {
  std::string input, output, truth, diagnostics, mesh;
  double alpha = 0.0, delta = 0.0, smooth_p = 0.99;
  std::size_t resample_n = 0;
};

const std::map<std::string, abel::Method> kMethods{{"first", abel::Method::First},
                                                   {"second", abel::Method::Second}};
const std::map<std::string, abel::EndpointRule> kEndpoints{
    {"extrapolate", abel::EndpointRule::ExtrapolateLinear},
    {"zero", abel::EndpointRule::Zero},
    {"copy", abel::EndpointRule::CopyPrevious}};
const std::map<std::string, abel::DerivativeScheme> kSchemes{
    {"forward", abel::DerivativeScheme::ForwardDifference},
    {"spline", abel::DerivativeScheme::SplineDerivative}};
const std::map<std::string, abel::PhantomKind> kPhantoms{{"constant", abel::PhantomKind::Constant},
                                                         {"parabolic", abel::PhantomKind::Parabolic},
                                                         {"semicircle", abel::PhantomKind::Semicircle}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelinv: Abel inversion by generalized left-rectangle quadrature"};
  app.require_subcommand(1);

  RunConfig cfg;
  Flags flags;
  std::map<CLI::App*, Subcommand> kinds;
  std::map<CLI::App*, std::map<std::string, CLI::Option*>> opts;

  auto sub = [&](const char* name, const char* help, Subcommand kind, bool needs_input) {
    CLI::App* s = app.add_subcommand(name, help);
    kinds[s] = kind;
    auto& o = opts[s];
    if (needs_input) s->add_option("-i,--input", flags.input, "input CSV")->required();
    s->add_option("-o,--output", flags.output, "output CSV")->required();
    s->add_option("--diagnostics", flags.diagnostics, "write diagnostics as JSON");
    s->add_option("--endpoint", cfg.endpoint, "value at r = R: extrapolate|zero|copy")
        ->transform(CLI::CheckedTransformer(kEndpoints, CLI::ignore_case));
    s->add_flag("--plot", cfg.plot, "also write <output>.plot.csv and <output>.svg");
    return s;
  };
  auto method_opts = [&](CLI::App* s) {
    s->add_option("--method", cfg.method, "first|second")
        ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
    s->add_option("--qprime", cfg.qprime, "q' estimate for --method second: forward|spline")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
  };
  auto reg_opts = [&](CLI::App* s) {
    opts[s]["alpha"] = s->add_option("--alpha", flags.alpha, "fixed regularization parameter")
                           ->check(CLI::PositiveNumber);
    opts[s]["delta"] = s->add_option("--delta", flags.delta, "discrepancy level ||A k - q/2||")
                           ->check(CLI::PositiveNumber);
  };
  auto smooth_opts = [&](CLI::App* s) {
    opts[s]["smooth-p"] = s->add_option("--smooth-p", flags.smooth_p, "smoothing parameter in [0, 1]")
                              ->check(CLI::Range(0.0, 1.0));
    opts[s]["resample-n"] = s->add_option("--resample-n", flags.resample_n, "uniform resampling size")
                                ->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  };

  sub("forward", "project a radial profile (r,k) to q (x,q)", Subcommand::Forward, true);

  auto* invert = sub("invert", "solve for k from (x,q)", Subcommand::Invert, true);
  method_opts(invert);
  opts[invert]["smooth-p"] = invert->add_option("--smooth-p", flags.smooth_p, "smoothing for --qprime spline")
                                 ->check(CLI::Range(0.0, 1.0));

  auto* regularize = sub("regularize", "Tikhonov solve with discrepancy-principle alpha",
                         Subcommand::Regularize, true);
  method_opts(regularize);
  reg_opts(regularize);

  sub("errors", "signed quadrature errors, refined solution and noise bounds", Subcommand::Errors,
      true);

  auto* smooth = sub("smooth", "cubic smoothing spline and resampling", Subcommand::Smooth, true);
  smooth_opts(smooth);

  auto* synthetic = sub("synthetic", "write an analytic phantom (x,q[,delta])",
                        Subcommand::Synthetic, false);
  synthetic->add_option("--phantom", cfg.phantom, "constant|parabolic|semicircle")
      ->transform(CLI::CheckedTransformer(kPhantoms, CLI::ignore_case));
  synthetic->add_option("--k0", cfg.k0, "profile amplitude (1/length)");
  synthetic->add_option("--R", cfg.radius, "radius")->check(CLI::PositiveNumber);
  synthetic->add_option("--n", cfg.n, "number of uniform nodes")->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  opts[synthetic]["mesh"] = synthetic->add_option("--mesh", flags.mesh, "custom nodes CSV (column x)");
  synthetic->add_option("--noise", cfg.noise, "relative Gaussian noise sigma")->check(CLI::NonNegativeNumber);
  synthetic->add_option("--seed", cfg.seed, "RNG seed");
  opts[synthetic]["truth"] = synthetic->add_option("--truth", flags.truth, "write exact (r,k) here");

  auto* tomo = sub("tomo", "full pipeline from intensities (x,I)", Subcommand::Tomo, true);
  method_opts(tomo);
  reg_opts(tomo);
  smooth_opts(tomo);
  tomo->add_option("--B", cfg.planck_reference, "Planck reference B(T0)")->check(CLI::PositiveNumber);
  tomo->add_option("--T0", cfg.source_temperature_c, "source temperature, deg C (metadata)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "abelinv: usage: " << e.what() << '\n';
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = kinds.at(chosen);
  cfg.input = flags.input;
  cfg.output = flags.output;
  if (!flags.diagnostics.empty()) cfg.diagnostics = flags.diagnostics;
  const auto& given = opts[chosen];
  auto was_set = [&](const char* name) {
    const auto it = given.find(name);
    return it != given.end() && it->second->count() > 0;
  };
  if (was_set("alpha")) cfg.alpha = flags.alpha;
  if (was_set("delta")) cfg.delta = flags.delta;
  if (was_set("smooth-p")) cfg.smooth_p = flags.smooth_p;
  if (was_set("resample-n")) cfg.resample_n = flags.resample_n;
  if (was_set("mesh")) cfg.mesh = flags.mesh;
  if (was_set("truth")) cfg.truth = flags.truth;

  return abelinv::run(cfg, std::cout, std::cerr);
}
