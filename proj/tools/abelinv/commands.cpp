#include "abelinv/commands.hpp"

#include <json.hpp>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "abel/error_analysis.hpp"
#include "abel/quadrature.hpp"
#include "abel/regularization.hpp"
#include "abel/smoothing.hpp"
#include "abelinv/plot.hpp"
#include "abelinv/table.hpp"

namespace abelinv {
namespace {

using abel::Errc;

class Report {
 public:
  void add(std::string key, double v) { entries_.emplace_back(std::move(key), format_double(v), v); }
  void add(std::string key, std::string v) { entries_.emplace_back(std::move(key), std::move(v), std::nullopt); }

  void print(std::ostream& out) const {
    for (const auto& [k, v, num] : entries_) out << k << '=' << v << '\n';
  }

  void write_json(const std::filesystem::path& path) const {
    nlohmann::ordered_json j;
    for (const auto& [k, v, num] : entries_) {
      if (num) {
        j[k] = *num;
      } else {
        j[k] = v;
      }
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) abel::fail(Errc::io_error, "cannot write " + path.string());
    f << j.dump(2) << '\n';
  }

 private:
  std::vector<std::tuple<std::string, std::string, std::optional<double>>> entries_;
};

struct Outputs {
  Table table;
  std::vector<Series> plot;
  Report report;
  std::string title;
};

void require_path(const std::filesystem::path& p, const char* what) {
  if (p.empty()) abel::fail(Errc::invalid_argument, std::string("missing ") + what + " path");
}

abel::Mesh mesh_from(const Table& t, std::string_view col) {
  return abel::custom_mesh(t.column(col));
}

abel::SourceSamples source_from(const Table& t) {
  abel::SourceSamples q{t.column("q"), std::nullopt};
  if (t.has("delta")) q.noise_levels = t.column("delta");
  return q;
}

abel::SolutionVector direct_solve(const RunConfig& cfg, const abel::Mesh& mesh,
                                  const abel::SourceSamples& q) {
  if (cfg.method == abel::Method::First) return abel::solve_first(mesh, q, cfg.endpoint);
  const auto qp = abel::estimate_qprime(mesh, q, cfg.qprime,
                                        cfg.smooth_p.value_or(abel::SmoothingSpline::default_p));
  return abel::solve_second(mesh, q, qp, cfg.endpoint);
}

std::vector<double> nodes_of(const abel::Mesh& m) { return {m.nodes().begin(), m.nodes().end()}; }

void add_alpha(Report& r, const abel::AlphaChoice& c) {
  r.add("alpha", c.alpha);
  r.add("log10_alpha", std::log10(c.alpha));
  r.add("residual", c.residual);
  r.add("iterations", static_cast<double>(c.iterations));
  r.add("alpha_status", std::string(abel::to_string(c.status)));
}

abel::RegularizationConfig reg_config(const RunConfig& cfg, const abel::SourceSamples& q) {
  abel::RegularizationConfig rc;
  rc.alpha_override = cfg.alpha;
  if (cfg.delta) {
    rc.delta = *cfg.delta;
  } else if (q.noise_levels) {
    rc.delta = abel::discrepancy_from_noise(*q.noise_levels);
  } else if (!cfg.alpha) {
    abel::fail(Errc::invalid_argument, "regularization needs --delta, --alpha or a delta column");
  }
  return rc;
}

Outputs cmd_forward(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, in.has("r") ? "r" : "x");
  const abel::SolutionVector k{in.column("k"), cfg.endpoint};
  const auto q = abel::forward_apply(mesh, k);
  Outputs o;
  o.table.add("x", nodes_of(mesh));
  o.table.add("q", q.values);
  o.plot.push_back({"q", nodes_of(mesh), q.values});
  o.title = "forward projection";
  o.report.add("n", static_cast<double>(mesh.size()));
  return o;
}

Outputs cmd_invert(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, "x");
  const auto q = source_from(in);
  const auto k = direct_solve(cfg, mesh, q);
  const auto a = abel::assemble_matrix(mesh, abel::KernelKind::SqrtKernel);
  Outputs o;
  o.table.add("r", nodes_of(mesh));
  o.table.add("k", k.values);
  o.plot.push_back({"k", nodes_of(mesh), k.values});
  o.title = "absorption coefficient";
  o.report.add("n", static_cast<double>(mesh.size()));
  o.report.add("method", cfg.method == abel::Method::First ? "first" : "second");
  o.report.add("residual", abel::residual_norm(a, std::span(k.values).first(mesh.size() - 1),
                                               abel::half_source(q)));
  return o;
}

Outputs cmd_regularize(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, "x");
  const auto q = source_from(in);
  const auto k = direct_solve(cfg, mesh, q);
  const auto a = abel::assemble_matrix(mesh, abel::KernelKind::SqrtKernel);
  const auto f = abel::half_source(q);
  const auto rc = reg_config(cfg, q);
  const auto choice = abel::choose_alpha(a, f, rc);
  const auto ka = abel::tikhonov_solution(a, q, choice.alpha, cfg.endpoint);

  Outputs o;
  o.table.add("r", nodes_of(mesh));
  o.table.add("k", k.values);
  o.table.add("k_alpha", ka.values);
  o.plot.push_back({"k", nodes_of(mesh), k.values});
  o.plot.push_back({"k_alpha", nodes_of(mesh), ka.values});
  o.title = "direct vs regularized";
  o.report.add("n", static_cast<double>(mesh.size()));
  if (!rc.alpha_override) o.report.add("delta", rc.delta);
  add_alpha(o.report, choice);
  if (!rc.alpha_override) o.report.add("residual_rel_gap", std::abs(choice.residual - rc.delta) / rc.delta);
  o.report.add("residual_direct", abel::residual_norm(a, std::span(k.values).first(mesh.size() - 1), f));
  return o;
}

Outputs cmd_errors(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, "x");
  const auto q = source_from(in);
  const auto k = abel::solve_first(mesh, q, cfg.endpoint);
  const auto est = abel::error_recursion(mesh, k);
  const std::vector<double> deltas = q.noise_levels.value_or(std::vector<double>(mesh.size(), 0.0));
  const auto bounds = abel::noisy_bounds(mesh, est, deltas);
  const auto refined = abel::refined_solution(k, est);

  Outputs o;
  o.table.add("r", nodes_of(mesh));
  o.table.add("k", k.values);
  o.table.add("dk", est.node_errors);
  o.table.add("bound", bounds);
  o.table.add("k_refined", refined.values);
  o.plot.push_back({"k", nodes_of(mesh), k.values});
  o.plot.push_back({"k_refined", nodes_of(mesh), refined.values});
  o.title = "signed error estimate";
  double worst = 0.0;
  for (const double d : est.node_errors) worst = std::max(worst, std::abs(d));
  o.report.add("n", static_cast<double>(mesh.size()));
  o.report.add("max_abs_dk", worst);
  o.report.add("max_bound", *std::max_element(bounds.begin(), bounds.end()));
  return o;
}

Outputs cmd_smooth(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, "x");
  std::size_t col = in.header.size();
  for (std::size_t c = 0; c < in.header.size(); ++c) {
    if (in.header[c] != "x") {
      col = c;
      break;
    }
  }
  if (col == in.header.size()) abel::fail(Errc::parse_error, "no value column besides x");
  const double p = cfg.smooth_p.value_or(abel::SmoothingSpline::default_p);
  const auto spline = abel::fit_spline(mesh.nodes(), in.columns[col], p);
  const auto target = cfg.resample_n ? abel::uniform_mesh(*cfg.resample_n, mesh.radius()) : mesh;
  const auto values = abel::resample(spline, target);

  Outputs o;
  o.table.add("x", nodes_of(target));
  o.table.add(in.header[col], values);
  o.plot.push_back({"measured", nodes_of(mesh), in.columns[col]});
  o.plot.push_back({"smoothed", nodes_of(target), values});
  o.title = "smoothing spline";
  o.report.add("smoothing_p", p);
  o.report.add("n_in", static_cast<double>(mesh.size()));
  o.report.add("n_out", static_cast<double>(target.size()));
  return o;
}

Outputs cmd_synthetic(const RunConfig& cfg) {
  const auto mesh = cfg.mesh ? mesh_from(read_table(*cfg.mesh), "x") : abel::uniform_mesh(cfg.n, cfg.radius);
  const abel::Phantom ph{cfg.phantom, cfg.k0, mesh.radius()};
  const auto exact = abel::sample_phantom(ph, mesh);
  Outputs o;
  o.table.add("x", nodes_of(mesh));
  if (cfg.noise > 0.0) {
    const auto noisy = abel::add_noise(exact.q, cfg.noise, cfg.seed);
    o.table.add("q", noisy.values);
    o.table.add("delta", *noisy.noise_levels);
    o.report.add("noise_norm", abel::noise_norm(exact.q, noisy));
    o.plot.push_back({"q_noisy", nodes_of(mesh), noisy.values});
  } else {
    o.table.add("q", exact.q.values);
    o.report.add("noise_norm", 0.0);
  }
  o.plot.push_back({"q", nodes_of(mesh), exact.q.values});
  o.title = "synthetic phantom";
  if (cfg.truth) {
    Table truth;
    truth.add("r", nodes_of(mesh));
    truth.add("k", exact.k.values);
    write_table(truth, *cfg.truth);
  }
  o.report.add("n", static_cast<double>(mesh.size()));
  o.report.add("seed", static_cast<double>(cfg.seed));
  return o;
}

Outputs cmd_tomo(const RunConfig& cfg) {
  const Table in = read_table(cfg.input);
  const auto mesh = mesh_from(in, "x");
  abel::TomographyInput inp{in.column("I"), cfg.planck_reference, cfg.source_temperature_c};
  abel::ReconstructOptions opt;
  opt.method = cfg.method;
  opt.endpoint_rule = cfg.endpoint;
  opt.qprime_scheme = cfg.qprime;
  if (cfg.smooth_p || cfg.resample_n) {
    opt.smooth = abel::SmoothingOptions{cfg.smooth_p.value_or(abel::SmoothingSpline::default_p),
                                        cfg.resample_n};
  }
  if (cfg.alpha || cfg.delta) {
    abel::RegularizationConfig rc;
    rc.alpha_override = cfg.alpha;
    rc.delta = cfg.delta.value_or(0.0);
    opt.regularize = rc;
  }
  const auto rec = abel::reconstruct(inp, mesh, opt);

  Outputs o;
  const auto r = nodes_of(rec.mesh);
  o.table.add("r", r);
  o.table.add("k", rec.k.values);
  o.plot.push_back({"k", r, rec.k.values});
  if (rec.k_alpha) {
    o.table.add("k_alpha", rec.k_alpha->values);
    o.plot.push_back({"k_alpha", r, rec.k_alpha->values});
  }
  if (rec.errors) {
    o.table.add("dk", rec.errors->node_errors);
    o.table.add("k_refined", abel::refined_solution(rec.k, *rec.errors).values);
  }
  o.title = "tomographic reconstruction";
  o.report.add("n", static_cast<double>(rec.mesh.size()));
  o.report.add("planck_reference", cfg.planck_reference);
  o.report.add("source_temperature_c", cfg.source_temperature_c);
  o.report.add("residual_direct", rec.residual);
  if (rec.alpha) {
    if (!cfg.alpha) o.report.add("delta", *cfg.delta);
    add_alpha(o.report, *rec.alpha);
  }
  return o;
}

std::filesystem::path with_suffix(const std::filesystem::path& p, const char* suffix) {
  return std::filesystem::path(p.string() + suffix);
}

}  // namespace

int exit_code(abel::Errc code) noexcept { return 3 + static_cast<int>(code); }

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand != Subcommand::Synthetic) require_path(cfg.input, "input");
    require_path(cfg.output, "output");
    Outputs o;
    switch (cfg.subcommand) {
      case Subcommand::Forward: o = cmd_forward(cfg); break;
      case Subcommand::Invert: o = cmd_invert(cfg); break;
      case Subcommand::Regularize: o = cmd_regularize(cfg); break;
      case Subcommand::Errors: o = cmd_errors(cfg); break;
      case Subcommand::Smooth: o = cmd_smooth(cfg); break;
      case Subcommand::Synthetic: o = cmd_synthetic(cfg); break;
      case Subcommand::Tomo: o = cmd_tomo(cfg); break;
    }
    write_table(o.table, cfg.output);
    if (cfg.plot) {
      emit_plot_data(o.plot, with_suffix(cfg.output, ".plot.csv"));
      write_svg(o.plot, with_suffix(cfg.output, ".svg"), o.title);
    }
    o.report.print(out);
    if (cfg.diagnostics) o.report.write_json(*cfg.diagnostics);
    return 0;
  } catch (const abel::Error& e) {
    err << "abelinv: " << abel::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "abelinv: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace abelinv
