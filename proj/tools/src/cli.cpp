#include "nusamp_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "nusamp/bounds.hpp"
#include "nusamp/errors.hpp"
#include "nusamp/genfun.hpp"
#include "nusamp/harness.hpp"
#include "nusamp/oracle.hpp"
#include "nusamp/parallel.hpp"
#include "nusamp/reconstruction.hpp"

namespace nusamp::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kResidueGate = 1e-8;
constexpr double kLaplaceLow = 0.95;
constexpr double kLaplaceHigh = 1.05;

struct CommonOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<unsigned> threads;
};

std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

fs::path output_path(const std::string& configured, const std::string& out_dir) {
  if (out_dir.empty()) return configured;
  return fs::path(out_dir) / fs::path(configured).filename();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw ConfigError("failed writing " + path.string());
}

int cmd_sweep(const CommonOptions& o) {
  const ExperimentConfig config = load_config(o.config_path);
  const unsigned threads = resolve_threads(o.threads);
  const SweepReport report = sweep(config, threads);

  const fs::path csv = output_path(config.csv_path, o.out_dir);
  const fs::path json = output_path(config.json_path, o.out_dir);
  write_file(csv, sweep_csv(report));
  write_file(json, sweep_json(report, config));

  std::printf("rows=%zu fit_points=%zu slope=%.6f predicted=%.6f rel_dev=%.4f\n", report.rows.size(),
              report.fit_points, report.fitted_slope, report.predicted_slope, report.slope_rel_dev);
  if (report.free_fit) std::printf("free_exponent=%.4f\n", report.free_fit->exponent);
  std::printf("monotone=%s interpolation_residual=%.3e\n", report.monotone ? "yes" : "no",
              report.interpolation_residual);
  if (report.dominance_checked) std::printf("dominance_violations=%zu\n", report.dominance_violations);
  std::printf("wrote %s and %s\n", csv.string().c_str(), json.string().c_str());
  return report.passed() ? kExitOk : kExitCheckFailed;
}

struct Setup {
  ExperimentConfig config;
  SamplingSequence seq;
  Signal f;
  ReconstructionPlan plan;
  RegularizerSpec reg;
};

Setup make_setup(const std::string& config_path, std::int64_t N) {
  ExperimentConfig config = load_config(config_path);
  SamplingSequence seq = build_sequence(config.sequence);
  Signal f = build_signal(config.signal);
  const ProductWindow window = config.M_prod ? ProductWindow{*config.M_prod}
                                             : default_window(config.regularizer.kind, N);
  ReconstructionPlan p = plan(seq, N, window);
  RegularizerSpec reg = make_regularizer(config.regularizer.kind, config.regularizer.m, f.sigma(), p);
  return {std::move(config), std::move(seq), std::move(f), p, reg};
}

int cmd_reconstruct(const CommonOptions& o, std::int64_t N, const std::string& z_text, bool recenter) {
  const std::complex<double> z = parse_complex(z_text);
  if (recenter) {
    if (z.imag() != 0.0) throw ConfigError("--recenter needs a real evaluation point");
    const ExperimentConfig config = load_config(o.config_path);
    const SamplingSequence seq = build_sequence(config.sequence);
    const Signal f = build_signal(config.signal);
    const std::complex<double> g =
        reconstruct_recentered(f, seq, N, config.regularizer.kind, config.regularizer.m, z.real());
    std::printf("f(z)     = %s\nG_N f(z) = %s\nerror    = %.6e\n", format_complex(f(z)).c_str(),
                format_complex(g).c_str(), std::abs(f(z) - g));
    return kExitOk;
  }
  const Setup s = make_setup(o.config_path, N);
  const std::complex<double> g = reconstruct(s.f, s.seq, s.plan, s.reg, z);
  std::printf("N_star   = %.17g\nM_prod   = %lld\n", s.plan.N_star, static_cast<long long>(s.plan.window.M_prod));
  std::printf("f(z)     = %s\nG_N f(z) = %s\nerror    = %.6e\n", format_complex(s.f(z)).c_str(),
              format_complex(g).c_str(), std::abs(s.f(z) - g));
  return kExitOk;
}

int cmd_generate_sequence(const CommonOptions& o, std::int64_t M, const std::string& file) {
  if (M < 1) throw ConfigError("--M must be positive");
  const ExperimentConfig config = load_config(o.config_path);
  const SamplingSequence seq = build_sequence(config.sequence);
  const ValidationReport check = validate(seq, M);

  std::string csv = "n,lambda\n";
  char buf[64];
  for (std::int64_t n = -M; n <= M; ++n) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g\n", static_cast<long long>(n), seq[n]);
    csv += buf;
  }
  if (file.empty() && o.out_dir.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    const fs::path path = output_path(file.empty() ? "sequence.csv" : file, o.out_dir);
    write_file(path, csv);
    std::printf("wrote %s\n", path.string().c_str());
  }
  std::fprintf(stderr, "min_gap=%.6f symmetry_budget=%.3e density_ratio=%.6f valid=%s\n", check.min_gap,
               check.symmetry_budget, check.density_ratio, check.ok() ? "yes" : "no");
  return check.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_residue(const CommonOptions& o, std::int64_t N, const std::string& z_text, double tol) {
  const std::complex<double> z = parse_complex(z_text);
  const Setup s = make_setup(o.config_path, N);
  const std::complex<double> direct = s.f(z) - reconstruct(s.f, s.seq, s.plan, s.reg, z);
  const ContourSpec contour = default_contour(s.plan, s.reg, z, tol);
  const SideIntegrals sides = side_decomposition(s.f, s.seq, s.plan, s.reg, z, contour);
  const std::complex<double> via_contour = sides.error();
  const double deviation = std::abs(direct - via_contour) / std::max(std::abs(direct), 1e-12);

  std::printf("direct_error  = %s\ncontour_error = %s\n", format_complex(direct).c_str(),
              format_complex(via_contour).c_str());
  std::printf("relative_deviation = %.3e (panels %zu)\n", deviation, sides.panels);
  return deviation <= kResidueGate ? kExitOk : kExitCheckFailed;
}

int cmd_verify_laplace(int m, double N) {
  const LaplaceCheck c = laplace_asymptotic_check(m, N);
  std::printf("integral=%.12e asymptotic=%.12e ratio=%.9f\n", c.integral, c.asymptotic, c.ratio);
  return (c.ratio >= kLaplaceLow && c.ratio <= kLaplaceHigh) ? kExitOk : kExitCheckFailed;
}

int cmd_bound(const CommonOptions& o, std::int64_t N, const std::string& z_text, double y) {
  const std::complex<double> z = parse_complex(z_text);
  const Setup s = make_setup(o.config_path, N);
  const std::complex<double> g = reconstruct(s.f, s.seq, s.plan, s.reg, z);
  const double err = std::abs(s.f(z) - g);

  if (s.reg.kind == RegularizerKind::HyperGaussian) {
    const ValidationReport check = validate(s.seq, N + 2);
    const double shape = hyper_rate_bound(s.plan, s.reg.m, s.f.sigma(), check);
    std::printf("rate_shape=%.6e error=%.6e (no explicit constant)\n", shape, err);
    return kExitOk;
  }
  const GeneratingFunction gf(s.seq, s.plan.window);
  const ValidationReport check = validate(s.seq, N + 2);
  const double floor = gf.floor(contour_rectangle(s.plan, y, s.plan.N_star), check.min_gap / 20.0,
                                resolve_threads(o.threads));
  const BoundReport b = gaussian_bound(s.f, gf, s.plan, z, floor);
  std::printf("C_N(y)=%.6e floor=%.6e |phi(z)|=%.6e exp_term=%.6e\n", b.components.C_N_y, b.components.phi_floor,
              b.components.phi_at_z, b.components.exp_term);
  std::printf("bound=%.6e error=%.6e\n", b.bound_value, err);
  return b.bound_value >= err ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App* sub, CommonOptions& o, bool needs_config) {
  auto* opt = sub->add_option("--config", o.config_path, "JSON experiment config");
  if (needs_config) opt->required()->check(CLI::ExistingFile);
  sub->add_option("--out", o.out_dir, "output directory");
  sub->add_option("--threads", o.threads, "worker threads (default: NUSAMP_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto to_double = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad complex literal: " + text);
    return v;
  };

  if (s.back() != 'i' && s.back() != 'j') return {to_double(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_double(s)};
  return {to_double(s.substr(0, split)), to_double(s.substr(split))};
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Regularized sampling-series reconstruction experiments"};
  app.require_subcommand(1);

  CommonOptions common;
  std::int64_t N = 3;
  std::int64_t M = 64;
  std::string z_text = "0.3";
  std::string file;
  double tol = 1e-10;
  double y = 0.0;
  bool recenter = false;
  int m = 2;
  double laplace_N = 200.0;

  auto* sweep_cmd = app.add_subcommand("sweep", "convergence sweep over N; writes CSV and JSON");
  add_common(sweep_cmd, common, true);

  auto* rec_cmd = app.add_subcommand("reconstruct", "evaluate the regularized series at one point");
  add_common(rec_cmd, common, true);
  rec_cmd->add_option("--N", N, "sample window half-width")->check(CLI::PositiveNumber);
  rec_cmd->add_option("--z", z_text, "evaluation point, e.g. 0.3+0.2i");
  rec_cmd->add_flag("--recenter", recenter, "re-index the nodes around the nearest one first");

  auto* seq_cmd = app.add_subcommand("generate-sequence", "dump lambda_n for |n| <= M as CSV");
  add_common(seq_cmd, common, true);
  seq_cmd->add_option("--M", M, "table half-width");
  seq_cmd->add_option("--file", file, "CSV file name (default: stdout)");

  auto* res_cmd = app.add_subcommand("verify-residue", "compare the direct error with its contour integral");
  add_common(res_cmd, common, true);
  res_cmd->add_option("--N", N, "sample window half-width")->check(CLI::PositiveNumber);
  res_cmd->add_option("--z", z_text, "evaluation point");
  res_cmd->add_option("--tol", tol, "relative quadrature tolerance per side")->check(CLI::PositiveNumber);

  auto* lap_cmd = app.add_subcommand("verify-laplace", "check the Laplace asymptotic of int e^{N h_m}");
  lap_cmd->add_option("--m", m, "hyper-Gaussian order")->check(CLI::Range(2, kMaxHyperOrder));
  lap_cmd->add_option("--N", laplace_N, "large parameter")->check(CLI::PositiveNumber);

  auto* bound_cmd = app.add_subcommand("bound", "explicit error bound at one point");
  add_common(bound_cmd, common, true);
  bound_cmd->add_option("--N", N, "sample window half-width")->check(CLI::PositiveNumber);
  bound_cmd->add_option("--z", z_text, "evaluation point");
  bound_cmd->add_option("--y", y, "contour centre height");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) return cmd_sweep(common);
    if (*rec_cmd) return cmd_reconstruct(common, N, z_text, recenter);
    if (*seq_cmd) return cmd_generate_sequence(common, M, file);
    if (*res_cmd) return cmd_verify_residue(common, N, z_text, tol);
    if (*lap_cmd) return cmd_verify_laplace(m, laplace_N);
    if (*bound_cmd) return cmd_bound(common, N, z_text, y);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitUsage;
  } catch (const FitError& e) {
    std::fprintf(stderr, "fit failed: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace nusamp::cli
