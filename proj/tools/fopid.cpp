// Command-line front end for the fopid library: design, simulate, analyze and
// export digital fractional-order PI^lambda D^delta controllers.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "fopid/cli.hpp"

namespace {

struct SharedFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> gf;
  std::optional<double> T;
  std::optional<int> pq;
  std::optional<double> K, Ti, Td, lambda, delta;
  std::optional<std::string> out;
};

void add_shared(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--config", f.config_path, "configuration file (key = value lines)");
  cmd->add_option("--gf", f.gf, "generating function: euler|tustin|al-alaoui");
  cmd->add_option("--T", f.T, "sample period [s]");
  cmd->add_option("--pq", f.pq, "approximation degrees p = q");
  cmd->add_option("--K", f.K, "proportional gain");
  cmd->add_option("--Ti", f.Ti, "integration constant");
  cmd->add_option("--Td", f.Td, "derivative constant");
  cmd->add_option("--lambda", f.lambda, "integral order, in (0, 1)");
  cmd->add_option("--delta", f.delta, "derivative order, in (0, 1)");
  cmd->add_option("--out", f.out, "output path");
}

// Loads the config file (when given) and applies flag overrides. Returns 0 on
// success or the process exit code.
int build_config(const SharedFlags& f, fopid::DesignConfig& cfg, const CLI::App& app) {
  if (f.config_path) {
    try {
      cfg = fopid::DesignConfig::from_file(*f.config_path);
    } catch (const fopid::FileOpenError& ex) {
      std::cerr << "error: " << ex.what() << "\n\n" << app.help();
      return fopid::cli::kExitUsage;
    } catch (const std::invalid_argument& ex) {
      std::cerr << "error: " << ex.what() << "\n";
      return fopid::cli::kExitInvalidParams;
    }
  }
  try {
    if (f.gf) cfg.params.gf.kind = fopid::gf_kind_from_string(*f.gf);
    if (f.T) cfg.params.gf = fopid::GeneratingFunction(cfg.params.gf.kind, *f.T);
    if (f.pq) cfg.params.p = cfg.params.q = *f.pq;
    if (f.K) cfg.params.K = *f.K;
    if (f.Ti) cfg.params.Ti = *f.Ti;
    if (f.Td) cfg.params.Td = *f.Td;
    if (f.lambda) cfg.params.lambda = *f.lambda;
    if (f.delta) cfg.params.delta = *f.delta;
    if (f.out) cfg.out = *f.out;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return fopid::cli::kExitInvalidParams;
  }
  return fopid::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital fractional-order PI^lambda D^delta controller toolkit"};
  app.require_subcommand(1);

  auto* design = app.add_subcommand("design", "design a controller and write its coefficient table");
  SharedFlags fdesign;
  add_shared(design, fdesign);

  auto* simulate = app.add_subcommand("simulate", "run an open-loop simulation and write a CSV");
  SharedFlags fsim;
  add_shared(simulate, fsim);
  std::string signal = "step", oracle, signal_file;
  double freq = 100.0, amp = 1.0, duration = 0.1;
  bool quantized = false, plot_data = false;
  simulate->add_option("--signal", signal, "step|square|sine|file")
      ->check(CLI::IsMember({"step", "square", "sine", "file"}));
  simulate->add_option("--freq", freq, "signal frequency [Hz]");
  simulate->add_option("--amp", amp, "signal amplitude [V]");
  simulate->add_option("--duration", duration, "signal duration [s]");
  simulate->add_option("--signal-file", signal_file, "sample file for --signal file");
  simulate->add_flag("--quantized", quantized, "emulate the ADC/DAC signal chain");
  simulate->add_option("--oracle", oracle, "append a reference column (gl)")
      ->check(CLI::IsMember({"gl"}));
  simulate->add_flag("--plot-data", plot_data, "prepend a provenance comment header");

  auto* analyze = app.add_subcommand("analyze", "report poles/zeros, stability and frequency response");
  SharedFlags fan;
  add_shared(analyze, fan);
  fopid::cli::AnalyzeOptions aopts;
  analyze->add_option("--fmin", aopts.fmin, "grid start [Hz] (default fs/10000)");
  analyze->add_option("--fmax", aopts.fmax, "grid end [Hz] (default Nyquist)");
  analyze->add_option("--points", aopts.points, "grid point count");

  auto* exportc = app.add_subcommand("export", "write controller coefficients in a chosen format");
  SharedFlags fexp;
  add_shared(exportc, fexp);
  std::string format = "flat-table";
  exportc->add_option("--format", format, "flat-table|embedded-header")
      ->check(CLI::IsMember({"flat-table", "embedded-header"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fopid::cli::kExitUsage;
  }

  fopid::DesignConfig cfg;
  if (design->parsed()) {
    if (int rc = build_config(fdesign, cfg, app)) return rc;
    return fopid::cli::cmd_design(cfg, std::cout, std::cerr);
  }
  if (simulate->parsed()) {
    if (int rc = build_config(fsim, cfg, app)) return rc;
    fopid::cli::SimOptions opts;
    opts.shape = fopid::signal_shape_from_string(signal);
    opts.frequency = freq;
    opts.amplitude = amp;
    opts.duration = duration;
    opts.signal_file = signal_file;
    opts.quantized = quantized;
    opts.gl_oracle = oracle == "gl";
    opts.plot_header = plot_data;
    if (opts.shape == fopid::SignalShape::Custom && signal_file.empty()) {
      std::cerr << "error: --signal file requires --signal-file PATH\n";
      return fopid::cli::kExitInvalidParams;
    }
    return fopid::cli::cmd_simulate(cfg, opts, std::cout, std::cerr);
  }
  if (analyze->parsed()) {
    if (int rc = build_config(fan, cfg, app)) return rc;
    return fopid::cli::cmd_analyze(cfg, aopts, std::cout, std::cerr);
  }
  if (exportc->parsed()) {
    if (int rc = build_config(fexp, cfg, app)) return rc;
    const auto fmt = format == "flat-table" ? fopid::ExportFormat::FlatTable
                                            : fopid::ExportFormat::EmbeddedHeader;
    return fopid::cli::cmd_export(cfg, fmt, std::cout, std::cerr);
  }
  std::cerr << app.help();
  return fopid::cli::kExitUsage;
}
