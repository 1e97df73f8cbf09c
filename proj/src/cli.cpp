#include "fopid/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fopid/gl.hpp"

namespace fopid::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FileOpenError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const NyquistViolation& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNyquist;
  } catch (const PivotBreakdown& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDiscretization;
  } catch (const InsufficientDepth& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDiscretization;
  } catch (const InvalidOrder& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDiscretization;
  } catch (const std::invalid_argument& ex) {  // InvalidParams, ConfigError, ...
    err << "error: " << ex.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitDiscretization;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileOpenError("cannot open output file: " + path);
  out << content;
  if (!out) throw FileOpenError("write failed: " + path);
}

std::string config_provenance(const DesignConfig& config) {
  std::ostringstream os;
  const FocParams& p = config.params;
  os << "gf = " << to_string(p.gf.kind) << "\n";
  os << "T = " << format_g17(p.gf.T) << "\n";
  os << "pq = " << p.p << "\n";
  os << "K = " << format_g17(p.K) << "\n";
  os << "Ti = " << format_g17(p.Ti) << "\n";
  os << "Td = " << format_g17(p.Td) << "\n";
  os << "lambda = " << format_g17(p.lambda) << "\n";
  os << "delta = " << format_g17(p.delta) << "\n";
  for (const auto& w : config.warnings()) os << "warning: " << w << "\n";
  return os.str();
}

void print_report_line(std::ostream& os, const std::string& label, const StabilityReport& rep) {
  os << label << ": stable=" << (rep.stable ? "yes" : "no")
     << " minimum_phase=" << (rep.minimum_phase ? "yes" : "no")
     << " margin=" << format_g17(rep.margin)
     << " poles=" << rep.poles.size() << " zeros=" << rep.zeros.size() << "\n";
}

std::vector<double> load_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileOpenError("cannot open signal file: " + path);
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    out.push_back(std::stod(line));
  }
  if (out.empty()) throw std::invalid_argument("signal file has no samples: " + path);
  return out;
}

}  // namespace

int cmd_design(const DesignConfig& config, std::ostream& status, std::ostream& err) {
  return guarded(err, [&]() {
    const FocDigital foc = design_foc(config.params);
    const std::string path = config.out.empty() ? "fopid_coeffs.txt" : config.out;
    write_file(path, export_coeffs(foc, ExportFormat::FlatTable, config.warnings()));

    for (const auto& [name, branch] :
         {std::pair{"integral", &foc.integral}, std::pair{"derivative", &foc.derivative}}) {
      if (*branch) print_report_line(status, std::string("branch ") + name,
                                     stability_report(**branch));
    }
    print_report_line(status, "combined", stability_report(combine_tf(foc)));
    status << "wrote " << path << "\n";
    return kExitOk;
  });
}

int cmd_export(const DesignConfig& config, ExportFormat format, std::ostream& status,
               std::ostream& err) {
  return guarded(err, [&]() {
    const FocDigital foc = design_foc(config.params);
    const std::string path = config.out.empty()
        ? (format == ExportFormat::FlatTable ? "fopid_coeffs.txt" : "fopid_coeffs.h")
        : config.out;
    write_file(path, export_coeffs(foc, format, config.warnings()));
    status << "wrote " << path << "\n";
    return kExitOk;
  });
}

int cmd_simulate(const DesignConfig& config, const SimOptions& opts, std::ostream& status,
                 std::ostream& err) {
  return guarded(err, [&]() {
    const FocDigital foc = design_foc(config.params);

    SignalSpec spec;
    spec.shape = opts.shape;
    spec.amplitude = opts.amplitude;
    spec.frequency = opts.frequency;
    spec.duration = opts.duration;
    spec.T = config.params.gf.T;
    if (spec.shape == SignalShape::Custom) spec.samples = load_signal_file(opts.signal_file);
    const std::vector<double> signal = generate_signal(spec);

    std::optional<QuantizationConfig> quant;
    if (opts.quantized) quant = config.quant;
    SimResult res = run_open_loop(foc, signal, quant);

    std::ostringstream prov;
    prov << "fopid simulate\n" << config_provenance(config);
    prov << "signal = " << (opts.shape == SignalShape::Step     ? "step"
                            : opts.shape == SignalShape::Square ? "square"
                            : opts.shape == SignalShape::Sine   ? "sine"
                                                                : "file")
         << "\n";
    prov << "freq = " << format_g17(opts.frequency) << "\n";
    prov << "amp = " << format_g17(opts.amplitude) << "\n";
    prov << "duration = " << format_g17(opts.duration) << "\n";
    prov << "quantized = " << (opts.quantized ? "on" : "off") << "\n";
    res.provenance = prov.str();

    const std::string path = config.out.empty() ? "fopid_sim.csv" : config.out;

    if (opts.gl_oracle) {
      const FocParams& p = config.params;
      std::vector<double> ref(signal.size(), 0.0);
      for (std::size_t k = 0; k < signal.size(); ++k) ref[k] = p.K * signal[k];
      if (p.Ti != 0.0) {
        const auto gi = gl_apply(signal, GlSpec(-p.lambda, p.gf.T));
        for (std::size_t k = 0; k < ref.size(); ++k) ref[k] += p.Ti * gi[k];
      }
      if (p.Td != 0.0) {
        const auto gd = gl_apply(signal, GlSpec(p.delta, p.gf.T));
        for (std::size_t k = 0; k < ref.size(); ++k) ref[k] += p.Td * gd[k];
      }
      res.oracle = ref;

      const std::size_t skip = std::min<std::size_t>(5, signal.size() - 1);
      const ErrorMetrics m = metrics(res.oracle, res.output, skip);
      std::ostringstream rep;
      rep << "# fopid simulate: GL reference comparison (skip = " << skip << ")\n";
      rep << "rms_abs = " << format_g17(m.rms_abs) << "\n";
      rep << "rms_rel = " << format_g17(m.rms_rel) << "\n";
      rep << "max_abs = " << format_g17(m.max_abs) << "\n";
      write_file(path + ".report.txt", rep.str());
    }

    write_file(path, res.to_csv(opts.plot_header));
    status << "wrote " << path << " (" << signal.size() << " samples)\n";
    return kExitOk;
  });
}

int cmd_analyze(const DesignConfig& config, const AnalyzeOptions& opts, std::ostream& status,
                std::ostream& err) {
  return guarded(err, [&]() {
    const FocDigital foc = design_foc(config.params);
    const RationalTF combined = combine_tf(foc);

    const double fs = 1.0 / config.params.gf.T;
    const double fmax = opts.fmax > 0.0 ? opts.fmax : 0.5 * fs;
    const double fmin = opts.fmin > 0.0 ? opts.fmin : fs * 1e-4;
    if (opts.points < 1) throw std::invalid_argument("analyze: points must be >= 1");
    if (!(fmin <= fmax)) throw std::invalid_argument("analyze: fmin must not exceed fmax");

    std::ostringstream os;
    os << "# fopid analyze\n" << config_provenance(config);
    const StabilityReport rep = stability_report(combined);
    print_report_line(os, "combined", rep);
    os << "poles =";
    for (const auto& z : rep.poles)
      os << ' ' << format_g17(z.real()) << (z.imag() < 0 ? "-" : "+")
         << format_g17(std::abs(z.imag())) << 'j';
    os << "\n";
    os << "zeros =";
    for (const auto& z : rep.zeros)
      os << ' ' << format_g17(z.real()) << (z.imag() < 0 ? "-" : "+")
         << format_g17(std::abs(z.imag())) << 'j';
    os << "\n";
    os << "f_hz,mag,mag_db,phase_deg\n";

    char buf[160];
    for (int i = 0; i < opts.points; ++i) {
      const double f =
          opts.points == 1
              ? fmax
              : fmin * std::pow(fmax / fmin, static_cast<double>(i) / (opts.points - 1));
      const double w = 2.0 * std::numbers::pi * f * config.params.gf.T;
      const std::complex<double> z = std::polar(1.0, w);
      const std::complex<double> h = rtf_eval(combined, z);
      const double mag = std::abs(h);
      std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", f, mag, 20.0 * std::log10(mag),
                    std::arg(h) * 180.0 / std::numbers::pi);
      os << buf;
    }

    if (config.out.empty())
      status << os.str();
    else {
      write_file(config.out, os.str());
      status << "wrote " << config.out << "\n";
    }
    return kExitOk;
  });
}

}  // namespace fopid::cli
