#include "fopid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fopid {

SignalShape signal_shape_from_string(const std::string& s) {
  if (s == "step") return SignalShape::Step;
  if (s == "square") return SignalShape::Square;
  if (s == "sine") return SignalShape::Sine;
  if (s == "file" || s == "custom") return SignalShape::Custom;
  throw std::invalid_argument("unknown signal shape: " + s);
}

std::vector<double> generate_signal(const SignalSpec& spec) {
  if (spec.shape == SignalShape::Custom) return spec.samples;
  if (!(spec.T > 0.0)) throw std::invalid_argument("SignalSpec: T must be positive");
  if (spec.duration < spec.T)
    throw std::invalid_argument("SignalSpec: duration must cover at least one sample");
  if ((spec.shape == SignalShape::Square || spec.shape == SignalShape::Sine) &&
      !(spec.frequency < 0.5 / spec.T))
    throw NyquistViolation("SignalSpec: frequency must be below 1/(2T)");

  const std::size_t n = static_cast<std::size_t>(std::llround(spec.duration / spec.T));
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * spec.T;
    switch (spec.shape) {
      case SignalShape::Step:
        out[k] = spec.amplitude;
        break;
      case SignalShape::Square: {
        const double phase = t * spec.frequency - std::floor(t * spec.frequency);
        out[k] = phase < 0.5 ? spec.amplitude : -spec.amplitude;
        break;
      }
      case SignalShape::Sine:
        out[k] = spec.amplitude * std::sin(2.0 * std::numbers::pi * spec.frequency * t);
        break;
      case SignalShape::Custom:
        break;
    }
  }
  return out;
}

std::string SimResult::to_csv(bool plot_header) const {
  std::ostringstream os;
  if (plot_header && !provenance.empty()) {
    std::istringstream prov(provenance);
    std::string line;
    while (std::getline(prov, line)) os << "# " << line << "\n";
  }
  os << "t,ref,err,out";
  if (!plant_output.empty()) os << ",y";
  if (!oracle.empty()) os << ",gl";
  os << "\n";
  for (std::size_t k = 0; k < time.size(); ++k) {
    os << format_g17(time[k]) << ',' << format_g17(reference[k]) << ','
       << format_g17(error[k]) << ',' << format_g17(output[k]);
    if (!plant_output.empty()) os << ',' << format_g17(plant_output[k]);
    if (!oracle.empty()) os << ',' << format_g17(oracle[k]);
    os << "\n";
  }
  return os.str();
}

SimResult run_open_loop(const FocDigital& foc, const std::vector<double>& signal,
                        const std::optional<QuantizationConfig>& quant) {
  ControllerRuntime rt(foc, quant.value_or(QuantizationConfig{}));
  SimResult res;
  res.T = foc.params.gf.T;
  const std::size_t n = signal.size();
  res.time.reserve(n);
  res.reference = signal;
  res.error = signal;
  res.output.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    res.time.push_back(static_cast<double>(k) * res.T);
    res.output.push_back(quant ? rt.step_quantized(signal[k]) : rt.step(signal[k]));
  }
  return res;
}

SimResult run_closed_loop(const FocDigital& foc, const Plant& plant,
                          const std::vector<double>& reference) {
  if (!stability_report(plant.tf).stable)
    throw std::invalid_argument("run_closed_loop: plant must be stable");
  ControllerRuntime rt(foc);
  FilterState plant_filter(plant.tf);

  SimResult res;
  res.T = foc.params.gf.T;
  const std::size_t n = reference.size();
  double y_prev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = reference[k] - y_prev;
    const double u = rt.step(e);
    const double y = plant_filter.step(u);
    if (std::abs(y) > 1e6)
      throw DivergenceDetected("run_closed_loop: plant output exceeded 1e6");
    res.time.push_back(static_cast<double>(k) * res.T);
    res.reference.push_back(reference[k]);
    res.error.push_back(e);
    res.output.push_back(u);
    res.plant_output.push_back(y);
    y_prev = y;
  }
  return res;
}

ErrorMetrics metrics(const std::vector<double>& a, const std::vector<double>& b,
                     std::size_t skip) {
  if (a.size() != b.size()) throw LengthMismatch("metrics: sequence lengths differ");
  if (skip >= a.size()) throw std::invalid_argument("metrics: skip must be below length");

  ErrorMetrics m;
  double sum_sq = 0.0, ref_sq = 0.0;
  const std::size_t n = a.size() - skip;
  for (std::size_t k = skip; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum_sq += d * d;
    ref_sq += a[k] * a[k];
    m.max_abs = std::max(m.max_abs, std::abs(d));
  }
  m.rms_abs = std::sqrt(sum_sq / static_cast<double>(n));
  const double ref_rms = std::sqrt(ref_sq / static_cast<double>(n));
  if (ref_rms > 0.0)
    m.rms_rel = m.rms_abs / ref_rms;
  else
    m.rms_rel = m.rms_abs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return m;
}

}  // namespace fopid
