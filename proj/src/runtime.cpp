#include "fopid/runtime.hpp"

#include <algorithm>
#include <cmath>

namespace fopid {

FilterState::FilterState(DiffEqCoeffs coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.b.empty() || coeffs_.a.empty() || coeffs_.a[0] != 1.0)
    throw std::invalid_argument("FilterState: expects a[0] == 1 and nonempty coefficients");
  x_hist_.assign(coeffs_.b.size() > 1 ? coeffs_.b.size() - 1 : 0, 0.0);
  y_hist_.assign(coeffs_.a.size() > 1 ? coeffs_.a.size() - 1 : 0, 0.0);
}

double FilterState::step(double e) {
  const auto& b = coeffs_.b;
  const auto& a = coeffs_.a;
  double acc = b[0] * e;
  for (std::size_t i = 1; i < b.size(); ++i)
    acc += b[i] * x_hist_[(x_pos_ + i - 1) % x_hist_.size()];
  for (std::size_t j = 1; j < a.size(); ++j)
    acc -= a[j] * y_hist_[(y_pos_ + j - 1) % y_hist_.size()];

  if (!x_hist_.empty()) {
    x_pos_ = (x_pos_ + x_hist_.size() - 1) % x_hist_.size();
    x_hist_[x_pos_] = e;
  }
  if (!y_hist_.empty()) {
    y_pos_ = (y_pos_ + y_hist_.size() - 1) % y_hist_.size();
    y_hist_[y_pos_] = acc;
  }
  return acc;
}

void FilterState::reset() {
  std::fill(x_hist_.begin(), x_hist_.end(), 0.0);
  std::fill(y_hist_.begin(), y_hist_.end(), 0.0);
  x_pos_ = y_pos_ = 0;
}

double QuantizationConfig::quantize(double v, int bits) const {
  const double lo = v_min, hi = v_max;
  v = std::clamp(v, lo, hi);
  const double levels = static_cast<double>((1u << bits) - 1u);
  // round-half-up; the argument is nonnegative after clamping
  const double code = std::floor((v - lo) / (hi - lo) * levels + 0.5);
  return lo + code * (hi - lo) / levels;
}

ControllerRuntime::ControllerRuntime(const FocDigital& foc, QuantizationConfig quant)
    : quant_(quant) {
  quant_.validate();
  k_gain_ = foc.proportional ? foc.params.K : 0.0;
  for (const auto* branch : {&foc.integral, &foc.derivative})
    if (*branch) branches_.emplace_back(**branch);
}

double ControllerRuntime::step(double e) {
  if (!std::isfinite(e)) throw NonFiniteInput("ControllerRuntime::step: non-finite input");
  double u = k_gain_ * e;
  for (auto& f : branches_) u += f.step(e);
  ++samples_;
  return u;
}

double ControllerRuntime::step_quantized(double e_volts) {
  if (!std::isfinite(e_volts))
    throw NonFiniteInput("ControllerRuntime::step_quantized: non-finite input");
  const double e = quant_.adc_enabled ? quant_.quantize(e_volts, quant_.adc_bits) : e_volts;
  const double u = step(e);
  return quant_.dac_enabled ? quant_.quantize(u, quant_.dac_bits) : u;
}

void ControllerRuntime::reset() {
  for (auto& f : branches_) f.reset();
  samples_ = 0;
}

}  // namespace fopid
