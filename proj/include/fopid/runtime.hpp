#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fopid/controller.hpp"

namespace fopid {

struct NonFiniteInput final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Direct-form difference equation u_n = sum_i b_i e_{n-i} - sum_{j>=1} a_j u_{n-j}
/// with ring-buffer histories sized len(b)-1 and len(a)-1.
class FilterState {
 public:
  FilterState() : FilterState(DiffEqCoeffs{{1.0}, {1.0}}) {}
  explicit FilterState(DiffEqCoeffs coeffs);
  explicit FilterState(const RationalTF& tf) : FilterState(to_difference_equation(tf)) {}

  double step(double e);
  void reset();
  const DiffEqCoeffs& coeffs() const { return coeffs_; }

 private:
  DiffEqCoeffs coeffs_;
  std::vector<double> x_hist_;  // e_{n-1}, e_{n-2}, ...
  std::vector<double> y_hist_;
  std::size_t x_pos_ = 0;  // slot that holds the most recent sample
  std::size_t y_pos_ = 0;
};

/// Emulated converter chain around the difference equations. Values outside
/// [v_min, v_max] saturate; codes span 2^bits - 1 steps with round-half-up.
struct QuantizationConfig {
  int adc_bits = 10;
  int dac_bits = 12;
  double v_min = 0.0;
  double v_max = 5.0;
  bool adc_enabled = true;
  bool dac_enabled = true;

  void validate() const {
    if (!(v_max > v_min)) throw std::invalid_argument("QuantizationConfig: v_max > v_min");
    if (adc_bits < 4 || adc_bits > 24 || dac_bits < 4 || dac_bits > 24)
      throw std::invalid_argument("QuantizationConfig: bits must lie in [4, 24]");
  }

  double quantize(double v, int bits) const;
};

/// Executes one controller: the proportional gain plus one FilterState per
/// dynamic branch. Single-owner mutable state.
class ControllerRuntime {
 public:
  explicit ControllerRuntime(const FocDigital& foc, QuantizationConfig quant = {});

  /// Ideal floating-point step.
  double step(double e);

  /// ADC -> step() -> DAC, with either converter side optional.
  double step_quantized(double e_volts);

  void reset();
  std::uint64_t sample_count() const { return samples_; }
  const QuantizationConfig& quantization() const { return quant_; }

 private:
  double k_gain_ = 0.0;
  std::vector<FilterState> branches_;
  QuantizationConfig quant_;
  std::uint64_t samples_ = 0;
};

}  // namespace fopid
