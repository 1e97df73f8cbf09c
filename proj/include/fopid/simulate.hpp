#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fopid/controller.hpp"
#include "fopid/runtime.hpp"

namespace fopid {

struct NyquistViolation final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivergenceDetected final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class SignalShape { Step, Square, Sine, Custom };

SignalShape signal_shape_from_string(const std::string& s);

struct SignalSpec {
  SignalShape shape = SignalShape::Step;
  double amplitude = 1.0;   // volts
  double frequency = 0.0;   // Hz, square/sine only
  double duration = 1.0;    // seconds
  double T = 0.001;         // sample period
  std::vector<double> samples;  // Custom shape
};

/// Sampled test signal: step holds the amplitude, square alternates between
/// +amplitude and -amplitude at 50% duty, sine is amplitude*sin(2*pi*f*k*T).
/// Throws NyquistViolation when frequency >= 1/(2T).
std::vector<double> generate_signal(const SignalSpec& spec);

/// Discrete LTI plant for closed-loop runs.
struct Plant {
  RationalTF tf;
};

struct SimResult {
  double T = 0.0;
  std::vector<double> time;
  std::vector<double> reference;
  std::vector<double> error;
  std::vector<double> output;
  std::vector<double> plant_output;  // closed-loop only
  std::vector<double> oracle;        // optional GL reference column
  std::string provenance;

  /// CSV with header row t,ref,err,out[,y][,gl]. With plot_header, provenance
  /// lines prefixed by '#' precede the data.
  std::string to_csv(bool plot_header = false) const;
};

/// Feed the signal to the controller as its error input.
SimResult run_open_loop(const FocDigital& foc, const std::vector<double>& signal,
                        const std::optional<QuantizationConfig>& quant = {});

/// Unity negative feedback with a one-sample delay in the feedback path:
/// e_n = r_n - y_{n-1}. Throws DivergenceDetected when |y| exceeds 1e6.
SimResult run_closed_loop(const FocDigital& foc, const Plant& plant,
                          const std::vector<double>& reference);

struct ErrorMetrics {
  double rms_abs = 0.0;
  double rms_rel = 0.0;  // rms_abs normalized by the RMS of a
  double max_abs = 0.0;
};

/// Deviation metrics between two equal-length sequences over samples >= skip.
ErrorMetrics metrics(const std::vector<double>& a, const std::vector<double>& b,
                     std::size_t skip = 0);

}  // namespace fopid
