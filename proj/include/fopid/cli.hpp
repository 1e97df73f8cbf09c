#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fopid/config.hpp"
#include "fopid/simulate.hpp"

namespace fopid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitDiscretization = 3;
inline constexpr int kExitNyquist = 4;

struct SimOptions {
  SignalShape shape = SignalShape::Step;
  double frequency = 100.0;  // Hz
  double amplitude = 1.0;    // volts
  double duration = 0.1;     // seconds
  std::string signal_file;   // used by SignalShape::Custom
  bool quantized = false;
  bool gl_oracle = false;
  bool plot_header = false;
};

struct AnalyzeOptions {
  double fmin = 0.0;  // 0 -> fs / 1e4
  double fmax = 0.0;  // 0 -> Nyquist
  int points = 50;
};

/// design: write the flat-table coefficient file to config.out and a
/// stability summary to `status`. Exit 0/2/3 per the error mapping.
int cmd_design(const DesignConfig& config, std::ostream& status, std::ostream& err);

/// export: like design but with a selectable format and no stability summary.
int cmd_export(const DesignConfig& config, ExportFormat format, std::ostream& status,
               std::ostream& err);

/// simulate: write the SimResult CSV to config.out; with gl_oracle also a
/// sidecar metrics report next to it. Exit 4 on a Nyquist violation.
int cmd_simulate(const DesignConfig& config, const SimOptions& opts, std::ostream& status,
                 std::ostream& err);

/// analyze: poles, zeros, stability verdict and a log-spaced magnitude/phase
/// table, written to config.out or to `status` when no path is set.
int cmd_analyze(const DesignConfig& config, const AnalyzeOptions& opts, std::ostream& status,
                std::ostream& err);

}  // namespace fopid::cli
