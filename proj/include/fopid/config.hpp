#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fopid/controller.hpp"
#include "fopid/runtime.hpp"

namespace fopid {

struct ConfigError final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A required file could not be opened for reading or writing.
struct FileOpenError final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Everything a design run needs: controller parameters, converter emulation
/// settings, and the output path. Loadable from key = value text (a previous
/// flat-table export is also accepted; its branch sections are skipped) and
/// overridable field-by-field from command-line flags.
struct DesignConfig {
  FocParams params;
  QuantizationConfig quant;
  std::string out;

  /// Unknown keys are errors.
  static DesignConfig from_file(const std::string& path);
  static DesignConfig from_text(const std::string& text);

  /// Provenance warnings (currently: T outside the designed [0.001, 120] s
  /// range).
  std::vector<std::string> warnings() const;
};

}  // namespace fopid
