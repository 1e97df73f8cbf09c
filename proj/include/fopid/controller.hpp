#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fopid/discretize.hpp"
#include "fopid/ratpoly.hpp"

namespace fopid {

struct InvalidParams final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Continuous-domain controller parameters: proportional gain K, integral
/// branch Ti with order lambda, derivative branch Td with order delta. A
/// branch with zero constant is disabled and its order is ignored; orders of
/// active branches must lie strictly inside (0, 1).
struct FocParams {
  double K = 0.0;
  double Ti = 0.0;
  double Td = 0.0;
  double lambda = 0.5;
  double delta = 0.5;
  GeneratingFunction gf;
  int p = 3;
  int q = 3;

  void validate() const;
};

/// Digital realization as up to three parallel branches.
struct FocDigital {
  std::optional<RationalTF> proportional;  // constant K
  std::optional<RationalTF> integral;      // Ti * I(z)
  std::optional<RationalTF> derivative;    // Td * D(z)
  FocParams params;
};

/// Difference-equation coefficients of one branch: a[0] == 1, gain folded
/// into b.
struct DiffEqCoeffs {
  std::vector<double> b;
  std::vector<double> a;
};

enum class ExportFormat { FlatTable, EmbeddedHeader };

/// Build the parallel digital controller: integral branch from the -lambda
/// operator, derivative branch from the +delta operator. Every active branch
/// is checked stable before returning.
FocDigital design_foc(const FocParams& params);

/// Single-transfer-function view: sum of the branches over a common
/// denominator (analysis only; the runtime executes branches in parallel).
RationalTF combine_tf(const FocDigital& foc);

DiffEqCoeffs to_difference_equation(const RationalTF& tf);

/// Deterministic text rendering of all branch coefficients with 17
/// significant digits plus full parameter provenance. The flat-table form is
/// re-readable by import_coeffs (bit-exact round trip) and by the config
/// loader.
std::string export_coeffs(const FocDigital& foc, ExportFormat format,
                          const std::vector<std::string>& warnings = {});

/// Parse a flat-table coefficient file back into a controller.
FocDigital import_coeffs(const std::string& text);

/// 17-significant-digit decimal rendering (round-trips any double exactly).
std::string format_g17(double v);

}  // namespace fopid
