#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fopid/ratpoly.hpp"

namespace fopid {

// An intermediate continued-fraction coefficient below this magnitude signals
// a degenerate approximant table entry.
inline constexpr double kPivotEps = 1e-13;

struct PivotBreakdown final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDepth final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidOrder final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class GfKind { Euler, Tustin, AlAlaoui };

std::string to_string(GfKind k);
GfKind gf_kind_from_string(const std::string& s);

/// Map from the continuous differentiation operator to the delay variable.
/// Each kind factors as gain_base() times a unit-gain kernel in x = z^-1:
///   Euler     1/T      * (1 - x)
///   Tustin    2/T      * (1 - x)/(1 + x)
///   AlAlaoui  8/(7T)   * (1 - x)/(1 + x/7)
struct GeneratingFunction {
  GfKind kind = GfKind::AlAlaoui;
  double T = 0.001;  // sample period, seconds

  GeneratingFunction() = default;
  GeneratingFunction(GfKind k, double sample_period);

  double gain_base() const;

  /// Reciprocal of the kernel-denominator x coefficient: (1 + x/c). Euler has
  /// no denominator term, reported as c = infinity.
  double kernel_den_scale() const;

  /// True when T lies in the designed range [0.001, 120] s. Callers attach a
  /// provenance warning when this is false.
  bool t_in_design_range() const { return T >= 0.001 && T <= 120.0; }
};

/// Discretization request for one fractional operator: kernel^r folded to the
/// (p, q) convergent. Positive r differentiates, negative r integrates.
struct OperatorSpec {
  GeneratingFunction gf;
  double r = 0.5;
  int p = 3;
  int q = 3;

  /// Throws InvalidOrder unless 0 < |r| < 1, and std::invalid_argument unless
  /// p == q >= 1.
  void validate() const;
};

/// Partial quotients of the C-fraction c0 + c1 x/(1 + c2 x/(1 + ...)).
struct CfSequence {
  std::vector<double> q;
};

/// First n+1 Maclaurin coefficients of kernel(x)^r, as the convolution of the
/// generalized binomial series of the kernel's numerator and denominator
/// factors. r = 0 is allowed and yields the identity series.
std::vector<double> kernel_series(const GeneratingFunction& gf, double r, std::size_t n);

/// Convert a power series to C-fraction partial quotients by the
/// reciprocal-and-subtract recursion. The convergent truncated after c_{2k}
/// equals the [k/k] rational approximant of the series. Throws PivotBreakdown
/// when an intermediate coefficient magnitude falls below kPivotEps, and
/// InsufficientDepth when the series is shorter than depth + 1.
CfSequence cfe_from_series(const std::vector<double>& series, std::size_t depth);

/// Fold the first 2p partial quotients beyond c0 into a unit-gain rational
/// transfer function of degrees at most (p, q). Requires p == q.
RationalTF convergent(const CfSequence& cf, int p, int q);

/// Full pipeline: series -> C-fraction -> (p, q) convergent, with the final
/// gain gain_base()^r applied.
RationalTF discretize_operator(const OperatorSpec& spec);

}  // namespace fopid
