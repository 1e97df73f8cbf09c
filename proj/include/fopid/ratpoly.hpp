#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fopid {

// Tail coefficients with magnitude at or below this are floating-point dust
// and are dropped by trim().
inline constexpr double kTrimEps = 1e-14;
// Strict stability margin: a pole (or zero) counts as inside the unit circle
// only if its magnitude is below 1 - kStabilityEps.
inline constexpr double kStabilityEps = 1e-9;
// rtf_eval refuses to divide by a denominator value smaller than this.
inline constexpr double kPoleTol = 1e-12;
// Every root returned by roots() satisfies |p(r)| / ||p||_1 < kRootResidualTol.
inline constexpr double kRootResidualTol = 1e-10;

struct DegenerateInput final : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleAtEvaluationPoint final : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Real polynomial in the delay variable: coeffs[k] multiplies z^-k.
struct Polynomial {
  std::vector<double> coeffs{0.0};

  Polynomial() = default;
  Polynomial(std::initializer_list<double> c) : coeffs(c) {
    if (coeffs.empty()) coeffs.push_back(0.0);
  }
  explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
  }

  /// Degree after ignoring trailing dust (|c| <= kTrimEps).
  std::size_t degree() const;

  /// Copy with trailing dust removed; never shorter than one coefficient.
  Polynomial trimmed() const;

  bool is_zero() const;

  /// Horner evaluation at x = z^-1.
  std::complex<double> eval(std::complex<double> x) const;

  double one_norm() const;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, double s);

/// Discrete rational transfer function gain * num(z^-1) / den(z^-1).
/// den.coeffs[0] must be nonzero.
struct RationalTF {
  double gain = 1.0;
  Polynomial num{1.0};
  Polynomial den{1.0};

  RationalTF() = default;
  RationalTF(double g, Polynomial n, Polynomial d);

  static RationalTF constant(double k) { return RationalTF(k, Polynomial{1.0}, Polynomial{1.0}); }

  /// Canonical form: den.coeffs[0] == 1 and the first significant numerator
  /// coefficient == 1, with both scale factors folded into gain. Idempotent,
  /// and unique for a given transfer function.
  RationalTF monic() const;
};

/// Evaluate the transfer function at z = point (polynomials are in z^-1, so
/// they are evaluated at 1/point). Throws PoleAtEvaluationPoint when the
/// denominator value is below kPoleTol in magnitude.
std::complex<double> rtf_eval(const RationalTF& tf, std::complex<double> point);

/// First n+1 power-series coefficients of the transfer function in z^-1,
/// by polynomial long division; gain is folded in.
std::vector<double> rtf_maclaurin(const RationalTF& tf, std::size_t n);

/// All roots of p interpreted in the variable z (the z^-1 coefficient order
/// is the descending-power order of z^degree * p(z^-1)). Throws
/// DegenerateInput for the zero polynomial.
std::vector<std::complex<double>> roots(const Polynomial& p);

struct StabilityReport {
  std::vector<std::complex<double>> poles;
  std::vector<std::complex<double>> zeros;
  bool stable = false;
  bool minimum_phase = false;
  double margin = 0.0;  // 1 - max pole magnitude (1 when there are no poles)
};

/// Classify a transfer function: stable iff every pole magnitude is below
/// 1 - kStabilityEps, minimum phase iff every zero is.
StabilityReport stability_report(const RationalTF& tf);

}  // namespace fopid
