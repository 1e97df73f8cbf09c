#include "fopid/ratpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace fopid {

std::size_t Polynomial::degree() const {
  std::size_t d = coeffs.size() - 1;
  while (d > 0 && std::abs(coeffs[d]) <= kTrimEps) --d;
  return d;
}

Polynomial Polynomial::trimmed() const {
  Polynomial out = *this;
  out.coeffs.resize(degree() + 1);
  return out;
}

bool Polynomial::is_zero() const {
  return degree() == 0 && std::abs(coeffs[0]) <= kTrimEps;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double Polynomial::one_norm() const {
  double s = 0.0;
  for (double c : coeffs) s += std::abs(c);
  return s;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] += a.coeffs[i] * b.coeffs[j];
  return Polynomial(std::move(r));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.coeffs.size()) r[i] += a.coeffs[i];
    if (i < b.coeffs.size()) r[i] += b.coeffs[i];
  }
  return Polynomial(std::move(r));
}

Polynomial poly_scale(const Polynomial& a, double s) {
  Polynomial r = a;
  for (double& c : r.coeffs) c *= s;
  return r;
}

RationalTF::RationalTF(double g, Polynomial n, Polynomial d)
    : gain(g), num(std::move(n)), den(std::move(d)) {
  if (den.coeffs.empty() || den.coeffs[0] == 0.0)
    throw DegenerateInput("RationalTF: denominator constant coefficient must be nonzero");
}

RationalTF RationalTF::monic() const {
  RationalTF out = *this;
  const double d0 = out.den.coeffs[0];
  for (double& c : out.den.coeffs) c /= d0;
  out.den.coeffs[0] = 1.0;
  out.gain /= d0;

  // Normalize the numerator by its first significant coefficient.
  std::size_t lead = 0;
  while (lead < out.num.coeffs.size() && std::abs(out.num.coeffs[lead]) <= kTrimEps) ++lead;
  if (lead == out.num.coeffs.size()) {
    out.gain = 0.0;
    out.num = Polynomial{0.0};
    return out;
  }
  const double n0 = out.num.coeffs[lead];
  for (double& c : out.num.coeffs) c /= n0;
  out.num.coeffs[lead] = 1.0;
  out.gain *= n0;
  return out;
}

std::complex<double> rtf_eval(const RationalTF& tf, std::complex<double> point) {
  if (std::abs(point) == 0.0) {
    // z -> 0 limit: ratio of the highest z^-k coefficients once both
    // polynomials are padded to a common length.
    const std::size_t len = std::max(tf.num.coeffs.size(), tf.den.coeffs.size());
    const double nk = len - 1 < tf.num.coeffs.size() ? tf.num.coeffs[len - 1] : 0.0;
    const double dk = len - 1 < tf.den.coeffs.size() ? tf.den.coeffs[len - 1] : 0.0;
    if (std::abs(dk) < kPoleTol) throw PoleAtEvaluationPoint("rtf_eval: pole at z = 0");
    return tf.gain * nk / dk;
  }
  const std::complex<double> x = 1.0 / point;
  const std::complex<double> dv = tf.den.eval(x);
  if (std::abs(dv) < kPoleTol) throw PoleAtEvaluationPoint("rtf_eval: evaluation point is a pole");
  return tf.gain * tf.num.eval(x) / dv;
}

std::vector<double> rtf_maclaurin(const RationalTF& tf, std::size_t n) {
  if (tf.den.coeffs[0] == 0.0)
    throw DegenerateInput("rtf_maclaurin: denominator constant coefficient is zero");
  std::vector<double> q(n + 1, 0.0);
  const auto& b = tf.num.coeffs;
  const auto& a = tf.den.coeffs;
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = k < b.size() ? b[k] : 0.0;
    for (std::size_t i = 1; i < a.size() && i <= k; ++i) acc -= a[i] * q[k - i];
    q[k] = acc / a[0];
  }
  for (double& c : q) c *= tf.gain;
  return q;
}

namespace {

std::complex<double> horner(const std::vector<double>& desc, std::complex<double> z,
                            std::complex<double>* deriv = nullptr) {
  std::complex<double> p = desc[0], dp = 0.0;
  for (std::size_t i = 1; i < desc.size(); ++i) {
    dp = dp * z + p;
    p = p * z + desc[i];
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace

std::vector<std::complex<double>> roots(const Polynomial& p) {
  if (p.is_zero()) throw DegenerateInput("roots: zero polynomial");
  const Polynomial t = p.trimmed();
  // The z^-1 ascending list is already descending in z.
  std::vector<double> zp = t.coeffs;
  // Guard against a vanishing z-leading coefficient (drops the z-degree).
  double maxc = 0.0;
  for (double c : zp) maxc = std::max(maxc, std::abs(c));
  std::size_t lead = 0;
  while (lead + 1 < zp.size() && std::abs(zp[lead]) <= 1e-12 * maxc) ++lead;
  zp.erase(zp.begin(), zp.begin() + static_cast<std::ptrdiff_t>(lead));

  const std::size_t n = zp.size() - 1;
  if (n == 0) return {};

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    companion(0, static_cast<Eigen::Index>(i)) = -zp[i + 1] / zp[0];
  for (std::size_t i = 1; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));

  // Newton polish against the z-form polynomial.
  double norm1 = 0.0;
  for (double c : zp) norm1 += std::abs(c);
  for (auto& r : out) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> dp;
      const std::complex<double> pv = horner(zp, r, &dp);
      if (std::abs(pv) / norm1 < 1e-15 || std::abs(dp) == 0.0) break;
      const std::complex<double> next = r - pv / dp;
      if (std::abs(horner(zp, next)) >= std::abs(pv)) break;
      r = next;
    }
    if (std::abs(horner(zp, r)) / norm1 >= kRootResidualTol)
      throw std::runtime_error("roots: residual contract violated");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a) < std::abs(b);
  });
  return out;
}

StabilityReport stability_report(const RationalTF& tf) {
  StabilityReport rep;
  if (tf.den.trimmed().degree() >= 1) rep.poles = roots(tf.den);
  if (tf.num.is_zero())
    throw DegenerateInput("stability_report: zero numerator");
  if (tf.num.trimmed().degree() >= 1) rep.zeros = roots(tf.num);

  double max_pole = 0.0, max_zero = 0.0;
  for (const auto& z : rep.poles) max_pole = std::max(max_pole, std::abs(z));
  for (const auto& z : rep.zeros) max_zero = std::max(max_zero, std::abs(z));
  rep.stable = max_pole < 1.0 - kStabilityEps;
  rep.minimum_phase = max_zero < 1.0 - kStabilityEps;
  rep.margin = 1.0 - max_pole;
  return rep;
}

}  // namespace fopid
