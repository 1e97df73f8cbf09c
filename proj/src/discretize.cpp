#include "fopid/discretize.hpp"

#include <cmath>
#include <limits>

namespace fopid {

std::string to_string(GfKind k) {
  switch (k) {
    case GfKind::Euler: return "euler";
    case GfKind::Tustin: return "tustin";
    case GfKind::AlAlaoui: return "al-alaoui";
  }
  return "?";
}

GfKind gf_kind_from_string(const std::string& s) {
  if (s == "euler") return GfKind::Euler;
  if (s == "tustin") return GfKind::Tustin;
  if (s == "al-alaoui" || s == "alalaoui") return GfKind::AlAlaoui;
  throw std::invalid_argument("unknown generating function: " + s);
}

GeneratingFunction::GeneratingFunction(GfKind k, double sample_period)
    : kind(k), T(sample_period) {
  if (!(T > 0.0)) throw std::invalid_argument("GeneratingFunction: T must be positive");
}

double GeneratingFunction::gain_base() const {
  switch (kind) {
    case GfKind::Euler: return 1.0 / T;
    case GfKind::Tustin: return 2.0 / T;
    case GfKind::AlAlaoui: return 8.0 / (7.0 * T);
  }
  return 0.0;
}

double GeneratingFunction::kernel_den_scale() const {
  switch (kind) {
    case GfKind::Euler: return std::numeric_limits<double>::infinity();
    case GfKind::Tustin: return 1.0;
    case GfKind::AlAlaoui: return 7.0;
  }
  return 0.0;
}

void OperatorSpec::validate() const {
  if (!(std::abs(r) > 0.0) || !(std::abs(r) < 1.0))
    throw InvalidOrder("OperatorSpec: fractional order must satisfy 0 < |r| < 1");
  if (p < 1 || q < 1) throw std::invalid_argument("OperatorSpec: degrees must be >= 1");
  if (p != q) throw std::invalid_argument("OperatorSpec: p == q required");
}

namespace {

// Coefficients of (1 + u*x)^alpha via the multiplicative recursion
// c_k = c_{k-1} * (alpha - k + 1)/k * u.
std::vector<double> binomial_series(double alpha, double u, std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
    c[k] = c[k - 1] * ((alpha - static_cast<double>(k) + 1.0) / static_cast<double>(k)) * u;
  return c;
}

// Reciprocal of a power series with s[0] == 1, to the same truncation order.
std::vector<double> series_reciprocal(const std::vector<double>& s) {
  std::vector<double> r(s.size(), 0.0);
  r[0] = 1.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * r[k - i];
    r[k] = -acc;
  }
  return r;
}

}  // namespace

std::vector<double> kernel_series(const GeneratingFunction& gf, double r, std::size_t n) {
  if (!(std::abs(r) < 1.0))
    throw InvalidOrder("kernel_series: |r| < 1 required");
  if (n < 1) throw std::invalid_argument("kernel_series: n >= 1 required");

  const std::vector<double> a = binomial_series(r, -1.0, n);  // (1 - x)^r
  if (gf.kind == GfKind::Euler) return a;

  const double c = gf.kernel_den_scale();
  const std::vector<double> b = binomial_series(-r, 1.0 / c, n);  // (1 + x/c)^-r
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  return out;
}

CfSequence cfe_from_series(const std::vector<double>& series, std::size_t depth) {
  if (series.empty() || std::abs(series[0]) < kPivotEps)
    throw PivotBreakdown("cfe_from_series: leading series coefficient vanishes");
  if (depth > series.size() - 1)
    throw InsufficientDepth("cfe_from_series: series too short for requested depth");

  CfSequence cf;
  cf.q.reserve(depth + 1);
  cf.q.push_back(series[0]);

  // cur holds the series of (tail - previous constant)/x at each level.
  std::vector<double> cur(series.begin() + 1, series.end());
  for (std::size_t k = 0; k < depth; ++k) {
    // An all-zero tail means the expansion terminated exactly; the remaining
    // partial quotients are zero and every later convergent is unchanged.
    bool tail_zero = true;
    for (double c : cur)
      if (std::abs(c) >= kPivotEps) { tail_zero = false; break; }
    if (tail_zero) {
      cf.q.resize(depth + 1, 0.0);
      return cf;
    }
    const double ck = cur[0];
    if (std::abs(ck) < kPivotEps)
      throw PivotBreakdown("cfe_from_series: pivot below threshold at level " +
                           std::to_string(k + 1));
    cf.q.push_back(ck);
    std::vector<double> u(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) u[i] = cur[i] / ck;
    const std::vector<double> t = series_reciprocal(u);
    cur.assign(t.begin() + 1, t.end());
    if (cur.empty()) break;
  }
  return cf;
}

RationalTF convergent(const CfSequence& cf, int p, int q) {
  if (p != q) throw std::invalid_argument("convergent: p == q required");
  const std::size_t m = 2 * static_cast<std::size_t>(p);
  if (cf.q.size() < m + 1)
    throw InsufficientDepth("convergent: need at least 2p partial quotients beyond c0");

  // Three-term recurrence A_k = A_{k-1} + c_k x A_{k-2} (same for B), with
  // A_-1 = 1, B_-1 = 0, A_0 = c0, B_0 = 1.
  Polynomial a_prev{1.0}, b_prev{0.0};
  Polynomial a{cf.q[0]}, b{1.0};
  for (std::size_t k = 1; k <= m; ++k) {
    Polynomial shift{0.0, cf.q[k]};  // c_k * x
    Polynomial a_next = poly_add(a, poly_mul(shift, a_prev));
    Polynomial b_next = poly_add(b, poly_mul(shift, b_prev));
    a_prev = std::move(a);
    b_prev = std::move(b);
    a = std::move(a_next);
    b = std::move(b_next);
  }
  return RationalTF(1.0, a.trimmed(), b.trimmed());
}

RationalTF discretize_operator(const OperatorSpec& spec) {
  spec.validate();
  const std::size_t nterms = static_cast<std::size_t>(spec.p + spec.q) + 1;  // one spare
  const std::vector<double> series = kernel_series(spec.gf, spec.r, nterms);
  const CfSequence cf = cfe_from_series(series, 2 * static_cast<std::size_t>(spec.p));
  RationalTF tf = convergent(cf, spec.p, spec.q);
  tf.gain = std::pow(spec.gf.gain_base(), spec.r);
  return tf;
}

}  // namespace fopid
