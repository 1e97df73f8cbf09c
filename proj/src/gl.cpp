#include "fopid/gl.hpp"

#include <algorithm>
#include <cmath>

namespace fopid {

std::vector<double> gl_weights(double r, std::size_t n) {
  std::vector<double> w(n + 1, 0.0);
  w[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
    w[k] = w[k - 1] * (1.0 - (r + 1.0) / static_cast<double>(k));
  return w;
}

std::vector<double> gl_apply(const std::vector<double>& signal, const GlSpec& spec) {
  if (signal.empty()) throw std::invalid_argument("gl_apply: empty signal");
  const std::size_t n = signal.size();
  const std::vector<double> w = gl_weights(spec.r, n - 1);
  const double scale = std::pow(spec.T, -spec.r);
  const std::size_t limit = spec.memory ? *spec.memory : n;

  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min(i + 1, limit);
    double acc = 0.0;
    for (std::size_t k = 0; k < kmax; ++k) acc += w[k] * signal[i - k];
    out[i] = scale * acc;
  }
  return out;
}

}  // namespace fopid
