#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fopid {

/// Grünwald-Letnikov differintegral of order r at sample period T, with the
/// lower terminal fixed at the first sample (zero history). An empty memory
/// field means the full-length convolution.
struct GlSpec {
  double r = -0.5;
  double T = 0.001;
  std::optional<std::size_t> memory;

  GlSpec() = default;
  GlSpec(double order, double sample_period, std::optional<std::size_t> memory_len = {})
      : r(order), T(sample_period), memory(memory_len) {
    if (!(std::abs(r) <= 1.0)) throw std::invalid_argument("GlSpec: |r| <= 1 supported");
    if (!(T > 0.0)) throw std::invalid_argument("GlSpec: T must be positive");
    if (memory && *memory < 1) throw std::invalid_argument("GlSpec: memory_len >= 1");
  }
};

/// Signed binomial weights of (1 - x)^r: w_0 = 1, w_k = w_{k-1}(1 - (r+1)/k).
std::vector<double> gl_weights(double r, std::size_t n);

/// y_n = T^-r * sum_{k=0}^{min(n, memory-1)} w_k * signal_{n-k}.
std::vector<double> gl_apply(const std::vector<double>& signal, const GlSpec& spec);

}  // namespace fopid
