#include <doctest.h>

#include <cmath>
#include <random>

#include "fopid/gl.hpp"

using namespace fopid;

TEST_CASE("gl_weights follows the binomial recursion") {
  SUBCASE("half order") {
    const auto w = gl_weights(0.5, 4);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == doctest::Approx(-0.5));
    CHECK(w[2] == doctest::Approx(-0.125));
    CHECK(w[3] == doctest::Approx(-0.0625));
    CHECK(w[4] == doctest::Approx(-0.0390625));
  }
  SUBCASE("zero order") {
    const auto w = gl_weights(0.0, 5);
    CHECK(w[0] == 1.0);
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k] == 0.0);
  }
  SUBCASE("first order reduces to the first difference") {
    const auto w = gl_weights(1.0, 3);
    CHECK(w[0] == 1.0);
    CHECK(w[1] == -1.0);
    CHECK(w[2] == 0.0);
    CHECK(w[3] == 0.0);
  }
}

TEST_CASE("gl_apply computes the sampled differintegral") {
  SUBCASE("half integral of a unit step at T = 1") {
    const std::vector<double> step(4, 1.0);
    const auto y = gl_apply(step, GlSpec(-0.5, 1.0));
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(1.5));
    CHECK(y[2] == doctest::Approx(1.875));
    CHECK(y[3] == doctest::Approx(2.1875));
  }
  SUBCASE("zero order passes the signal through") {
    const std::vector<double> x{0.3, -1.2, 4.5, 0.0};
    CHECK(gl_apply(x, GlSpec(0.0, 0.25)) == x);
  }
  SUBCASE("first derivative of a step is an impulse") {
    const std::vector<double> step(5, 1.0);
    const auto y = gl_apply(step, GlSpec(1.0, 1.0));
    CHECK(y[0] == doctest::Approx(1.0));
    for (std::size_t k = 1; k < y.size(); ++k) CHECK(y[k] == doctest::Approx(0.0));
  }
}

TEST_CASE("half-order composition equals the first difference") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(100);
    for (auto& v : x) v = dist(rng);
    const auto once = gl_apply(x, GlSpec(0.5, 1.0));
    const auto twice = gl_apply(once, GlSpec(0.5, 1.0));
    const auto diff = gl_apply(x, GlSpec(1.0, 1.0));
    for (std::size_t k = 0; k < x.size(); ++k)
      CHECK(std::abs(twice[k] - diff[k]) <= 1e-12);
  }
}

TEST_CASE("gl_apply is linear") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(64), y(64);
  for (auto& v : x) v = dist(rng);
  for (auto& v : y) v = dist(rng);
  const double a = 1.75, b = -0.5;
  std::vector<double> mix(64);
  for (std::size_t k = 0; k < 64; ++k) mix[k] = a * x[k] + b * y[k];

  const GlSpec spec(-0.5, 0.01);
  const auto gm = gl_apply(mix, spec);
  const auto gx = gl_apply(x, spec);
  const auto gy = gl_apply(y, spec);
  for (std::size_t k = 0; k < 64; ++k)
    CHECK(std::abs(gm[k] - (a * gx[k] + b * gy[k])) <= 1e-12);
}

TEST_CASE("truncated memory converges monotonically") {
  const std::vector<double> step(120, 1.0);
  const GlSpec full_spec(-0.5, 0.01);
  const auto full = gl_apply(step, full_spec);

  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t len : {1u, 2u, 5u, 10u, 20u, 40u, 80u, 119u}) {
    const auto y = gl_apply(step, GlSpec(-0.5, 0.01, len));
    double err = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) err = std::max(err, std::abs(y[k] - full[k]));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("half integral of a unit step tracks t^(1/2)/gamma(3/2)") {
  const double T = 0.01;
  const std::vector<double> step(200, 1.0);
  const auto y = gl_apply(step, GlSpec(-0.5, T));
  const double g = std::tgamma(1.5);
  for (std::size_t n = 50; n < y.size(); ++n) {
    const double analytic = std::sqrt(static_cast<double>(n) * T) / g;
    CHECK(std::abs(y[n] - analytic) / analytic < 0.02);
  }
}
