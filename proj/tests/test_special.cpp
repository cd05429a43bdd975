#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracdelay/special.hpp"

using fracdelay::gamma_fn;
using fracdelay::gamma_value;
using fracdelay::reciprocal_gamma;

TEST_CASE("gamma at integer and half-integer points") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) ==
        doctest::Approx(1.7724538509055160273).epsilon(1e-13));
}

TEST_CASE("gamma recurrence and agreement with std::tgamma") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(1e-3, 168.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    const double lhs = gamma_fn(x + 1.0);
    const double rhs = x * gamma_fn(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    CHECK(std::abs(gamma_fn(x) - std::tgamma(x)) <=
          2e-12 * std::abs(std::tgamma(x)));
  }
}

TEST_CASE("gamma rejects nonpositive arguments") {
  CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_fn(-2.5), std::domain_error);
}

TEST_CASE("reciprocal gamma handles poles and negative arguments") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-7.0) == 0.0);
  CHECK(reciprocal_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-13));
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(reciprocal_gamma(-0.5) ==
        doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-12));
}

TEST_CASE("gamma_value pairs argument and value") {
  const auto gv = gamma_value(4.0);
  CHECK(gv.argument == 4.0);
  CHECK(gv.value == doctest::Approx(6.0).epsilon(1e-13));
}
