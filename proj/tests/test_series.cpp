#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "landau/errors.hpp"
#include "landau/series.hpp"
#include "oracles.hpp"

using landau::Complex;
using landau::TruncatedTaylorSeries;

TEST_CASE("identity series evaluates to z") {
  const auto id = TruncatedTaylorSeries::identity();
  CHECK(id.degree() == 1);
  for (Complex z : {Complex(0.3, -0.2), Complex(-0.9, 0.1), Complex(0.0, 1.0)})
    CHECK(landau::series_eval(id, z) == z);
}

TEST_CASE("Horner evaluation agrees with a naive power sum") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> c(12);
    for (auto& x : c) x = {u(rng), u(rng)};
    const TruncatedTaylorSeries s(c);
    const Complex z(0.7 * u(rng), 0.7 * u(rng));
    CHECK(std::abs(landau::series_eval(s, z) - oracle::power_sum(c, z)) < 1e-13);
  }
}

TEST_CASE("evaluation outside the closed disk is a domain error") {
  const auto id = TruncatedTaylorSeries::identity();
  CHECK_THROWS_AS(landau::series_eval(id, Complex(1.01, 0.0)), landau::DomainError);
  CHECK_THROWS_AS(landau::series_eval(id, Complex(0.8, 0.8)), landau::DomainError);
  // The unit circle itself is allowed, with a few ulps of slack.
  CHECK_NOTHROW(landau::series_eval(id, std::polar(1.0, 0.7)));
  CHECK_NOTHROW(landau::series_eval(id, Complex(1.0 + 1e-16, 0.0)));
}

TEST_CASE("coefficients are padded and checked") {
  const TruncatedTaylorSeries constant({Complex(2.0)});
  CHECK(constant.degree() == 1);
  CHECK(constant[1] == Complex{});
  CHECK(constant[500] == Complex{});
  CHECK_THROWS_AS(TruncatedTaylorSeries({Complex(std::numeric_limits<double>::quiet_NaN())}),
                  landau::DomainError);
  CHECK_THROWS_AS(TruncatedTaylorSeries({Complex(0.0, std::numeric_limits<double>::infinity())}),
                  landau::DomainError);
}

TEST_CASE("term-wise derivative") {
  const TruncatedTaylorSeries s({1.0, 2.0, 3.0, Complex(0.0, 4.0)});
  const auto d = landau::series_derivative(s);
  REQUIRE(d.degree() == 2);
  CHECK(d[0] == Complex(2.0));
  CHECK(d[1] == Complex(6.0));
  CHECK(d[2] == Complex(0.0, 12.0));

  const auto did = landau::series_derivative(TruncatedTaylorSeries::identity());
  CHECK(did[0] == Complex(1.0));
  CHECK(did[1] == Complex(0.0));
}

TEST_CASE("scaled multiplies every coefficient") {
  const TruncatedTaylorSeries s({0.0, 1.0, -0.5});
  const auto t = s.scaled(Complex(0.0, 2.0));
  CHECK(t[1] == Complex(0.0, 2.0));
  CHECK(t[2] == Complex(0.0, -1.0));
}

TEST_CASE("principal logarithm") {
  CHECK(landau::principal_log(Complex(1.0)) == Complex(0.0));
  const Complex lm1 = landau::principal_log(Complex(-1.0, -0.0));
  CHECK(lm1.real() == doctest::Approx(0.0));
  CHECK(lm1.imag() == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(landau::principal_log(Complex{}), landau::DomainError);
  const Complex w(0.3, -1.7);
  CHECK(std::abs(std::exp(landau::principal_log(w)) - w) < 1e-15);
}

TEST_CASE("adaptive degree") {
  CHECK(landau::adaptive_degree(0.5) == landau::kDefaultDegree);
  CHECK(landau::adaptive_degree(0.0) == landau::kDefaultDegree);
  CHECK(landau::adaptive_degree(1.0) == landau::kMaxDegree);
  CHECK(landau::adaptive_degree(1.0 - 1e-9) == landau::kMaxDegree);
  const auto n = landau::adaptive_degree(0.9);
  CHECK(n > landau::kDefaultDegree);
  CHECK(std::pow(0.9, double(n)) < 1e-17);
  CHECK(std::pow(0.9, double(n - 1)) >= 1e-17);
  // Larger ratios never need fewer terms.
  std::size_t prev = 0;
  for (double q = 0.5; q < 0.999; q += 0.01) {
    const auto m = landau::adaptive_degree(q);
    CHECK(m >= prev);
    prev = m;
  }
}
