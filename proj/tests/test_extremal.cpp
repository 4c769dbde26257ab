#include <doctest.h>

#include <cmath>
#include <random>

#include "landau/errors.hpp"
#include "landau/extremal.hpp"
#include "landau/radii.hpp"
#include "oracles.hpp"

using namespace landau;

TEST_CASE("F1 on the positive real axis is the profile g") {
  const DerivAll b(2.0, {1.0});
  const ExtremalSpec spec = F1Family{b};
  for (double x = 0.0; x <= 1.0; x += 0.05)
    CHECK(extremal_eval(spec, Complex(x)) == Complex(g_profile(x, b)));
}

TEST_CASE("profile derivative equals the root function g1") {
  const DerivAll b(3.0, {0.5, 2.0});
  for (double x = 0.0; x <= 1.0 / 3.0; x += 0.01) {
    CHECK(g_profile_derivative(x, b) == doctest::Approx(g1(x, b)).epsilon(1e-12));
    if (x > 1e-3) {
      const double h = 1e-6;
      const double fd = (g_profile(x + h, b) - g_profile(x - h, b)) / (2 * h);
      CHECK(fd == doctest::Approx(g1(x, b)).epsilon(1e-7));
    }
  }
}

TEST_CASE("boundary attainment |F1(rho_1)| = sigma_1") {
  for (double l0 : {1.1, 2.0, 5.0})
    for (double l1 : {0.0, 1.0, 2.5}) {
      const DerivAll b(l0, {l1});
      const auto res = rho_sigma_thm1(b);
      CHECK(std::abs(std::abs(extremal_eval(F1Family{b}, Complex(res.rho))) - res.sigma) < 1e-12);
    }
}

TEST_CASE("materialized extremals agree with their closed forms") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.65, 0.65);
  const ExtremalSpec specs[] = {F1Family{DerivAll(2.0, {1.0, 0.5})},
                                F1Family{DerivAll(1.05, {0.3})},
                                F2Family{DerivNormalized({0.5, 0.25})},
                                F3Family(3),
                                ClassicalFamily(2.0),
                                ClassicalFamily(1.05),
                                LemmaFnFamily(2.0, 3),
                                LemmaFnFamily(1.5, 5)};
  for (const auto& spec : specs) {
    const auto F = as_poly_analytic(spec);
    CHECK(F.is_normalized());
    for (int i = 0; i < 30; ++i) {
      const Complex z(u(rng), u(rng));
      CHECK(std::abs(poly_eval(F, z) - extremal_eval(spec, z)) < 1e-12);
    }
  }
}

TEST_CASE("F1 Wirtinger derivatives attain the bounds on the positive axis") {
  // A_0' = Lambda_0 (1 - Lambda_0 z)/(Lambda_0 - z) and F_zbar = -sum k Lambda_k conj(z)^{k-1} z.
  const DerivAll b(2.0, {1.0});
  const auto F = as_poly_analytic(F1Family{b});
  const double x = 0.2;
  const auto w = wirtinger(F, Complex(x));
  CHECK(w.dz.real() == doctest::Approx(2.0 * (1 - 2 * x) / (2 - x) - x).epsilon(1e-12));
  CHECK(w.dzbar.real() == doctest::Approx(-x).epsilon(1e-12));
  // The Jacobian vanishes where g1 does.
  const double rho = rho_sigma_thm1(b).rho;
  CHECK(std::abs(jacobian(F, Complex(rho))) < 1e-10);
}

TEST_CASE("f_n series coefficients") {
  const auto s = lemma_fn_series(2.0, 3);
  CHECK(s[1] == Complex(1.0));
  CHECK(s[2] == Complex(0.0));
  CHECK(s[3] == Complex(-1.5));    // -(M - 1/M)
  CHECK(s[5] == Complex(-0.75));   // -(M^2 - 1)/M^2
  const auto f0 = lemma_fn_series(2.0, 2);
  CHECK(f0[2] == Complex(-1.5));
  // M = 1 collapses to the identity.
  const auto id = lemma_fn_series(1.0, 4);
  for (std::size_t n = 2; n <= id.degree(); ++n) CHECK(id[n] == Complex{});
}

TEST_CASE("deriv_bounded_series coefficients and degree") {
  const auto s = deriv_bounded_series(2.0);
  CHECK(s[1] == Complex(1.0));
  CHECK(s[2].real() == doctest::Approx(-3.0 / 4.0));
  CHECK(s[3].real() == doctest::Approx(-3.0 / 12.0));
  const auto slow = deriv_bounded_series(1.01);
  CHECK(slow.degree() > kDefaultDegree);
  const Complex z(0.5, 0.3);
  const Complex exact = 1.01 * 1.01 * z + (1.01 * 1.01 * 1.01 - 1.01) * std::log(1.0 - z / 1.01);
  CHECK(std::abs(series_eval(slow, z) - exact) < 1e-12);
  CHECK_THROWS_AS(deriv_bounded_series(1.0), DomainError);
}

TEST_CASE("collision pair beyond rho_1") {
  const DerivAll b(2.0, {1.0});
  const auto pair = collision_pair(b, 0.5);
  CHECK(pair.x1 != pair.x2);
  CHECK(pair.x2 < pair.rho);
  CHECK(pair.x1 > pair.rho);
  CHECK(pair.x1 < 0.5);
  const ExtremalSpec spec = F1Family{b};
  CHECK(std::abs(extremal_eval(spec, pair.x1) - extremal_eval(spec, pair.x2)) < 1e-10);
  CHECK(pair.gap < 1e-10);

  // Every r in (rho, 1] yields a pair inside U_r.
  for (double r : {0.27, 0.3, 0.6, 1.0}) {
    const auto q = collision_pair(b, r);
    CHECK(q.x1 < r);
    CHECK(std::abs(g_profile(q.x1, b) - g_profile(q.x2, b)) < 1e-10);
  }
  CHECK_THROWS_AS(collision_pair(b, 0.2), PreconditionError);
  CHECK_THROWS_AS(collision_pair(b, 1.5), PreconditionError);
}

TEST_CASE("family parameter checks") {
  CHECK_THROWS_AS(F3Family(0), DomainError);
  CHECK_THROWS_AS(ClassicalFamily(0.5), DomainError);
  CHECK_THROWS_AS(LemmaFnFamily(2.0, 1), DomainError);
  CHECK_THROWS_AS(extremal_eval(F3Family(2), Complex(1.2)), DomainError);
}
