#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/extremal.hpp"
#include "landau/radii.hpp"
#include "landau/verify.hpp"

using namespace landau;
using namespace landau::verify;

TEST_CASE("grid generators") {
  const GridSpec g(8, 16);
  const auto open = polar_grid(0.5, g);
  CHECK(open.size() == 8 * 16);
  for (auto z : open) CHECK(std::abs(z) < 0.5);
  const auto closed = closed_polar_grid(0.5, g);
  double outer = 0.0;
  for (auto z : closed) outer = std::max(outer, std::abs(z));
  CHECK(outer == doctest::Approx(0.5));
  const auto circle = circle_points(Complex(1.0), 0.25, 12);
  CHECK(circle.size() == 12);
  CHECK(circle.front() == Complex(1.25));
  for (auto z : circle) CHECK(std::abs(z - 1.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(GridSpec(4, 64), PreconditionError);
  CHECK_THROWS_AS(GridSpec(32, 64, 0.0), PreconditionError);
}

TEST_CASE("disk sampling is seeded and stays inside") {
  const auto a = sample_disk(Complex(0.5, 0.5), 0.1, 500, 42);
  const auto b = sample_disk(Complex(0.5, 0.5), 0.1, 500, 42);
  const auto c = sample_disk(Complex(0.5, 0.5), 0.1, 500, 43);
  CHECK(a == b);
  CHECK(a != c);
  for (auto z : a) CHECK(std::abs(z - Complex(0.5, 0.5)) <= 0.1);
}

TEST_CASE("univalence check separates injective from colliding maps") {
  const DerivAll b(2.0, {1.0});
  const auto F = as_poly_analytic(F1Family{b});
  const double rho = rho_sigma_thm1(b).rho;
  CHECK(univalence_grid_check(F, 0.99 * rho).passed);

  const auto pair = collision_pair(b, 0.5);
  const Complex extra[] = {Complex(pair.x1), Complex(pair.x2)};
  const auto bad = univalence_grid_check(F, 0.5, GridSpec{}, extra);
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.size() >= 2);

  // z^2 identifies antipodal points on every circle.
  const PolyAnalyticFn sq({TruncatedTaylorSeries({0.0, 0.0, 1.0})});
  CHECK_FALSE(univalence_grid_check(sq, 0.5, GridSpec(8, 16)).passed);
}

TEST_CASE("schlicht coverage is tight at sigma_1") {
  const DerivAll b(2.0, {1.0});
  const auto F = as_poly_analytic(F1Family{b});
  const auto res = rho_sigma_thm1(b);
  CHECK(schlicht_coverage_check(F, res.rho, 0.99 * res.sigma, 2048).passed);
  CHECK_FALSE(schlicht_coverage_check(F, res.rho, 1.01 * res.sigma, 2048).passed);
  const PolyAnalyticFn shifted({TruncatedTaylorSeries({0.1, 1.0})});
  CHECK_THROWS_AS(schlicht_coverage_check(shifted, 0.5, 0.1, 64), PreconditionError);
}

TEST_CASE("bound checks on the extremal components") {
  const auto h = deriv_bounded_series(2.0);
  CHECK(deriv_bound_check(h, 2.0).passed);
  CHECK_FALSE(deriv_bound_check(h, 1.5).passed);
  const auto f0 = lemma_fn_series(2.0, 2);
  CHECK(modulus_bound_check(f0, 2.0).passed);
  CHECK_FALSE(modulus_bound_check(f0, 1.8).passed);
}

TEST_CASE("coefficient bound is attained by f_n") {
  for (int n : {2, 3, 5}) {
    const auto s = lemma_fn_series(2.0, n);
    CHECK(std::abs(s[std::size_t(n)]) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(coefficient_bound_check(s, 2.0).passed);
  }
  const auto base = lemma_fn_series(2.0, 3);
  auto c = std::vector<Complex>(base.coeffs().begin(), base.coeffs().end());
  c[4] = 1.6;
  const auto rep = coefficient_bound_check(TruncatedTaylorSeries(c), 2.0);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.witness.empty());
  CHECK(rep.witness.front().z.real() == 4.0);
  CHECK_THROWS_AS(coefficient_bound_check(TruncatedTaylorSeries({0.0, 2.0}), 2.0),
                  PreconditionError);
}

TEST_CASE("distortion lower bound for the extremal component") {
  const auto h = deriv_bounded_series(2.0);
  CHECK(distortion_check(h, 2.0, 0.4, 2000, 3).passed);
  CHECK(distortion_boundary_check(h, 2.0, 0.4, 512).passed);
  CHECK_THROWS_AS(distortion_check(h, 2.0, 0.6, 100), PreconditionError);
}

TEST_CASE("exp maps U_s over U(cosh s, sinh s)") {
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CAPTURE(s);
    CHECK(exp_disk_check(s, 10000, 0).passed);
  }
  CHECK_THROWS_AS(exp_disk_check(1.0, 10), PreconditionError);
  CHECK_THROWS_AS(exp_disk_check(0.0, 10), PreconditionError);
}

TEST_CASE("log coverage for exp F1") {
  const DerivAll b(2.0, {1.0});
  const LogPAnalyticFn f(as_poly_analytic(F1Family{b}));
  const auto res = rho_sigma_thm5(b);
  const double s = 0.99 * res.sigma;
  CHECK(log_coverage_check(f, res.rho, std::cosh(s), std::sinh(s), 2048).passed);
  CHECK(univalence_grid_check(f, 0.99 * res.rho).passed);
}

TEST_CASE("monotonicity check") {
  CHECK(monotonicity_check([](double x) { return 1.0 - x * x; }, 0.0, 1.0, 1000).passed);
  CHECK_FALSE(monotonicity_check([](double x) { return std::cos(8 * x); }, 0.0, 1.0, 1000).passed);
  CHECK_FALSE(monotonicity_check([](double) { return 1.0; }, 0.0, 1.0, 100).passed);
  CHECK_FALSE(monotonicity_check([](double) { return std::nan(""); }, 0.0, 1.0, 100).passed);
}

TEST_CASE("hypothesis audit") {
  const DerivAll b(2.0, {1.0});
  CHECK(hypothesis_audit(as_poly_analytic(F1Family{b}), BoundProfile{b}).passed);
  // Lambda_1 too small for the witness.
  CHECK_FALSE(hypothesis_audit(as_poly_analytic(F1Family{b}),
                               BoundProfile{DerivAll(2.0, {0.5})}).passed);
  const DerivNormalized n({0.5});
  CHECK(hypothesis_audit(as_poly_analytic(F2Family{n}), BoundProfile{n}).passed);
  const ModulusAll m({2.0, 2.0});
  const auto f0 = lemma_fn_series(2.0, 2);
  CHECK(hypothesis_audit(PolyAnalyticFn::normalized({f0, f0}), BoundProfile{m}).passed);
  CHECK_FALSE(hypothesis_audit(PolyAnalyticFn::normalized({f0, f0}),
                               BoundProfile{ModulusAll({1.5, 1.5})}).passed);
  // Wrong order.
  CHECK_FALSE(hypothesis_audit(PolyAnalyticFn::identity(), BoundProfile{m}).passed);
}
