// Invariants over randomized valid profiles.
#include <doctest.h>

#include <cmath>
#include <random>

#include "landau/extremal.hpp"
#include "landau/radii.hpp"
#include "landau/verify.hpp"

using namespace landau;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  std::size_t order() { return 1 + rng() % 5; }
  std::vector<double> vec(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }
};

}  // namespace

TEST_CASE("0 < sigma_1 < 1 and 0 < rho_1 <= 1/Lambda_0") {
  Gen gen(101);
  for (int i = 0; i < 200; ++i) {
    const double l0 = gen.uniform(1.0 + 1e-6, 10.0);
    const auto p = gen.order();
    const auto res = rho_sigma_thm1(DerivAll(l0, gen.vec(p - 1, 0.0, 5.0)));
    CHECK(res.sigma > 0.0);
    CHECK(res.sigma < 1.0);
    CHECK(res.rho > 0.0);
    CHECK(res.rho <= 1.0 / l0);
    CHECK(res.sigma < res.rho);
  }
}

TEST_CASE("radii shrink as the bounds grow") {
  Gen gen(102);
  for (int i = 0; i < 50; ++i) {
    const auto p = 2 + gen.order();
    const auto L = gen.vec(p - 1, 0.1, 2.0);
    auto bigger = L;
    bigger[gen.rng() % bigger.size()] += 0.5;
    const double l0 = gen.uniform(1.1, 5.0);
    CHECK(rho_sigma_thm1(DerivAll(l0, bigger)).rho < rho_sigma_thm1(DerivAll(l0, L)).rho);
    CHECK(rho_sigma_thm1(DerivAll(l0 + 0.5, L)).rho < rho_sigma_thm1(DerivAll(l0, L)).rho);

    const auto M = gen.vec(p, 1.0, 4.0);
    auto Mb = M;
    Mb[gen.rng() % Mb.size()] += 0.5;
    CHECK(rho_sigma_thm3(ModulusAll(Mb)).rho < rho_sigma_thm3(ModulusAll(M)).rho);
  }
}

TEST_CASE("every computed root has small residual and sits in its interval") {
  Gen gen(103);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.order();
    const auto r1 = rho_sigma_thm1(DerivAll(gen.uniform(1.01, 8.0), gen.vec(p - 1, 0.0, 3.0)));
    const auto r2 = rho_sigma_thm2(DerivNormalized(gen.vec(p - 1, 0.0, 3.0)));
    const auto r3 = rho_sigma_thm3(ModulusAll(gen.vec(p, 1.0, 6.0)));
    const auto r4 = rho_sigma_thm4(MixedDerivModulus(gen.uniform(1.01, 8.0), gen.vec(p - 1, 1.0, 6.0)));
    for (const auto& r : {r1, r2, r3, r4}) {
      CHECK(r.residual < 1e-10);
      CHECK(r.rho > 0.0);
      CHECK(r.rho <= 1.0);
      CHECK(r.iterations <= 200);
    }
  }
}

TEST_CASE("log variants satisfy w^2 - r^2 = 1") {
  Gen gen(104);
  for (int i = 0; i < 100; ++i) {
    const auto p = gen.order();
    const auto t5 = rho_sigma_thm5(DerivAll(gen.uniform(1.01, 8.0), gen.vec(p - 1, 0.0, 3.0)));
    const auto t7 = rho_sigma_thm7(gen.vec(p, 1.01, 50.0));
    for (const auto& r : {t5, t7}) {
      REQUIRE(r.w);
      REQUIRE(r.r);
      CHECK(std::abs(*r.w * *r.w - *r.r * *r.r - 1.0) < 1e-12);
      CHECK(*r.w - *r.r == doctest::Approx(std::exp(-r.sigma)).epsilon(1e-12));
    }
  }
}

TEST_CASE("root functions are strictly decreasing on their brackets") {
  Gen gen(105);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.order();
    const DerivAll a(gen.uniform(1.01, 8.0), gen.vec(p - 1, 0.0, 3.0));
    const ModulusAll m(gen.vec(p, 1.0, 6.0));
    const MixedDerivModulus x(gen.uniform(1.01, 8.0), gen.vec(p - 1, 1.0, 6.0));
    CHECK(verify::monotonicity_check([&](double r) { return g1(r, a); }, 0.0, 1.0 / a.lambda0(),
                                     1000).passed);
    CHECK(verify::monotonicity_check([&](double r) { return g2(r, m); }, 0.0, 0.999, 1000).passed);
    CHECK(verify::monotonicity_check([&](double r) { return g3(r, x); }, 0.0, 1.0 / x.lambda(),
                                     1000).passed);
  }
}

TEST_CASE("F1 is injective on 0.99 rho_1 and covers 0.99 sigma_1") {
  Gen gen(106);
  const verify::GridSpec grid(16, 32);
  for (int i = 0; i < 8; ++i) {
    const auto p = gen.order();
    const DerivAll b(gen.uniform(1.2, 6.0), gen.vec(p - 1, 0.0, 2.0));
    const auto res = rho_sigma_thm1(b);
    const auto F = as_poly_analytic(F1Family{b});
    CHECK(verify::univalence_grid_check(F, 0.99 * res.rho, grid).passed);
    CHECK(verify::schlicht_coverage_check(F, res.rho, 0.99 * res.sigma, 512).passed);
    CHECK(std::abs(std::abs(poly_eval(F, Complex(res.rho))) - res.sigma) < 1e-9);
  }
}

TEST_CASE("theorem 3 improves on Theorem C across a sweep") {
  for (double M = 1.05; M < 20.0; M *= 1.4)
    for (int p = 2; p <= 8; ++p) {
      const auto t3 = rho_sigma_thm3(ModulusAll(std::vector<double>(std::size_t(p), M)));
      const auto c = theoremC_baseline(M, p);
      CHECK(t3.rho > c.r);
      CHECK(t3.sigma > c.R);
    }
}
