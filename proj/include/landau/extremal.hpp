#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "landau/polyfunc.hpp"
#include "landau/radii.hpp"
#include "landau/series.hpp"

namespace landau {

/// F_1(z) = Lambda_0^2 z - sum Lambda_k conj(z)^k z + (Lambda_0^3 - Lambda_0) log(1 - z/Lambda_0).
struct F1Family {
  DerivAll profile;
};

/// F_2(z) = z - sum Lambda_k conj(z)^k z.
struct F2Family {
  DerivNormalized profile;
};

/// F_3(z) = z + |z|^2 sum_{k=0}^{p-2} conj(z)^k, the M_k = 1 extremal.
struct F3Family {
  explicit F3Family(std::size_t order);
  std::size_t p;
};

/// f_0(z) = M z (1 - M z) / (M - z).
struct ClassicalFamily {
  explicit ClassicalFamily(double modulus);
  double M;
};

/// f_n(z) = M z (1 - M z^{n-1}) / (M - z^{n-1}), n >= 2.
struct LemmaFnFamily {
  LemmaFnFamily(double modulus, int index);
  double M;
  int n;
};

using ExtremalSpec = std::variant<F1Family, F2Family, F3Family, ClassicalFamily, LemmaFnFamily>;

/// Closed-form value. Throws DomainError when |z| > 1.
Complex extremal_eval(const ExtremalSpec& spec, Complex z);

/// The same function as a PolyAnalyticFn built from its Taylor components.
PolyAnalyticFn as_poly_analytic(const ExtremalSpec& spec);

/// Lambda^2 z + (Lambda^3 - Lambda) log(1 - z/Lambda): the analytic part A(z) with A(0) = 0,
/// A'(0) = 1 and A'(z) = Lambda (1/Lambda - z) / (1 - z/Lambda), so |A'| < Lambda on U.
TruncatedTaylorSeries deriv_bounded_series(double lambda);

/// Taylor series of f_n. The degree grows past kDefaultDegree when M is close
/// to 1 so that the tail stays below double precision on the closed disk.
TruncatedTaylorSeries lemma_fn_series(double M, int n);

/// Real restriction g(x) = F_1(x) on [0, 1] and its derivative.
double g_profile(double x, const DerivAll& b);
double g_profile_derivative(double x, const DerivAll& b);

struct CollisionPair {
  double x1{};
  double x2{};
  double epsilon{};
  double rho{};
  /// |g(x1) - g(x2)|
  double gap{};
  /// Second zero of g in (rho, 1] when g(1) <= 0.
  std::optional<double> second_zero;
};

/// Two distinct real points x2 < rho_1 < x1 < r with F_1(x1) = F_1(x2),
/// witnessing that F_1 is not injective on U_r for any r > rho_1.
/// Throws PreconditionError unless rho_1 < r <= 1.
CollisionPair collision_pair(const DerivAll& b, double r);

}  // namespace landau
