#include "landau/extremal.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "landau/errors.hpp"

namespace landau {
namespace {

// log(1 + u) without losing digits when |u| is small.
Complex log1p_complex(Complex u) {
  const double modulus_log = 0.5 * std::log1p(2.0 * u.real() + std::norm(u));
  return {modulus_log, std::arg(Complex{1.0 + u.real(), u.imag()})};
}

Complex f1_value(const DerivAll& b, Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) return g_profile(z.real(), b);
  const double l0 = b.lambda0();
  const Complex zbar = std::conj(z);
  Complex power = zbar;
  Complex tail{};
  for (double lk : b.lambdas()) {
    tail += lk * power * z;
    power *= zbar;
  }
  return l0 * l0 * z - tail + (l0 * l0 * l0 - l0) * log1p_complex(-z / l0);
}

Complex f2_value(const DerivNormalized& b, Complex z) {
  const Complex zbar = std::conj(z);
  Complex power = zbar;
  Complex tail{};
  for (double lk : b.lambdas()) {
    tail += lk * power * z;
    power *= zbar;
  }
  return z - tail;
}

Complex f3_value(std::size_t p, Complex z) {
  const Complex zbar = std::conj(z);
  Complex power{1.0};
  Complex sum{};
  for (std::size_t k = 0; k + 2 <= p; ++k) {
    sum += power;
    power *= zbar;
  }
  return z + std::norm(z) * sum;
}

Complex fn_value(double M, int n, Complex z) {
  const Complex zn1 = std::pow(z, n - 1);
  return M * z * (1.0 - M * zn1) / (M - zn1);
}

TruncatedTaylorSeries linear(double slope) {
  return TruncatedTaylorSeries({Complex{}, Complex{slope}});
}

}  // namespace

F3Family::F3Family(std::size_t order) : p(order) {
  if (p < 1) throw DomainError("F3Family: order p must be at least 1");
}

ClassicalFamily::ClassicalFamily(double modulus) : M(modulus) {
  if (!(std::isfinite(M) && M >= 1.0)) throw DomainError("ClassicalFamily: need M >= 1");
}

LemmaFnFamily::LemmaFnFamily(double modulus, int index) : M(modulus), n(index) {
  if (!(std::isfinite(M) && M >= 1.0)) throw DomainError("LemmaFnFamily: need M >= 1");
  if (n < 2) throw DomainError("LemmaFnFamily: need n >= 2");
}

Complex extremal_eval(const ExtremalSpec& spec, Complex z) {
  require_closed_disk(z, "extremal_eval");
  struct Eval {
    Complex z;
    Complex operator()(const F1Family& f) const { return f1_value(f.profile, z); }
    Complex operator()(const F2Family& f) const { return f2_value(f.profile, z); }
    Complex operator()(const F3Family& f) const { return f3_value(f.p, z); }
    Complex operator()(const ClassicalFamily& f) const { return fn_value(f.M, 2, z); }
    Complex operator()(const LemmaFnFamily& f) const { return fn_value(f.M, f.n, z); }
  };
  return std::visit(Eval{z}, spec);
}

TruncatedTaylorSeries deriv_bounded_series(double lambda) {
  if (!(std::isfinite(lambda) && lambda > 1.0))
    throw DomainError("deriv_bounded_series: need Lambda > 1");
  // Lambda^2 z + (Lambda^3 - Lambda) log(1 - z/Lambda)
  //   = z - sum_{n>=2} (Lambda^2 - 1) / (n Lambda^{n-1}) z^n
  const double scale = lambda * lambda - 1.0;
  const std::size_t degree = adaptive_degree(1.0 / lambda, scale * lambda);
  std::vector<Complex> c(degree + 1);
  c[1] = 1.0;
  double inv_power = 1.0 / lambda;  // Lambda^{-(n-1)}
  for (std::size_t n = 2; n <= degree; ++n) {
    c[n] = -scale * inv_power / double(n);
    inv_power /= lambda;
  }
  return TruncatedTaylorSeries(std::move(c));
}

TruncatedTaylorSeries lemma_fn_series(double M, int n) {
  if (!(std::isfinite(M) && M >= 1.0)) throw DomainError("lemma_fn_series: need M >= 1");
  if (n < 2) throw DomainError("lemma_fn_series: need n >= 2");
  // f_n(z) = z - sum_{j>=1} (M^2 - 1) / M^j z^{(n-1) j + 1}
  const double scale = M * M - 1.0;
  const std::size_t step = std::size_t(n - 1);
  const std::size_t terms = scale == 0.0 ? 0 : adaptive_degree(1.0 / M, scale);
  const std::size_t degree = std::max<std::size_t>(kDefaultDegree, std::min(kMaxDegree, step * terms + 1));
  std::vector<Complex> c(degree + 1);
  c[1] = 1.0;
  if (scale != 0.0) {
    double inv_power = 1.0 / M;
    for (std::size_t j = 1; step * j + 1 <= degree; ++j) {
      c[step * j + 1] = -scale * inv_power;
      inv_power /= M;
    }
  }
  return TruncatedTaylorSeries(std::move(c));
}

PolyAnalyticFn as_poly_analytic(const ExtremalSpec& spec) {
  struct Build {
    PolyAnalyticFn operator()(const F1Family& f) const {
      std::vector<TruncatedTaylorSeries> parts{deriv_bounded_series(f.profile.lambda0())};
      for (double lk : f.profile.lambdas()) parts.push_back(linear(-lk));
      return PolyAnalyticFn::normalized(std::move(parts));
    }
    PolyAnalyticFn operator()(const F2Family& f) const {
      std::vector<TruncatedTaylorSeries> parts{TruncatedTaylorSeries::identity()};
      for (double lk : f.profile.lambdas()) parts.push_back(linear(-lk));
      return PolyAnalyticFn::normalized(std::move(parts));
    }
    PolyAnalyticFn operator()(const F3Family& f) const {
      return PolyAnalyticFn::normalized(
          std::vector<TruncatedTaylorSeries>(f.p, TruncatedTaylorSeries::identity()));
    }
    PolyAnalyticFn operator()(const ClassicalFamily& f) const {
      return PolyAnalyticFn::normalized({lemma_fn_series(f.M, 2)});
    }
    PolyAnalyticFn operator()(const LemmaFnFamily& f) const {
      return PolyAnalyticFn::normalized({lemma_fn_series(f.M, f.n)});
    }
  };
  return std::visit(Build{}, spec);
}

double g_profile(double x, const DerivAll& b) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("g_profile: x outside [0, 1]");
  const double l0 = b.lambda0();
  double tail = 0.0;
  double power = x * x;
  for (double lk : b.lambdas()) {
    tail += lk * power;
    power *= x;
  }
  return l0 * l0 * x - tail + (l0 * l0 * l0 - l0) * std::log1p(-x / l0);
}

double g_profile_derivative(double x, const DerivAll& b) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("g_profile_derivative: x outside [0, 1]");
  const double l0 = b.lambda0();
  double tail = 0.0;
  double power = x;
  double k = 1.0;
  for (double lk : b.lambdas()) {
    tail += (k + 1.0) * lk * power;
    power *= x;
    k += 1.0;
  }
  return l0 * l0 - tail - (l0 * l0 * l0 - l0) / (l0 - x);
}

CollisionPair collision_pair(const DerivAll& b, double r) {
  const auto radii = rho_sigma_thm1(b);
  const double rho = radii.rho;
  if (!(r > rho && r <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "collision_pair: need rho_1 < r <= 1, got r = " << r << " with rho_1 = " << rho;
    throw PreconditionError(msg.str());
  }
  const auto g = [&](double x) { return g_profile(x, b); };
  const double peak = g(rho);

  CollisionPair out;
  out.rho = rho;
  double eps = 0.5 * (r - rho);
  if (g(1.0) <= 0.0) {
    const auto second = find_root_monotone(g, rho, 1.0);
    out.second_zero = second.x;
    eps = std::min(eps, 0.5 * (second.x - rho));
  }

  for (int attempt = 0; attempt < 10; ++attempt) {
    const double x1 = rho + eps;
    const double target = g(x1);
    if (target <= 0.0) {
      eps *= 0.5;
      continue;
    }
    if (target >= peak) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "collision_pair: g(x1) does not fall below g(rho_1) at epsilon = " << eps;
      throw InternalError(msg.str());
    }
    // g is strictly increasing on [0, rho_1], so target - g is strictly decreasing.
    const auto root = find_root_monotone([&](double x) { return target - g(x); }, 0.0, rho);
    out.x1 = x1;
    out.x2 = root.x;
    out.epsilon = eps;
    out.gap = std::abs(target - g(root.x));
    return out;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "collision_pair: no bracket after 10 halvings, epsilon = " << eps;
  throw InternalError(msg.str());
}

}  // namespace landau
