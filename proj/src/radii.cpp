#include "landau/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace landau {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_unit_interval(double r, const char* where) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << where << ": r = " << r << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

double excess(double m) { return m - 1.0 / m; }

// Lambda (1 - Lambda r) / (Lambda - r)
double mobius_term(double lambda, double r) { return lambda * (1.0 - lambda * r) / (lambda - r); }

// Lambda^2 rho + (Lambda^3 - Lambda) ln(1 - rho / Lambda), the distortion lower
// bound for an analytic part with |A'| < Lambda.
double mobius_area(double lambda, double rho) {
  return lambda * lambda * rho + (lambda * lambda * lambda - lambda) * std::log1p(-rho / lambda);
}

// sum_k (M_k - 1/M_k) r^{k+1} (2 - r + k(1 - r)) / (1 - r)^2 over k = first..,
// with k counted from `first`. Zero-excess terms are skipped so that M_k = 1
// stays finite at r = 1.
double modulus_sum(double r, const std::vector<double>& moduli, std::size_t first) {
  double acc = 0.0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const double c = excess(moduli[i]);
    if (c == 0.0) continue;
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    const double k = double(first + i);
    const double om = 1.0 - r;
    acc += c * std::pow(r, k + 1.0) * (2.0 - r + k * om) / (om * om);
  }
  return acc;
}

// sum_{k=1}^{p-1} (k+1) r^k
double unit_derivative_sum(double r, std::size_t p) {
  double acc = 0.0;
  double power = r;
  for (std::size_t k = 1; k < p; ++k) {
    acc += double(k + 1) * power;
    power *= r;
  }
  return acc;
}

// sum_{k=1}^{p-1} rho^{k+1} = rho^2 (1 - rho^{p-1}) / (1 - rho)
double geometric_tail(double rho, std::size_t p) {
  double acc = 0.0;
  double power = rho * rho;
  for (std::size_t k = 1; k < p; ++k) {
    acc += power;
    power *= rho;
  }
  return acc;
}

// sum_k (M_k - 1/M_k) rho^{k+2} / (1 - rho), k counted from `first`.
double modulus_tail(double rho, const std::vector<double>& moduli, std::size_t first) {
  double acc = 0.0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const double c = excess(moduli[i]);
    if (c == 0.0) continue;
    acc += c * std::pow(rho, double(first + i) + 2.0) / (1.0 - rho);
  }
  return acc;
}

// Solves g = 0 on [0, hi]. When hi is itself a zero up to rounding the
// endpoint is returned as the root.
template <class G>
RootResult solve_decreasing(G&& g, double hi) {
  const double g_hi = g(hi);
  if (g_hi > 0.0 && g_hi < 64.0 * std::numeric_limits<double>::epsilon())
    return {hi, g_hi, 0};
  return find_root_monotone(g, 0.0, hi);
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ClassicalLandau: return "landau";
    case TheoremId::TheoremA: return "A";
    case TheoremId::TheoremB: return "B";
    case TheoremId::TheoremC: return "C";
    default: return std::to_string(static_cast<int>(id));
  }
}

DerivAll::DerivAll(double lambda0, std::vector<double> lambdas)
    : lambda0_(lambda0), lambdas_(std::move(lambdas)) {
  require(std::isfinite(lambda0_) && lambda0_ > 1.0, "DerivAll: hypothesis Lambda_0 > 1 violated");
  for (double l : lambdas_)
    require(std::isfinite(l) && l >= 0.0, "DerivAll: hypothesis Lambda_k >= 0 violated");
}

DerivNormalized::DerivNormalized(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
  for (double l : lambdas_)
    require(std::isfinite(l) && l >= 0.0, "DerivNormalized: hypothesis Lambda_k >= 0 violated");
}

ModulusAll::ModulusAll(std::vector<double> moduli) : moduli_(std::move(moduli)) {
  require(!moduli_.empty(), "ModulusAll: need at least one bound M_0 (p >= 1)");
  for (double m : moduli_)
    require(std::isfinite(m) && m >= 1.0, "ModulusAll: hypothesis M_k >= 1 violated");
}

MixedDerivModulus::MixedDerivModulus(double lambda, std::vector<double> moduli)
    : lambda_(lambda), moduli_(std::move(moduli)) {
  require(std::isfinite(lambda_) && lambda_ > 1.0,
          "MixedDerivModulus: hypothesis Lambda > 1 violated");
  for (double m : moduli_)
    require(std::isfinite(m) && m >= 1.0, "MixedDerivModulus: hypothesis M_k >= 1 violated");
}

std::size_t profile_order(const BoundProfile& b) {
  return std::visit([](const auto& v) { return v.order(); }, b);
}

double g1(double r, const DerivAll& b) {
  require_unit_interval(r, "g1");
  double sum = 0.0;
  double power = r;
  for (std::size_t k = 1; k < b.order(); ++k) {
    sum += double(k + 1) * b.lambdas()[k - 1] * power;
    power *= r;
  }
  return mobius_term(b.lambda0(), r) - sum;
}

double g_normalized(double r, const DerivNormalized& b) {
  require_unit_interval(r, "g_normalized");
  double sum = 0.0;
  double power = r;
  for (std::size_t k = 1; k < b.order(); ++k) {
    sum += double(k + 1) * b.lambdas()[k - 1] * power;
    power *= r;
  }
  return 1.0 - sum;
}

double g2(double r, const ModulusAll& b) {
  require_unit_interval(r, "g2");
  return 1.0 - modulus_sum(r, b.moduli(), 0) - unit_derivative_sum(r, b.order());
}

double g3(double r, const MixedDerivModulus& b) {
  require_unit_interval(r, "g3");
  return mobius_term(b.lambda(), r) - modulus_sum(r, b.moduli(), 1) -
         unit_derivative_sum(r, b.order());
}

RadiiResult rho_sigma_thm1(const DerivAll& b) {
  RadiiResult out;
  out.theorem = TheoremId::T1;
  const double hi = 1.0 / b.lambda0();
  const bool no_tail = std::all_of(b.lambdas().begin(), b.lambdas().end(),
                                   [](double l) { return l == 0.0; });
  if (no_tail) {
    out.rho = hi;
    out.residual = std::abs(g1(hi, b));
  } else {
    const auto root = solve_decreasing([&](double r) { return g1(r, b); }, hi);
    out.rho = root.x;
    out.residual = root.residual;
    out.iterations = root.iterations;
  }
  double tail = 0.0;
  for (std::size_t k = 1; k < b.order(); ++k)
    tail += b.lambdas()[k - 1] * std::pow(out.rho, double(k + 1));
  out.sigma = mobius_area(b.lambda0(), out.rho) - tail;
  out.degenerate = !(out.sigma > 0.0);
  return out;
}

RadiiResult rho_sigma_thm2(const DerivNormalized& b) {
  RadiiResult out;
  out.theorem = TheoremId::T2;
  double weight = 0.0;
  for (std::size_t k = 1; k < b.order(); ++k) weight += double(k + 1) * b.lambdas()[k - 1];
  if (weight <= 1.0) {
    out.rho = 1.0;
  } else {
    const auto root = find_root_monotone([&](double r) { return g_normalized(r, b); }, 0.0, 1.0);
    out.rho = root.x;
    out.residual = root.residual;
    out.iterations = root.iterations;
  }
  double tail = 0.0;
  for (std::size_t k = 1; k < b.order(); ++k)
    tail += b.lambdas()[k - 1] * std::pow(out.rho, double(k + 1));
  out.sigma = out.rho - tail;
  out.degenerate = !(out.sigma > 0.0);
  return out;
}

RadiiResult rho_sigma_thm3(const ModulusAll& b) {
  RadiiResult out;
  out.theorem = TheoremId::T3;
  const auto g = [&](double r) { return g2(r, b); };
  const bool flat = std::all_of(b.moduli().begin(), b.moduli().end(),
                                [](double m) { return excess(m) == 0.0; });
  if (flat && b.order() == 1) {
    // F = z: injective on the whole disk.
    out.rho = 1.0;
  } else {
    const double g_clamp = g(kUpperClamp);
    if (!(g_clamp <= 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "rho_sigma_thm3: no sign change below the clamp r = " << kUpperClamp
          << " (g2 = " << g_clamp << ")";
      throw PreconditionError(msg.str());
    }
    const auto root = find_root_monotone(g, 0.0, kUpperClamp);
    out.rho = root.x;
    out.residual = root.residual;
    out.iterations = root.iterations;
  }
  out.sigma = out.rho - geometric_tail(out.rho, b.order()) - modulus_tail(out.rho, b.moduli(), 0);
  out.degenerate = !(out.sigma > 0.0);
  return out;
}

RadiiResult rho_sigma_thm4(const MixedDerivModulus& b) {
  RadiiResult out;
  out.theorem = TheoremId::T4;
  const double hi = std::min(1.0 / b.lambda(), kUpperClamp);
  const auto g = [&](double r) { return g3(r, b); };
  const double g_hi = g(hi);
  if (!(g_hi < 64.0 * std::numeric_limits<double>::epsilon())) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "rho_sigma_thm4: no sign change below the clamp r = " << hi << " (g3 = " << g_hi
        << ")";
    throw PreconditionError(msg.str());
  }
  const auto root = solve_decreasing(g, hi);
  out.rho = root.x;
  out.residual = root.residual;
  out.iterations = root.iterations;
  out.sigma = mobius_area(b.lambda(), out.rho) - geometric_tail(out.rho, b.order()) -
              modulus_tail(out.rho, b.moduli(), 1);
  out.degenerate = !(out.sigma > 0.0);
  return out;
}

RadiiResult log_variant(const RadiiResult& res) {
  if (!(res.sigma > 0.0)) {
    std::ostringstream msg;
    msg << "log_variant: sigma = " << res.sigma << " <= 0, no covered disk";
    throw DegenerateResult(msg.str());
  }
  RadiiResult out = res;
  switch (res.theorem) {
    case TheoremId::T1: out.theorem = TheoremId::T5; break;
    case TheoremId::T2: out.theorem = TheoremId::T6; break;
    case TheoremId::T3: out.theorem = TheoremId::T7; break;
    case TheoremId::T4: out.theorem = TheoremId::T8; break;
    default: break;
  }
  out.w = std::cosh(res.sigma);
  out.r = std::sinh(res.sigma);
  out.sharpness_caveat = res.sigma >= 1.0;
  return out;
}

double modulus_to_log_bound(double m_star) {
  if (!(std::isfinite(m_star) && m_star > 1.0))
    throw DomainError("modulus_to_log_bound: hypothesis M* > 1 violated");
  return std::log(m_star) + std::numbers::pi;
}

RadiiResult rho_sigma_thm5(const DerivAll& b) { return log_variant(rho_sigma_thm1(b)); }

RadiiResult rho_sigma_thm6(const DerivNormalized& b) { return log_variant(rho_sigma_thm2(b)); }

RadiiResult rho_sigma_thm7(const std::vector<double>& m_stars) {
  std::vector<double> moduli;
  moduli.reserve(m_stars.size());
  for (double m : m_stars) moduli.push_back(modulus_to_log_bound(m));
  return log_variant(rho_sigma_thm3(ModulusAll(std::move(moduli))));
}

RadiiResult rho_sigma_thm8(double lambda, const std::vector<double>& m_stars) {
  std::vector<double> moduli;
  moduli.reserve(m_stars.size());
  for (double m : m_stars) moduli.push_back(modulus_to_log_bound(m));
  return log_variant(rho_sigma_thm4(MixedDerivModulus(lambda, std::move(moduli))));
}

RadiiResult rho_sigma(const BoundProfile& b) {
  struct Dispatch {
    RadiiResult operator()(const DerivAll& v) const { return rho_sigma_thm1(v); }
    RadiiResult operator()(const DerivNormalized& v) const { return rho_sigma_thm2(v); }
    RadiiResult operator()(const ModulusAll& v) const { return rho_sigma_thm3(v); }
    RadiiResult operator()(const MixedDerivModulus& v) const { return rho_sigma_thm4(v); }
  };
  return std::visit(Dispatch{}, b);
}

BaselineRadii classical_landau_baseline(double M) {
  require(std::isfinite(M) && M > 1.0, "classical_landau_baseline: hypothesis M > 1 violated");
  const double r0 = 1.0 / (M + std::sqrt(M * M - 1.0));
  return {r0, M * r0 * r0};
}

BaselineRadii theoremA_baseline(double lambda1, double lambda2) {
  require(std::isfinite(lambda1) && lambda1 >= 0.0,
          "theoremA_baseline: hypothesis Lambda_1 >= 0 violated");
  require(std::isfinite(lambda2) && lambda2 > 1.0,
          "theoremA_baseline: hypothesis Lambda_2 > 1 violated");
  const double s = lambda2 * (2.0 * lambda1 + lambda2);
  const double disc = std::max(0.0, s * s - 8.0 * lambda1 * lambda2);
  const double r1 = 2.0 * lambda2 / (s + std::sqrt(disc));
  return {r1, mobius_area(lambda2, r1) - lambda1 * r1 * r1};
}

BaselineRadii theoremB_baseline(double lambda) {
  require(std::isfinite(lambda) && lambda >= 0.0,
          "theoremB_baseline: hypothesis Lambda >= 0 violated");
  const double r2 = lambda <= 0.5 ? 1.0 : 1.0 / (2.0 * lambda);
  return {r2, r2 - lambda * r2 * r2};
}

BaselineRadii theoremC_baseline(double M, int p) {
  require(std::isfinite(M) && M > 1.0, "theoremC_baseline: hypothesis M > 1 violated");
  require(p >= 1, "theoremC_baseline: order p must be at least 1");
  const auto g = [M, p](double r) {
    const double om = 1.0 - r;
    double sum = r * (2.0 - r);
    double power = r;
    for (int k = 1; k < p; ++k) {
      sum += power * (1.0 + k - k * r);
      power *= r;
    }
    return 1.0 - M * sum / (om * om);
  };
  const double r3 = find_root_monotone(g, 0.0, kUpperClamp).x;
  double tail = 0.0;
  for (int k = 0; k < p; ++k) tail += std::pow(r3, k + 2.0) / (1.0 - r3);
  return {r3, r3 - geometric_tail(r3, std::size_t(p)) - M * tail};
}

}  // namespace landau
