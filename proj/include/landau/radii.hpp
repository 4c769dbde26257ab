#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

enum class TheoremId {
  T1 = 1, T2, T3, T4, T5, T6, T7, T8,
  ClassicalLandau, TheoremA, TheoremB, TheoremC,
};

std::string to_string(TheoremId id);

/// Derivative bounds |A_0'| < lambda0 (> 1) and |A_k'| <= lambdas[k-1] (>= 0).
class DerivAll {
 public:
  DerivAll(double lambda0, std::vector<double> lambdas);
  double lambda0() const { return lambda0_; }
  /// Lambda_1 .. Lambda_{p-1}.
  const std::vector<double>& lambdas() const { return lambdas_; }
  std::size_t order() const { return lambdas_.size() + 1; }

 private:
  double lambda0_;
  std::vector<double> lambdas_;
};

/// The Lambda_0 = 1 case: A_0 reduces to z by the Schwarz lemma.
class DerivNormalized {
 public:
  explicit DerivNormalized(std::vector<double> lambdas);
  const std::vector<double>& lambdas() const { return lambdas_; }
  std::size_t order() const { return lambdas_.size() + 1; }

 private:
  std::vector<double> lambdas_;
};

/// Modulus bounds |A_k| <= M_k for k = 0..p-1. M_k = 1 is accepted and forces
/// A_k = z.
class ModulusAll {
 public:
  explicit ModulusAll(std::vector<double> moduli);
  const std::vector<double>& moduli() const { return moduli_; }
  std::size_t order() const { return moduli_.size(); }

 private:
  std::vector<double> moduli_;
};

/// |A_0'| < lambda (> 1) and |A_k| <= moduli[k-1] for k = 1..p-1.
class MixedDerivModulus {
 public:
  MixedDerivModulus(double lambda, std::vector<double> moduli);
  double lambda() const { return lambda_; }
  /// M_1 .. M_{p-1}.
  const std::vector<double>& moduli() const { return moduli_; }
  std::size_t order() const { return moduli_.size() + 1; }

 private:
  double lambda_;
  std::vector<double> moduli_;
};

using BoundProfile = std::variant<DerivAll, DerivNormalized, ModulusAll, MixedDerivModulus>;

std::size_t profile_order(const BoundProfile& b);

struct RadiiResult {
  TheoremId theorem{TheoremId::T1};
  double rho{};
  double sigma{};
  /// Center and radius of the covered disk for the log-p-analytic theorems.
  std::optional<double> w;
  std::optional<double> r;
  /// |g(rho)|; zero when rho came from a closed branch.
  double residual{};
  int iterations{};
  /// sigma <= 0: no covered disk is asserted.
  bool degenerate{};
  /// sigma >= 1: containment holds but the sinh(sigma) sharpness argument does not apply.
  bool sharpness_caveat{};
};

struct BaselineRadii {
  double r{};
  double R{};
};

inline constexpr double kBisectionTol = 1e-13;
inline constexpr int kMaxBisectionIter = 200;
/// Upper bracket for root equations with a pole at r = 1.
inline constexpr double kUpperClamp = 1.0 - 1e-9;

struct RootResult {
  double x{};
  double residual{};
  int iterations{};
};

/// Bisection for the unique zero of a continuous, strictly decreasing g on
/// [lo, hi] with g(lo) > 0 >= g(hi). The returned x satisfies
/// g(x - tol) > 0 >= g(x + tol).
template <class G>
RootResult find_root_monotone(G&& g, double lo, double hi, double tol = kBisectionTol,
                              int max_iter = kMaxBisectionIter) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi) || !(tol > 0.0))
    throw PreconditionError("find_root_monotone: need finite lo < hi and tol > 0");
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (!(g_lo > 0.0) || !(g_hi <= 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "find_root_monotone: bracket violated, g(" << lo << ") = " << g_lo << ", g(" << hi
        << ") = " << g_hi << " (need g(lo) > 0 >= g(hi))";
    throw PreconditionError(msg.str());
  }
  int iter = 0;
  while (hi - lo >= tol && iter < max_iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    ++iter;
  }
  const double x = lo + 0.5 * (hi - lo);
  return {x, std::abs(g(x)), iter};
}

/// Root function for the derivative-bounded class; strictly decreasing on [0, 1].
double g1(double r, const DerivAll& b);
/// 1 - sum (k+1) Lambda_k r^k, the root function of the Lambda_0 = 1 case.
double g_normalized(double r, const DerivNormalized& b);
/// Root function for the modulus-bounded class; tends to -inf as r -> 1.
double g2(double r, const ModulusAll& b);
/// Root function for the mixed class. The modulus sum runs over k = 1..p-1,
/// matching the hypotheses (only M_1..M_{p-1} are bounded).
double g3(double r, const MixedDerivModulus& b);

RadiiResult rho_sigma_thm1(const DerivAll& b);
RadiiResult rho_sigma_thm2(const DerivNormalized& b);
RadiiResult rho_sigma_thm3(const ModulusAll& b);
RadiiResult rho_sigma_thm4(const MixedDerivModulus& b);

/// Attaches w = cosh(sigma), r = sinh(sigma) and relabels theorems 1-4 as 5-8.
/// Throws DegenerateResult when sigma <= 0; sets sharpness_caveat when sigma >= 1.
RadiiResult log_variant(const RadiiResult& res);

/// ln(m_star) + pi, the modulus bound on A_k = log a_k implied by |a_k| <= m_star.
double modulus_to_log_bound(double m_star);

RadiiResult rho_sigma_thm5(const DerivAll& b);
RadiiResult rho_sigma_thm6(const DerivNormalized& b);
/// m_stars = M_0*..M_{p-1}*.
RadiiResult rho_sigma_thm7(const std::vector<double>& m_stars);
/// m_stars = M_1*..M_{p-1}*.
RadiiResult rho_sigma_thm8(double lambda, const std::vector<double>& m_stars);

/// Dispatch on the profile variant (theorems 1-4).
RadiiResult rho_sigma(const BoundProfile& b);

BaselineRadii classical_landau_baseline(double M);
BaselineRadii theoremA_baseline(double lambda1, double lambda2);
BaselineRadii theoremB_baseline(double lambda);
/// Bisects the root equation of the uniform-modulus poly-analytic bound.
BaselineRadii theoremC_baseline(double M, int p);

}  // namespace landau
