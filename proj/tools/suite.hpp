#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "landau/polyfunc.hpp"
#include "landau/radii.hpp"
#include "landau/verify.hpp"

namespace landau::cli {

struct SuiteOptions {
  verify::GridSpec grid{};
  int boundary_samples = 2048;
  int monte_carlo_samples = 10000;
  std::uint64_t seed = 0;
  /// Univalence is checked on U_{rho_factor * rho}.
  double rho_factor = 0.99;
  /// Coverage is checked for the disk of radius sigma_factor * sigma.
  double sigma_factor = 0.99;
};

struct SuiteResult {
  RadiiResult radii;
  std::vector<verify::VerificationReport> checks;
  bool passed{};
};

/// Theorem inputs as given on the command line. Theorems 7 and 8 carry the
/// M* bounds in `mstars`; the others use the matching profile fields.
struct TheoremInput {
  int theorem{1};
  std::size_t p{1};
  double lambda0{};
  std::vector<double> lambdas;
  std::vector<double> moduli;
  double lambda{};
  std::vector<double> mstars;
};

/// Profile for theorems 1-4, or the derived modulus profile for 5-8.
BoundProfile make_profile(const TheoremInput& in);

RadiiResult compute_radii(const TheoremInput& in);

/// The function the oracle pipeline runs on: the extremal F_1 / F_2 for
/// theorems 1, 2, 5, 6; for the modulus-bounded theorems an admissible
/// witness whose components are the Landau extremals f_0 with modulus M_k
/// (which reduces to F_3 when every M_k = 1).
PolyAnalyticFn witness_function(const BoundProfile& b);

/// hypothesis audit, univalence on U_{0.99 rho}, coverage of U_{0.99 sigma};
/// the log-p-analytic theorems add lambda_f(0) = 1, univalence of exp F, the
/// exp-disk containment and coverage of U(cosh s, sinh s).
SuiteResult run_suite(const TheoremInput& in, const SuiteOptions& opts);

}  // namespace landau::cli
