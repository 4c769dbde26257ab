#include "suite.hpp"

#include <cmath>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/extremal.hpp"

namespace landau::cli {
namespace {

void require_length(const std::vector<double>& v, std::size_t n, const char* flag) {
  if (v.size() != n) {
    std::ostringstream msg;
    msg << flag << ": expected " << n << " value(s) for p, got " << v.size();
    throw DomainError(msg.str());
  }
}

std::vector<double> log_bounds(const std::vector<double>& mstars) {
  std::vector<double> out;
  for (double m : mstars) out.push_back(modulus_to_log_bound(m));
  return out;
}

bool is_log_theorem(int t) { return t >= 5 && t <= 8; }

}  // namespace

BoundProfile make_profile(const TheoremInput& in) {
  if (in.p < 1) throw DomainError("order p must be at least 1");
  const std::size_t tail = in.p - 1;
  switch (in.theorem) {
    case 1:
    case 5:
      require_length(in.lambdas, tail, "--lambdas");
      return DerivAll(in.lambda0, in.lambdas);
    case 2:
    case 6:
      require_length(in.lambdas, tail, "--lambdas");
      return DerivNormalized(in.lambdas);
    case 3:
      require_length(in.moduli, in.p, "--ms");
      return ModulusAll(in.moduli);
    case 4:
      require_length(in.moduli, tail, "--ms");
      return MixedDerivModulus(in.lambda, in.moduli);
    case 7:
      require_length(in.mstars, in.p, "--mstars");
      return ModulusAll(log_bounds(in.mstars));
    case 8:
      require_length(in.mstars, tail, "--mstars");
      return MixedDerivModulus(in.lambda, log_bounds(in.mstars));
    default:
      throw DomainError("--theorem must be in 1..8");
  }
}

RadiiResult compute_radii(const TheoremInput& in) {
  const auto profile = make_profile(in);
  const auto base = rho_sigma(profile);
  return is_log_theorem(in.theorem) ? log_variant(base) : base;
}

PolyAnalyticFn witness_function(const BoundProfile& b) {
  struct Build {
    PolyAnalyticFn operator()(const DerivAll& v) const { return as_poly_analytic(F1Family{v}); }
    PolyAnalyticFn operator()(const DerivNormalized& v) const {
      return as_poly_analytic(F2Family{v});
    }
    PolyAnalyticFn operator()(const ModulusAll& v) const {
      std::vector<TruncatedTaylorSeries> parts;
      for (double m : v.moduli()) parts.push_back(lemma_fn_series(m, 2));
      return PolyAnalyticFn::normalized(std::move(parts));
    }
    PolyAnalyticFn operator()(const MixedDerivModulus& v) const {
      std::vector<TruncatedTaylorSeries> parts{deriv_bounded_series(v.lambda())};
      for (double m : v.moduli()) parts.push_back(lemma_fn_series(m, 2));
      return PolyAnalyticFn::normalized(std::move(parts));
    }
  };
  return std::visit(Build{}, b);
}

SuiteResult run_suite(const TheoremInput& in, const SuiteOptions& opts) {
  const auto profile = make_profile(in);
  SuiteResult out;
  out.radii = rho_sigma(profile);
  const bool log_theorem = is_log_theorem(in.theorem);
  if (log_theorem && out.radii.sigma > 0.0) out.radii = log_variant(out.radii);

  const auto f = witness_function(profile);
  const double rho = out.radii.rho;
  const double sigma = out.radii.sigma;

  out.checks.push_back(verify::hypothesis_audit(f, profile, opts.grid));
  out.checks.push_back(verify::univalence_grid_check(f, opts.rho_factor * rho, opts.grid));
  if (sigma > 0.0) {
    out.checks.push_back(verify::schlicht_coverage_check(f, rho, opts.sigma_factor * sigma,
                                                         opts.boundary_samples,
                                                         opts.grid.margin()));
  } else {
    verify::VerificationReport rep;
    rep.check_name = "sigma_positive";
    rep.passed = false;
    rep.measured_margin = sigma;
    rep.witness = {{Complex(rho), Complex(sigma)}};
    rep.note = "computed sigma is not positive; no covered disk is asserted";
    out.checks.push_back(rep);
  }

  if (log_theorem) {
    const LogPAnalyticFn logf(f);
    verify::VerificationReport norm;
    norm.check_name = "log_normalization";
    const Complex f0 = logp_eval(logf, {});
    const double lam0 = logp_lambda_small(logf, {});
    norm.measured_margin = -std::max(std::abs(f0 - 1.0), std::abs(lam0 - 1.0));
    norm.passed = norm.measured_margin >= -1e-15;
    norm.witness = {{Complex{}, f0}};
    norm.note = "f(0) = 1 and lambda_f(0) = 1";
    out.checks.push_back(norm);
    out.checks.push_back(verify::univalence_grid_check(logf, opts.rho_factor * rho, opts.grid));
    if (sigma > 0.0 && sigma < 1.0)
      out.checks.push_back(verify::exp_disk_check(sigma, opts.monte_carlo_samples, opts.seed));
    if (sigma > 0.0) {
      const double s = opts.sigma_factor * sigma;
      out.checks.push_back(verify::log_coverage_check(logf, rho, std::cosh(s), std::sinh(s),
                                                      opts.boundary_samples,
                                                      opts.grid.margin()));
    }
  }

  out.passed = true;
  for (const auto& c : out.checks) out.passed = out.passed && c.passed;
  return out;
}

}  // namespace landau::cli
