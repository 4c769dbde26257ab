#include "landau/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/kernels.hpp"

namespace landau::verify {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* kInjectivityNote =
    "necessary-condition evidence only: a finite sample cannot prove injectivity";

const char* kCoverageNote =
    "F(0) = 0, F injective on U_rho and |F| >= sigma on the boundary circle imply, by the "
    "argument principle, that every w with |w| < sigma has one preimage in U_rho; winding "
    "numbers are not checked";

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

VerificationReport injectivity_report(std::string name, std::span<const Complex> points,
                                      std::span<const Complex> values, double margin) {
  const auto best = kernels::min_pair_ratio(points, values);
  VerificationReport rep;
  rep.check_name = std::move(name);
  rep.measured_margin = best.ratio;
  rep.passed = best.ratio >= margin;
  if (std::isfinite(best.ratio))
    rep.witness = {{points[best.i], values[best.i]}, {points[best.j], values[best.j]}};
  rep.note = kInjectivityNote;
  return rep;
}

std::vector<Complex> with_extras(std::vector<Complex> pts, std::span<const Complex> extras) {
  pts.insert(pts.end(), extras.begin(), extras.end());
  return pts;
}

void require_radius(double r, const char* where) {
  if (!(r > 0.0 && r <= 1.0)) {
    std::ostringstream msg;
    msg << where << ": radius " << r << " outside (0, 1]";
    throw PreconditionError(msg.str());
  }
}

}  // namespace

GridSpec::GridSpec(int radial_count, int angular_count, double margin)
    : radial_(radial_count), angular_(angular_count), margin_(margin) {
  if (radial_ < 8 || angular_ < 8) throw PreconditionError("GridSpec: counts must be >= 8");
  if (!(margin_ > 0.0)) throw PreconditionError("GridSpec: margin must be positive");
}

std::vector<Complex> polar_grid(double radius, const GridSpec& grid) {
  std::vector<Complex> pts;
  pts.reserve(std::size_t(grid.radial_count()) * std::size_t(grid.angular_count()));
  for (int i = 0; i < grid.radial_count(); ++i) {
    const double rr = radius * (i + 0.5) / grid.radial_count();
    for (int j = 0; j < grid.angular_count(); ++j)
      pts.push_back(std::polar(rr, kTwoPi * j / grid.angular_count()));
  }
  return pts;
}

std::vector<Complex> closed_polar_grid(double radius, const GridSpec& grid) {
  std::vector<Complex> pts;
  pts.reserve(std::size_t(grid.radial_count()) * std::size_t(grid.angular_count()));
  for (int i = 0; i < grid.radial_count(); ++i) {
    const double rr = radius * (i + 1.0) / grid.radial_count();
    for (int j = 0; j < grid.angular_count(); ++j)
      pts.push_back(std::polar(rr, kTwoPi * j / grid.angular_count()));
  }
  return pts;
}

std::vector<Complex> circle_points(Complex center, double radius, int count) {
  std::vector<Complex> pts;
  pts.reserve(std::size_t(std::max(count, 0)));
  for (int j = 0; j < count; ++j) pts.push_back(center + std::polar(radius, kTwoPi * j / count));
  return pts;
}

std::vector<Complex> sample_disk(Complex center, double radius, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> pts;
  pts.reserve(std::size_t(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    const double u = uniform01(rng);
    const double v = uniform01(rng);
    pts.push_back(center + std::polar(radius * std::sqrt(u), kTwoPi * v));
  }
  return pts;
}

VerificationReport univalence_grid_check(const PolyAnalyticFn& f, double r,
                                         const GridSpec& grid,
                                         std::span<const Complex> extra_points) {
  require_radius(r, "univalence_grid_check");
  const auto pts = with_extras(polar_grid(r, grid), extra_points);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return poly_eval(f, z); });
  return injectivity_report("univalence_grid", pts, vals, grid.margin());
}

VerificationReport univalence_grid_check(const LogPAnalyticFn& f, double r,
                                         const GridSpec& grid,
                                         std::span<const Complex> extra_points) {
  require_radius(r, "univalence_grid_check");
  const auto pts = with_extras(polar_grid(r, grid), extra_points);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return logp_eval(f, z); });
  return injectivity_report("univalence_grid_log", pts, vals, grid.margin());
}

VerificationReport schlicht_coverage_check(const PolyAnalyticFn& f, double rho, double sigma,
                                           int boundary_samples, double margin) {
  require_radius(rho, "schlicht_coverage_check");
  if (std::abs(poly_eval(f, Complex{})) != 0.0)
    throw PreconditionError("schlicht_coverage_check: requires F(0) = 0");
  if (boundary_samples < 1) throw PreconditionError("schlicht_coverage_check: no samples");
  const auto pts = circle_points({}, rho, boundary_samples);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return poly_eval(f, z); });
  const auto low = kernels::min_distance(vals);
  VerificationReport rep;
  rep.check_name = "schlicht_coverage";
  rep.measured_margin = low.value - sigma;
  rep.passed = low.value >= sigma - margin;
  rep.witness = {{pts[low.index], vals[low.index]}};
  rep.note = std::string("min |F| on |z| = ") + fmt(rho) + " is " + fmt(low.value) +
             " against sigma = " + fmt(sigma) + "; " + kCoverageNote;
  return rep;
}

VerificationReport log_coverage_check(const LogPAnalyticFn& f, double rho, double center,
                                      double radius, int boundary_samples, double margin) {
  require_radius(rho, "log_coverage_check");
  if (boundary_samples < 1) throw PreconditionError("log_coverage_check: no samples");
  const auto pts = circle_points({}, rho, boundary_samples);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return logp_eval(f, z); });
  const auto low = kernels::min_distance(vals, Complex{center});
  VerificationReport rep;
  rep.check_name = "log_coverage";
  rep.measured_margin = low.value - radius;
  rep.passed = low.value >= radius - margin;
  rep.witness = {{pts[low.index], vals[low.index]}};
  rep.note = std::string("min |f - w| on |z| = ") + fmt(rho) + " is " + fmt(low.value) +
             " against r = " + fmt(radius) + "; f(0) = 1 lies in the disk and f is injective "
             "on U_rho, so the boundary condition gives containment";
  return rep;
}

VerificationReport deriv_bound_check(const TruncatedTaylorSeries& a, double lambda,
                                     const GridSpec& grid) {
  const auto da = series_derivative(a);
  const auto pts = closed_polar_grid(kInteriorRadius, grid);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return da.eval_unchecked(z); });
  const auto high = kernels::max_distance(vals);
  VerificationReport rep;
  rep.check_name = "deriv_bound";
  rep.measured_margin = lambda - high.value;
  rep.passed = high.value <= lambda + grid.margin();
  rep.witness = {{pts[high.index], vals[high.index]}};
  rep.note = "max |A'| = " + fmt(high.value) + " against Lambda = " + fmt(lambda);
  return rep;
}

VerificationReport modulus_bound_check(const TruncatedTaylorSeries& a, double M,
                                       const GridSpec& grid) {
  const auto pts = closed_polar_grid(kInteriorRadius, grid);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return a.eval_unchecked(z); });
  const auto high = kernels::max_distance(vals);
  VerificationReport rep;
  rep.check_name = "modulus_bound";
  rep.measured_margin = M - high.value;
  rep.passed = high.value <= M + grid.margin();
  rep.witness = {{pts[high.index], vals[high.index]}};
  rep.note = "max |A| = " + fmt(high.value) + " against M = " + fmt(M);
  return rep;
}

VerificationReport coefficient_bound_check(const TruncatedTaylorSeries& a, double M,
                                           double margin) {
  if (std::abs(a[0]) != 0.0 || std::abs(std::abs(a[1]) - 1.0) > 1e-12)
    throw PreconditionError("coefficient_bound_check: requires c_0 = 0 and |c_1| = 1");
  const double bound = M - 1.0 / M;
  VerificationReport rep;
  rep.check_name = "coefficient_bound";
  double worst = 0.0;
  std::size_t worst_n = 0;
  for (std::size_t n = 2; n <= a.degree(); ++n) {
    const double m = std::abs(a[n]);
    if (m > worst) {
      worst = m;
      worst_n = n;
    }
  }
  rep.measured_margin = bound - worst;
  rep.passed = worst <= bound + margin;
  if (worst_n != 0) rep.witness = {{Complex(double(worst_n)), a[worst_n]}};
  rep.note = "max |c_n| (n >= 2) = " + fmt(worst) + " at n = " + std::to_string(worst_n) +
             " against M - 1/M = " + fmt(bound) + "; witness z holds the index n";
  return rep;
}

VerificationReport distortion_check(const TruncatedTaylorSeries& h, double lambda, double r,
                                    int pair_samples, std::uint64_t seed, double margin) {
  if (std::abs(std::abs(h[1]) - 1.0) > 1e-12)
    throw PreconditionError("distortion_check: requires |H'(0)| = 1");
  if (!(r > 0.0 && r * lambda < 1.0))
    throw PreconditionError("distortion_check: requires 0 < r < 1/Lambda");
  const auto slope = deriv_bound_check(h, lambda);
  if (!(slope.measured_margin > 0.0))
    throw PreconditionError("distortion_check: sampled |H'| reaches Lambda");
  if (pair_samples < 1) throw PreconditionError("distortion_check: no samples");

  const double bound = lambda * (1.0 - lambda * r) / (lambda - r);
  const auto first = sample_disk({}, r, pair_samples, seed);
  const auto second = sample_disk({}, r, pair_samples, seed + 0x9e3779b97f4a7c15ULL);
  std::vector<Complex> ratios(first.size());
  const long n = long(first.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto k = std::size_t(i);
    const double dz = std::abs(first[k] - second[k]);
    ratios[k] = dz == 0.0 ? Complex{std::numeric_limits<double>::infinity()}
                          : Complex{std::abs(h.eval_unchecked(first[k]) -
                                             h.eval_unchecked(second[k])) / dz};
  }
  const auto low = kernels::min_distance(ratios);
  VerificationReport rep;
  rep.check_name = "distortion";
  rep.measured_margin = low.value - bound;
  rep.passed = low.value >= bound - margin;
  rep.witness = {{first[low.index], h.eval_unchecked(first[low.index])},
                 {second[low.index], h.eval_unchecked(second[low.index])}};
  rep.note = "min chord ratio " + fmt(low.value) + " against bound " + fmt(bound);
  return rep;
}

VerificationReport distortion_boundary_check(const TruncatedTaylorSeries& h, double lambda,
                                             double r, int boundary_samples, double margin) {
  if (!(r > 0.0 && r < 1.0 && lambda > 1.0))
    throw PreconditionError("distortion_boundary_check: requires 0 < r < 1 and Lambda > 1");
  const double bound =
      lambda * lambda * r + (lambda * lambda * lambda - lambda) * std::log1p(-r / lambda);
  const auto pts = circle_points({}, r, boundary_samples);
  const auto vals = kernels::map_points(pts, [&](Complex z) { return h.eval_unchecked(z); });
  const auto low = kernels::min_distance(vals);
  VerificationReport rep;
  rep.check_name = "distortion_boundary";
  rep.measured_margin = low.value - bound;
  rep.passed = low.value >= bound - margin;
  rep.witness = {{pts[low.index], vals[low.index]}};
  rep.note = "min |H| on |z| = " + fmt(r) + " is " + fmt(low.value) + " against " + fmt(bound);
  return rep;
}

VerificationReport exp_disk_check(double sigma, int samples, std::uint64_t seed) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw PreconditionError("exp_disk_check: requires 0 < sigma < 1");
  const double center = std::cosh(sigma);
  const double radius = std::sinh(sigma);
  auto pts = sample_disk(Complex{center}, radius, samples, seed);
  pts.insert(pts.begin(), Complex{center});
  const auto logs = kernels::map_points(pts, [](Complex w) { return principal_log(w); });
  const auto high = kernels::max_distance(logs);
  VerificationReport rep;
  rep.check_name = "exp_disk";
  rep.measured_margin = sigma - high.value;
  rep.passed = high.value < sigma;
  rep.witness = {{pts[high.index], logs[high.index]}};
  rep.note = "max |Log w| over " + std::to_string(pts.size()) + " samples of U(cosh s, sinh s) is " +
             fmt(high.value) + " against s = " + fmt(sigma);
  return rep;
}

VerificationReport monotonicity_check(const std::function<double(double)>& g, double lo,
                                      double hi, int samples) {
  if (!(lo < hi)) throw PreconditionError("monotonicity_check: requires lo < hi");
  if (samples < 2) throw PreconditionError("monotonicity_check: need at least two samples");
  VerificationReport rep;
  rep.check_name = "monotonicity";
  rep.measured_margin = std::numeric_limits<double>::infinity();
  double prev_x = lo;
  double prev = g(lo);
  for (int i = 1; i < samples; ++i) {
    const double x = i + 1 == samples ? hi : lo + (hi - lo) * i / (samples - 1);
    const double v = g(x);
    // NaN drops compare false and count as a failure
    const double drop = prev - v;
    if (!(drop >= rep.measured_margin)) {
      rep.measured_margin = std::isnan(drop) ? -std::numeric_limits<double>::infinity() : drop;
      rep.witness = {{Complex(prev_x), Complex(prev)}, {Complex(x), Complex(v)}};
    }
    prev = v;
    prev_x = x;
  }
  rep.passed = rep.measured_margin > 0.0;
  rep.note = "smallest consecutive decrease over " + std::to_string(samples) + " samples";
  return rep;
}

namespace {

struct AuditState {
  VerificationReport rep;
  std::ostringstream log;
  bool first = true;

  void add(const VerificationReport& sub, const std::string& label) {
    log << (first ? "" : "; ") << label << (sub.passed ? " ok" : " FAILED") << " ("
        << fmt(sub.measured_margin) << ")";
    first = false;
    const bool take_witness = (!sub.passed && rep.passed) ||
                              (rep.passed && sub.measured_margin < rep.measured_margin);
    if (take_witness) rep.witness = sub.witness;
    rep.measured_margin = std::min(rep.measured_margin, sub.measured_margin);
    rep.passed = rep.passed && sub.passed;
  }

  void fail(const std::string& label) {
    log << (first ? "" : "; ") << label << " FAILED";
    first = false;
    rep.passed = false;
  }
};

}  // namespace

VerificationReport hypothesis_audit(const PolyAnalyticFn& f, const BoundProfile& b,
                                    const GridSpec& grid) {
  AuditState st;
  st.rep.check_name = "hypothesis_audit";
  st.rep.passed = true;
  st.rep.measured_margin = std::numeric_limits<double>::infinity();

  const std::size_t p = profile_order(b);
  if (f.order() != p) {
    st.fail("order " + std::to_string(f.order()) + " != profile order " + std::to_string(p));
    st.rep.note = st.log.str();
    return st.rep;
  }
  for (std::size_t k = 0; k < p; ++k)
    if (f.component(k)[0] != Complex{}) st.fail("A_" + std::to_string(k) + "(0) = 0");
  if (f.component(0)[1] != Complex{1.0}) st.fail("A_0'(0) = 1");

  const auto unit_slopes = [&] {
    for (std::size_t k = 1; k < p; ++k)
      if (f.component(k)[1] != Complex{1.0}) st.fail("A_" + std::to_string(k) + "'(0) = 1");
  };

  struct Visit {
    const PolyAnalyticFn& f;
    const GridSpec& grid;
    AuditState& st;
    const decltype(unit_slopes)& slopes;

    void operator()(const DerivAll& v) const {
      st.add(deriv_bound_check(f.component(0), v.lambda0(), grid), "|A_0'| < Lambda_0");
      for (std::size_t k = 1; k < v.order(); ++k)
        st.add(deriv_bound_check(f.component(k), v.lambdas()[k - 1], grid),
               "|A_" + std::to_string(k) + "'| <= Lambda_" + std::to_string(k));
    }
    void operator()(const DerivNormalized& v) const {
      st.add(deriv_bound_check(f.component(0), 1.0, grid), "|A_0'| <= 1");
      const auto& a0 = f.component(0);
      bool identity = true;
      for (std::size_t n = 0; n <= a0.degree(); ++n)
        if (a0[n] != (n == 1 ? Complex{1.0} : Complex{})) identity = false;
      if (identity)
        st.log << "; A_0 == z coefficientwise";
      else
        st.fail("A_0 == z (forced by the Schwarz lemma)");
      for (std::size_t k = 1; k < v.order(); ++k)
        st.add(deriv_bound_check(f.component(k), v.lambdas()[k - 1], grid),
               "|A_" + std::to_string(k) + "'| <= Lambda_" + std::to_string(k));
    }
    void operator()(const ModulusAll& v) const {
      slopes();
      for (std::size_t k = 0; k < v.order(); ++k)
        st.add(modulus_bound_check(f.component(k), v.moduli()[k], grid),
               "|A_" + std::to_string(k) + "| <= M_" + std::to_string(k));
    }
    void operator()(const MixedDerivModulus& v) const {
      slopes();
      st.add(deriv_bound_check(f.component(0), v.lambda(), grid), "|A_0'| < Lambda");
      for (std::size_t k = 1; k < v.order(); ++k)
        st.add(modulus_bound_check(f.component(k), v.moduli()[k - 1], grid),
               "|A_" + std::to_string(k) + "| <= M_" + std::to_string(k));
    }
  };
  std::visit(Visit{f, grid, st, unit_slopes}, b);
  st.rep.note = "normalization checked exactly; " + st.log.str();
  return st.rep;
}

}  // namespace landau::verify
