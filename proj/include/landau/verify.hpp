#pragma once

// Independent numerical oracles. Nothing here evaluates the radius formulas;
// radii enter only as inputs to be checked.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "landau/polyfunc.hpp"
#include "landau/radii.hpp"
#include "landau/series.hpp"

namespace landau::verify {

inline constexpr double kDefaultMargin = 1e-9;
inline constexpr double kMonteCarloMargin = 1e-6;
/// Closed-disk checks sample up to this radius.
inline constexpr double kInteriorRadius = 1.0 - 1e-3;

/// radial_count x angular_count polar sampling with a tolerance for strict
/// inequalities.
class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(int radial_count, int angular_count, double margin = kDefaultMargin);

  int radial_count() const { return radial_; }
  int angular_count() const { return angular_; }
  double margin() const { return margin_; }

 private:
  int radial_ = 32;
  int angular_ = 64;
  double margin_ = kDefaultMargin;
};

struct WitnessPoint {
  Complex z;
  Complex value;
};

struct VerificationReport {
  std::string check_name;
  bool passed{};
  /// Where the check was tightest, or where it failed.
  std::vector<WitnessPoint> witness;
  double measured_margin{};
  std::string note;
};

/// Points radius * (i + 1/2) / radial_count * e^{2 pi i j / angular_count}; all
/// lie strictly inside U_radius.
std::vector<Complex> polar_grid(double radius, const GridSpec& grid);

/// Points radius * (i + 1) / radial_count * e^{2 pi i j / angular_count}; the
/// outermost ring sits on |z| = radius.
std::vector<Complex> closed_polar_grid(double radius, const GridSpec& grid);

/// `count` points uniform on the circle |z - center| = radius, starting at angle 0.
std::vector<Complex> circle_points(Complex center, double radius, int count);

/// Area-uniform samples in the open disk |w - center| < radius, seeded.
std::vector<Complex> sample_disk(Complex center, double radius, int count, std::uint64_t seed);

/// Pairwise injectivity oracle on U_r: passes iff
/// |F(z_i) - F(z_j)| >= margin |z_i - z_j| for all sampled pairs.
/// `extra_points` are added to the grid (e.g. a known collision pair).
VerificationReport univalence_grid_check(const PolyAnalyticFn& f, double r,
                                         const GridSpec& grid = {},
                                         std::span<const Complex> extra_points = {});
VerificationReport univalence_grid_check(const LogPAnalyticFn& f, double r,
                                         const GridSpec& grid = {},
                                         std::span<const Complex> extra_points = {});

/// Passes iff min over |z| = rho of |F(z)| >= sigma - margin. Requires F(0) = 0.
VerificationReport schlicht_coverage_check(const PolyAnalyticFn& f, double rho, double sigma,
                                           int boundary_samples,
                                           double margin = kDefaultMargin);

/// Passes iff min over |z| = rho of |f(z) - center| >= radius - margin, the
/// boundary condition for U(center, radius) to lie inside f(U_rho).
VerificationReport log_coverage_check(const LogPAnalyticFn& f, double rho, double center,
                                      double radius, int boundary_samples,
                                      double margin = kDefaultMargin);

/// Passes iff max |A'(z)| <= lambda + margin over a grid reaching |z| = 1 - 1e-3.
VerificationReport deriv_bound_check(const TruncatedTaylorSeries& a, double lambda,
                                     const GridSpec& grid = {});

/// Passes iff max |A(z)| <= M + margin over a grid reaching |z| = 1 - 1e-3.
VerificationReport modulus_bound_check(const TruncatedTaylorSeries& a, double M,
                                       const GridSpec& grid = {});

/// Passes iff |c_n| <= M - 1/M + margin for every n >= 2. Requires c_0 = 0 and
/// |c_1| = 1; throws PreconditionError otherwise.
VerificationReport coefficient_bound_check(const TruncatedTaylorSeries& a, double M,
                                           double margin = kDefaultMargin);

/// Chord lower bound |H(z1) - H(z2)| >= Lambda (1 - Lambda r)/(Lambda - r) |z1 - z2|
/// on seeded random pairs in U_r. Requires |H'(0)| = 1, sampled |H'| < Lambda,
/// and 0 < r < 1/Lambda.
VerificationReport distortion_check(const TruncatedTaylorSeries& h, double lambda, double r,
                                    int pair_samples, std::uint64_t seed = 0,
                                    double margin = kDefaultMargin);

/// min over |z| = r of |H(z)| >= Lambda^2 r + (Lambda^3 - Lambda) ln(1 - r/Lambda).
VerificationReport distortion_boundary_check(const TruncatedTaylorSeries& h, double lambda,
                                             double r, int boundary_samples,
                                             double margin = kDefaultMargin);

/// Monte Carlo containment U(cosh s, sinh s) inside exp(U_s): every sample w
/// (plus the center) must satisfy |Log w| < s. Requires 0 < s < 1.
VerificationReport exp_disk_check(double sigma, int samples, std::uint64_t seed = 0);

/// Passes iff g at `samples` equispaced points of [lo, hi] is strictly decreasing.
VerificationReport monotonicity_check(const std::function<double(double)>& g, double lo,
                                      double hi, int samples);

/// Normalization (exact coefficients) plus the profile's bounds on the grid.
VerificationReport hypothesis_audit(const PolyAnalyticFn& f, const BoundProfile& b,
                                    const GridSpec& grid = {});

}  // namespace landau::verify
