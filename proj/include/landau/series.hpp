#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace landau {

using Complex = std::complex<double>;

/// Degree used when a series is materialized from a closed form whose
/// coefficients decay geometrically. Slowly decaying families may ask for more
/// through adaptive_degree().
inline constexpr std::size_t kDefaultDegree = 64;

/// Largest degree adaptive_degree() will return.
inline constexpr std::size_t kMaxDegree = 4096;

/// Points with |z| <= 1 + kDiskSlack are accepted as lying in the closed disk.
inline constexpr double kDiskSlack = 4.0 * 2.220446049250313e-16;

/// Smallest N >= kDefaultDegree such that ratio^N * scale < 1e-17, capped at
/// kMaxDegree. `ratio` is the geometric decay of the coefficients (< 1).
std::size_t adaptive_degree(double ratio, double scale = 1.0);

/// Throws DomainError unless |z| <= 1.
void require_closed_disk(Complex z, const char* where);

/// A(z) = sum_{n=0}^{N} c_n z^n, immutable after construction.
class TruncatedTaylorSeries {
 public:
  /// Coefficients c_0..c_N. Lists shorter than two entries are zero-padded so
  /// that the degree is at least 1. Throws DomainError on non-finite entries.
  explicit TruncatedTaylorSeries(std::vector<Complex> coeffs);

  /// The monomial z.
  static TruncatedTaylorSeries identity();

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// c_n, or zero beyond the stored degree.
  Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

  /// Horner evaluation without the disk check; callers own the domain.
  Complex eval_unchecked(Complex z) const;

  TruncatedTaylorSeries scaled(Complex factor) const;

 private:
  std::vector<Complex> coeffs_;
};

/// sum c_n z^n by Horner recurrence. Throws DomainError when |z| > 1.
Complex series_eval(const TruncatedTaylorSeries& s, Complex z);

/// Termwise derivative [1 c_1, 2 c_2, ..., N c_N]; degree floors at 1.
TruncatedTaylorSeries series_derivative(const TruncatedTaylorSeries& s);

/// log|z| + i arg z with arg in (-pi, pi]. Throws DomainError at z = 0.
Complex principal_log(Complex z);

}  // namespace landau
