#include "landau/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

std::size_t adaptive_degree(double ratio, double scale) {
  if (ratio == 0.0) return kDefaultDegree;
  if (!(ratio > 0.0) || ratio >= 1.0) return kMaxDegree;
  const double needed = std::log(1e-17 / std::max(scale, 1e-300)) / std::log(ratio);
  if (!std::isfinite(needed) || needed <= double(kDefaultDegree)) return kDefaultDegree;
  if (needed >= double(kMaxDegree)) return kMaxDegree;
  return static_cast<std::size_t>(std::ceil(needed));
}

void require_closed_disk(Complex z, const char* where) {
  if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
    std::ostringstream msg;
    msg << where << ": point " << z << " lies outside the closed unit disk";
    throw DomainError(msg.str());
  }
}

TruncatedTaylorSeries::TruncatedTaylorSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) coeffs_.resize(2);
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("TruncatedTaylorSeries: non-finite coefficient");
  }
}

TruncatedTaylorSeries TruncatedTaylorSeries::identity() {
  return TruncatedTaylorSeries({Complex{0.0}, Complex{1.0}});
}

Complex TruncatedTaylorSeries::eval_unchecked(Complex z) const {
  Complex acc = coeffs_.back();
  for (std::size_t n = coeffs_.size() - 1; n-- > 0;) acc = acc * z + coeffs_[n];
  return acc;
}

TruncatedTaylorSeries TruncatedTaylorSeries::scaled(Complex factor) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= factor;
  return TruncatedTaylorSeries(std::move(out));
}

Complex series_eval(const TruncatedTaylorSeries& s, Complex z) {
  require_closed_disk(z, "series_eval");
  return s.eval_unchecked(z);
}

TruncatedTaylorSeries series_derivative(const TruncatedTaylorSeries& s) {
  const auto c = s.coeffs();
  std::vector<Complex> out(c.size() - 1);
  for (std::size_t n = 1; n < c.size(); ++n) out[n - 1] = double(n) * c[n];
  return TruncatedTaylorSeries(std::move(out));
}

Complex principal_log(Complex z) {
  if (z == Complex{}) throw DomainError("principal_log: log of zero");
  // std::arg already returns values in (-pi, pi]; -0.0 imaginary parts would
  // map the negative axis to -pi, so normalize the sign of zero first.
  if (z.imag() == 0.0) z = Complex{z.real(), 0.0};
  return {std::log(std::abs(z)), std::arg(z)};
}

}  // namespace landau
