#include "landau/polyfunc.hpp"

#include <cmath>

#include "landau/errors.hpp"

namespace landau {

PolyAnalyticFn::PolyAnalyticFn(std::vector<TruncatedTaylorSeries> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("PolyAnalyticFn: order p must be at least 1");
  derivatives_.reserve(components_.size());
  for (const auto& a : components_) derivatives_.push_back(series_derivative(a));
}

PolyAnalyticFn PolyAnalyticFn::normalized(std::vector<TruncatedTaylorSeries> components) {
  PolyAnalyticFn f(std::move(components));
  if (!f.is_normalized())
    throw PreconditionError("PolyAnalyticFn: normalization A_k(0)=0, A_0'(0)=1 violated");
  return f;
}

PolyAnalyticFn PolyAnalyticFn::identity() {
  return PolyAnalyticFn({TruncatedTaylorSeries::identity()});
}

bool PolyAnalyticFn::is_normalized() const {
  for (const auto& a : components_)
    if (a[0] != Complex{}) return false;
  return components_[0][1] == Complex{1.0};
}

Complex poly_eval(const PolyAnalyticFn& f, Complex z) {
  require_closed_disk(z, "poly_eval");
  const Complex zbar = std::conj(z);
  Complex power{1.0};
  Complex acc{};
  for (const auto& a : f.components()) {
    acc += power * a.eval_unchecked(z);
    power *= zbar;
  }
  return acc;
}

WirtingerPair wirtinger(const PolyAnalyticFn& f, Complex z) {
  require_closed_disk(z, "wirtinger");
  const Complex zbar = std::conj(z);
  Complex power{1.0};      // conj(z)^k
  Complex prev_power{};    // conj(z)^{k-1}, zero for k = 0
  WirtingerPair out{};
  for (std::size_t k = 0; k < f.order(); ++k) {
    out.dz += power * f.derivative(k).eval_unchecked(z);
    if (k > 0) out.dzbar += double(k) * prev_power * f.component(k).eval_unchecked(z);
    prev_power = power;
    power *= zbar;
  }
  return out;
}

Complex wirtinger_z(const PolyAnalyticFn& f, Complex z) { return wirtinger(f, z).dz; }

Complex wirtinger_zbar(const PolyAnalyticFn& f, Complex z) { return wirtinger(f, z).dzbar; }

double jacobian(const PolyAnalyticFn& f, Complex z) {
  const auto w = wirtinger(f, z);
  return std::norm(w.dz) - std::norm(w.dzbar);
}

double lambda_big(const PolyAnalyticFn& f, Complex z) {
  const auto w = wirtinger(f, z);
  return std::abs(w.dz) + std::abs(w.dzbar);
}

double lambda_small(const PolyAnalyticFn& f, Complex z) {
  const auto w = wirtinger(f, z);
  return std::abs(std::abs(w.dz) - std::abs(w.dzbar));
}

LogPAnalyticFn::LogPAnalyticFn(PolyAnalyticFn log_part) : log_part_(std::move(log_part)) {
  if (log_part_.component(0)[0] != Complex{})
    throw PreconditionError("LogPAnalyticFn: log f must vanish at the origin (f(0) = 1)");
}

Complex logp_eval(const LogPAnalyticFn& f, Complex z) {
  return std::exp(poly_eval(f.log_part(), z));
}

WirtingerPair logp_wirtinger(const LogPAnalyticFn& f, Complex z) {
  const Complex value = logp_eval(f, z);
  const auto w = wirtinger(f.log_part(), z);
  return {value * w.dz, value * w.dzbar};
}

double logp_lambda_small(const LogPAnalyticFn& f, Complex z) {
  const auto w = logp_wirtinger(f, z);
  return std::abs(std::abs(w.dz) - std::abs(w.dzbar));
}

}  // namespace landau
