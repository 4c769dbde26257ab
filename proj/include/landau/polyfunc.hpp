#pragma once

#include <cstddef>
#include <vector>

#include "landau/series.hpp"

namespace landau {

/// F(z) = sum_{k=0}^{p-1} conj(z)^k A_k(z), one analytic series per power of
/// conj(z).
class PolyAnalyticFn {
 public:
  /// Throws PreconditionError on an empty component list.
  explicit PolyAnalyticFn(std::vector<TruncatedTaylorSeries> components);

  /// As the constructor, additionally requiring A_k(0) = 0 for every k and
  /// A_0'(0) = 1. Theorem inputs are built through this.
  static PolyAnalyticFn normalized(std::vector<TruncatedTaylorSeries> components);

  /// p = 1, A_0 = z.
  static PolyAnalyticFn identity();

  std::size_t order() const { return components_.size(); }
  const TruncatedTaylorSeries& component(std::size_t k) const { return components_.at(k); }
  const std::vector<TruncatedTaylorSeries>& components() const { return components_; }
  /// A_k', cached at construction.
  const TruncatedTaylorSeries& derivative(std::size_t k) const { return derivatives_.at(k); }

  /// True when every A_k(0) = 0 and A_0'(0) = 1.
  bool is_normalized() const;

 private:
  std::vector<TruncatedTaylorSeries> components_;
  std::vector<TruncatedTaylorSeries> derivatives_;
};

struct WirtingerPair {
  Complex dz;
  Complex dzbar;
};

Complex poly_eval(const PolyAnalyticFn& f, Complex z);

/// F_z = sum conj(z)^k A_k'(z) and F_zbar = sum k conj(z)^{k-1} A_k(z), from
/// the component series (no differencing).
WirtingerPair wirtinger(const PolyAnalyticFn& f, Complex z);
Complex wirtinger_z(const PolyAnalyticFn& f, Complex z);
Complex wirtinger_zbar(const PolyAnalyticFn& f, Complex z);

/// |F_z|^2 - |F_zbar|^2
double jacobian(const PolyAnalyticFn& f, Complex z);
/// |F_z| + |F_zbar|
double lambda_big(const PolyAnalyticFn& f, Complex z);
/// ||F_z| - |F_zbar||
double lambda_small(const PolyAnalyticFn& f, Complex z);

/// f = exp(F) with F(0) = 0, so f(0) = 1. The product form
/// prod a_k(z)^{conj(z)^k} has a_k = exp(A_k).
class LogPAnalyticFn {
 public:
  /// Throws PreconditionError unless log_part(0) = 0.
  explicit LogPAnalyticFn(PolyAnalyticFn log_part);

  const PolyAnalyticFn& log_part() const { return log_part_; }

 private:
  PolyAnalyticFn log_part_;
};

Complex logp_eval(const LogPAnalyticFn& f, Complex z);

/// Wirtinger derivatives of f = exp(F): f_z = f F_z, f_zbar = f F_zbar.
WirtingerPair logp_wirtinger(const LogPAnalyticFn& f, Complex z);
double logp_lambda_small(const LogPAnalyticFn& f, Complex z);

}  // namespace landau
