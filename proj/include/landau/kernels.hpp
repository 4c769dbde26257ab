#pragma once

// Data-parallel reductions behind the verification oracles. Every kernel has
// a serial reference next to its OpenMP version; both return the same result
// (ties resolve to the lexicographically smallest index) so the parallel path
// is deterministic regardless of thread count.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "landau/series.hpp"

namespace landau::kernels {

struct PairExtremum {
  double ratio{};
  std::size_t i{};
  std::size_t j{};
};

/// min over pairs i < j with z_i != z_j of |v_i - v_j| / |z_i - z_j|.
/// Returns ratio = +inf when fewer than two distinct points exist.
PairExtremum min_pair_ratio_serial(std::span<const Complex> points,
                                   std::span<const Complex> values);
PairExtremum min_pair_ratio(std::span<const Complex> points, std::span<const Complex> values);

struct IndexedValue {
  double value{};
  std::size_t index{};
};

/// min_i |v_i - center|
IndexedValue min_distance_serial(std::span<const Complex> values, Complex center = {});
IndexedValue min_distance(std::span<const Complex> values, Complex center = {});

/// max_i |v_i - center|
IndexedValue max_distance_serial(std::span<const Complex> values, Complex center = {});
IndexedValue max_distance(std::span<const Complex> values, Complex center = {});

/// v_i = f(z_i), evaluated in parallel. The first exception thrown by f is
/// rethrown on the calling thread.
template <class F>
std::vector<Complex> map_points(std::span<const Complex> points, F&& f) {
  std::vector<Complex> out(points.size());
  std::exception_ptr error;
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      out[std::size_t(i)] = f(points[std::size_t(i)]);
    } catch (...) {
#pragma omp critical(landau_map_points_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <class F>
std::vector<Complex> map_points_serial(std::span<const Complex> points, F&& f) {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(f(z));
  return out;
}

}  // namespace landau::kernels
