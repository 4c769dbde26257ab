#include "landau/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace landau::kernels {
namespace {

bool better_pair(const PairExtremum& a, const PairExtremum& b) {
  if (a.ratio != b.ratio) return a.ratio < b.ratio;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

bool smaller(const IndexedValue& a, const IndexedValue& b) {
  return a.value < b.value || (a.value == b.value && a.index < b.index);
}

bool larger(const IndexedValue& a, const IndexedValue& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

void check_sizes(std::span<const Complex> points, std::span<const Complex> values) {
  if (points.size() != values.size())
    throw std::invalid_argument("min_pair_ratio: points and values differ in length");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

PairExtremum min_pair_ratio_serial(std::span<const Complex> points,
                                   std::span<const Complex> values) {
  check_sizes(points, values);
  PairExtremum best{kInf, 0, 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dz = std::abs(points[i] - points[j]);
      if (dz == 0.0) continue;
      const PairExtremum cand{std::abs(values[i] - values[j]) / dz, i, j};
      if (better_pair(cand, best)) best = cand;
    }
  }
  return best;
}

PairExtremum min_pair_ratio(std::span<const Complex> points, std::span<const Complex> values) {
  check_sizes(points, values);
  PairExtremum best{kInf, 0, 0};
  const long n = static_cast<long>(points.size());
#pragma omp parallel
  {
    PairExtremum local{kInf, 0, 0};
#pragma omp for schedule(dynamic, 16) nowait
    for (long ii = 0; ii < n; ++ii) {
      const auto i = std::size_t(ii);
      const Complex zi = points[i];
      const Complex vi = values[i];
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const double dz = std::abs(zi - points[j]);
        if (dz == 0.0) continue;
        const PairExtremum cand{std::abs(vi - values[j]) / dz, i, j};
        if (better_pair(cand, local)) local = cand;
      }
    }
#pragma omp critical(landau_min_pair_ratio)
    if (better_pair(local, best)) best = local;
  }
  return best;
}

IndexedValue min_distance_serial(std::span<const Complex> values, Complex center) {
  IndexedValue best{kInf, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const IndexedValue cand{std::abs(values[i] - center), i};
    if (smaller(cand, best)) best = cand;
  }
  return best;
}

IndexedValue min_distance(std::span<const Complex> values, Complex center) {
  IndexedValue best{kInf, 0};
  const long n = static_cast<long>(values.size());
#pragma omp parallel
  {
    IndexedValue local{kInf, 0};
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) {
      const IndexedValue cand{std::abs(values[std::size_t(i)] - center), std::size_t(i)};
      if (smaller(cand, local)) local = cand;
    }
#pragma omp critical(landau_min_distance)
    if (smaller(local, best)) best = local;
  }
  return best;
}

IndexedValue max_distance_serial(std::span<const Complex> values, Complex center) {
  IndexedValue best{-kInf, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const IndexedValue cand{std::abs(values[i] - center), i};
    if (larger(cand, best)) best = cand;
  }
  return best;
}

IndexedValue max_distance(std::span<const Complex> values, Complex center) {
  IndexedValue best{-kInf, 0};
  const long n = static_cast<long>(values.size());
#pragma omp parallel
  {
    IndexedValue local{-kInf, 0};
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) {
      const IndexedValue cand{std::abs(values[std::size_t(i)] - center), std::size_t(i)};
      if (larger(cand, local)) local = cand;
    }
#pragma omp critical(landau_max_distance)
    if (larger(local, best)) best = local;
  }
  return best;
}

}  // namespace landau::kernels
