// Test-only reference implementations. Nothing here calls into the library's
// root finders or Wirtinger code, so agreement is evidence rather than echo.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// First sign change of g on [lo, hi] located by a uniform scan of `steps`
/// cells, then refined by Illinois-modified regula falsi. Returns nullopt when
/// the scan sees no change.
inline std::optional<double> scan_root(const std::function<double(double)>& g, double lo,
                                       double hi, int steps = 4000) {
  double a = lo;
  double ga = g(a);
  if (ga == 0.0) return a;
  for (int i = 1; i <= steps; ++i) {
    const double b = lo + (hi - lo) * double(i) / double(steps);
    const double gb = g(b);
    if (gb == 0.0) return b;
    if ((ga > 0.0) != (gb > 0.0)) {
      double x0 = a, x1 = b, f0 = ga, f1 = gb;
      int side = 0;
      for (int it = 0; it < 200 && std::abs(x1 - x0) > 1e-16; ++it) {
        const double x = (x0 * f1 - x1 * f0) / (f1 - f0);
        const double fx = g(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (f1 > 0.0)) {
          x1 = x;
          f1 = fx;
          if (side == -1) f0 *= 0.5;
          side = -1;
        } else {
          x0 = x;
          f0 = fx;
          if (side == 1) f1 *= 0.5;
          side = 1;
        }
      }
      return 0.5 * (x0 + x1);
    }
    a = b;
    ga = gb;
  }
  return std::nullopt;
}

struct FdWirtinger {
  Complex dz;
  Complex dzbar;
};

/// Central differences along x and y, then d/dz = (d_x - i d_y)/2 and
/// d/dzbar = (d_x + i d_y)/2.
inline FdWirtinger fd_wirtinger(const std::function<Complex(Complex)>& F, Complex z,
                                double h = 1e-5) {
  const Complex dx = (F(z + h) - F(z - h)) / (2.0 * h);
  const Complex dy = (F(z + Complex(0.0, h)) - F(z - Complex(0.0, h))) / (2.0 * h);
  const Complex i(0.0, 1.0);
  return {0.5 * (dx - i * dy), 0.5 * (dx + i * dy)};
}

/// Naive power-sum evaluation of sum c_n z^n.
inline Complex power_sum(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (std::size_t n = 0; n < c.size(); ++n) acc += c[n] * std::pow(z, double(n));
  return acc;
}

/// sum_k conj(z)^k A_k(z) with each A_k evaluated by power_sum.
inline Complex poly_sum(const std::vector<std::vector<Complex>>& comps, Complex z) {
  Complex acc{};
  for (std::size_t k = 0; k < comps.size(); ++k)
    acc += std::pow(std::conj(z), double(k)) * power_sum(comps[k], z);
  return acc;
}

}  // namespace oracle
