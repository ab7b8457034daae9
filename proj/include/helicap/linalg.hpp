#pragma once

// Small dense kernels used inside quadrature loops. Matrices are column-major.

#include <cmath>
#include <cstddef>
#include <span>
#include <algorithm>
#include <utility>
#include <vector>

namespace helicap::linalg {

/// Determinant of an n x n column-major matrix. Destroys `a`.
inline double det_inplace(double* a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      double v = std::abs(a[k * n + r]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[c * n + k], a[c * n + piv]);
      det = -det;
    }
    const double d = a[k * n + k];
    det *= d;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[k * n + r] / d;
      if (f == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) a[c * n + r] -= f * a[c * n + k];
    }
  }
  return det;
}

inline double det(std::span<const double> a, std::size_t n) {
  std::vector<double> tmp(a.begin(), a.end());
  return det_inplace(tmp.data(), n);
}

/// det(JᵀJ) / Π|J_c|² for an m x q column-major J, in [0, 1]. Equals 1 for
/// orthogonal columns and 0 when J is rank deficient. `scratch` needs q*q + q doubles.
inline double gram_ratio(const double* j, std::size_t m, std::size_t q, double* scratch) {
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t r = 0; r < m; ++r) s += j[a * m + r] * j[b * m + r];
      scratch[a * q + b] = s;
      scratch[b * q + a] = s;
    }
    if (scratch[a * q + a] == 0.0) return 0.0;
  }
  // normalize to a correlation matrix so the result is scale free
  double* d = scratch + q * q;
  for (std::size_t a = 0; a < q; ++a) d[a] = 1.0 / std::sqrt(scratch[a * q + a]);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) scratch[a * q + b] *= d[a] * d[b];
  return std::max(0.0, det_inplace(scratch, q));
}

}  // namespace helicap::linalg
