#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "phasemass/errors.hpp"

namespace phasemass {

using Vector = std::vector<double>;

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Cofactor determinants for the small sizes this library actually meets.
// These expansions double as the reference against which the LU path is
// tested.

inline double det2(const double* m) { return m[0] * m[3] - m[1] * m[2]; }

inline double det3(const double* m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

inline double det4(const double* m) {
  // Expand along the first row; reuse the six 2x2 minors of the bottom rows.
  const double s0 = m[8] * m[13] - m[9] * m[12];
  const double s1 = m[8] * m[14] - m[10] * m[12];
  const double s2 = m[8] * m[15] - m[11] * m[12];
  const double s3 = m[9] * m[14] - m[10] * m[13];
  const double s4 = m[9] * m[15] - m[11] * m[13];
  const double s5 = m[10] * m[15] - m[11] * m[14];
  const double c0 = m[5] * s5 - m[6] * s4 + m[7] * s3;
  const double c1 = m[4] * s5 - m[6] * s2 + m[7] * s1;
  const double c2 = m[4] * s4 - m[5] * s2 + m[7] * s0;
  const double c3 = m[4] * s3 - m[5] * s1 + m[6] * s0;
  return m[0] * c0 - m[1] * c1 + m[2] * c2 - m[3] * c3;
}

// LU with partial pivoting, for orders five and up.
inline double det_lu(std::vector<double> m, std::size_t n) {
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(m[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(m[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    const double d = m[col * n + col];
    det *= d;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / d;
      if (f == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

inline double determinant(const double* m, std::size_t n) {
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return m[0];
    case 2:
      return det2(m);
    case 3:
      return det3(m);
    case 4:
      return det4(m);
    default:
      return det_lu(std::vector<double>(m, m + n * n), n);
  }
}

}  // namespace detail
}  // namespace phasemass
