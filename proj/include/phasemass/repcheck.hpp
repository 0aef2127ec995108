#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "phasemass/errors.hpp"

namespace phasemass {

using Complex = std::complex<double>;

// Dense 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> m{};

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }

  Mat2 adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  double max_abs() const {
    double w = 0.0;
    for (const auto& e : m) w = std::max(w, std::abs(e));
    return w;
  }
};

// Plane-rotation generators J_k = sigma_k / (2i).  Anti-Hermitian, with
// [J1,J2] = J3 cyclically and Jk' Jk = I/4, so exp(theta J_k) is the rotation
// by theta in the k-th plane pair and gains phase theta/2 on eigenvectors.
inline Mat2 mat_identity() {
  Mat2 out;
  out.m = {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
  return out;
}
inline Mat2 mat_j1() {
  Mat2 out;
  out.m = {Complex(0, 0), Complex(0, -0.5), Complex(0, -0.5), Complex(0, 0)};
  return out;
}
inline Mat2 mat_j2() {
  Mat2 out;
  out.m = {Complex(0, 0), Complex(-0.5, 0), Complex(0.5, 0), Complex(0, 0)};
  return out;
}
inline Mat2 mat_j3() {
  Mat2 out;
  out.m = {Complex(0, -0.5), Complex(0, 0), Complex(0, 0), Complex(0, 0.5)};
  return out;
}

// Element a0 I + a1 J1 + a2 J2 + a3 J3 of the real span of the generator
// basis, held by its coefficients.
struct SpinGenerator {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;

  static SpinGenerator identity() { return {1, 0, 0, 0}; }
  static SpinGenerator j1() { return {0, 1, 0, 0}; }
  static SpinGenerator j2() { return {0, 0, 1, 0}; }
  static SpinGenerator j3() { return {0, 0, 0, 1}; }
  static SpinGenerator axis(double b1, double b2, double b3) {
    return {0, b1, b2, b3};
  }

  Mat2 matrix() const {
    Mat2 out;
    out.m[0] = Complex(a0, -0.5 * a3);
    out.m[1] = Complex(-0.5 * a2, -0.5 * a1);
    out.m[2] = Complex(0.5 * a2, -0.5 * a1);
    out.m[3] = Complex(a0, 0.5 * a3);
    return out;
  }

  // Projection onto {I, J1, J2, J3} by traces against the Pauli triple.  For
  // matrices inside the span the imaginary parts vanish; see
  // projection_residual for the distance to the span.
  static SpinGenerator from_matrix(const Mat2& m) {
    const Complex c0 = 0.5 * (m.m[0] + m.m[3]);
    const Complex c1 = 0.5 * (m.m[1] + m.m[2]);
    const Complex c2 = 0.5 * Complex(0, 1) * (m.m[1] - m.m[2]);
    const Complex c3 = 0.5 * (m.m[0] - m.m[3]);
    return {c0.real(), -2.0 * c1.imag(), -2.0 * c2.imag(), -2.0 * c3.imag()};
  }

  static double projection_residual(const Mat2& m) {
    return (m - from_matrix(m).matrix()).max_abs();
  }

  // +0.0 keeps negated zeros positive, for clean serialization.
  SpinGenerator negated() const {
    return {-a0 + 0.0, -a1 + 0.0, -a2 + 0.0, -a3 + 0.0};
  }

  double norm() const {
    return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3);
  }

  double distance(const SpinGenerator& o) const {
    const double d0 = a0 - o.a0, d1 = a1 - o.a1, d2 = a2 - o.a2, d3 = a3 - o.a3;
    return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3);
  }
};

inline SpinGenerator commutator(const SpinGenerator& x, const SpinGenerator& y) {
  const Mat2 mx = x.matrix(), my = y.matrix();
  return SpinGenerator::from_matrix(mx * my - my * mx);
}

// Outcome of a feasibility question: the solutions found, whether any exist,
// and (when none do) the smallest constraint violation met by the search.
struct RepSolutionSet {
  std::vector<SpinGenerator> solutions;
  bool feasible = false;
  double residual = 0.0;
};

namespace detail {

inline std::vector<std::array<double, 3>> fibonacci_sphere(std::size_t count) {
  std::vector<std::array<double, 3>> pts(count);
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden_angle * static_cast<double>(i);
    pts[i] = {r * std::cos(a), r * std::sin(a), z};
  }
  return pts;
}

// Deterministic minimization of f over the unit sphere: Fibonacci grid scan,
// then (optionally) shrinking tangent-step descent from the best grid point.
template <class F>
std::pair<std::array<double, 3>, double> minimize_on_sphere(F&& f,
                                                            std::size_t grid,
                                                            int refine_rounds) {
  std::array<double, 3> best_p{0, 0, 1};
  double best = f(best_p);
  for (const auto& p : fibonacci_sphere(grid)) {
    const double v = f(p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }

  const auto normalized = [](std::array<double, 3> p) {
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return std::array<double, 3>{p[0] / n, p[1] / n, p[2] / n};
  };

  double h = 0.1;
  for (int round = 0; round < refine_rounds; ++round, h *= 0.7) {
    // Tangent basis at the current best point.
    const auto& p = best_p;
    std::array<double, 3> t1 =
        std::abs(p[2]) < 0.9 ? std::array<double, 3>{-p[1], p[0], 0.0}
                             : std::array<double, 3>{0.0, -p[2], p[1]};
    t1 = normalized(t1);
    const std::array<double, 3> t2 = {p[1] * t1[2] - p[2] * t1[1],
                                      p[2] * t1[0] - p[0] * t1[2],
                                      p[0] * t1[1] - p[1] * t1[0]};
    const std::array<std::array<double, 2>, 8> steps = {{{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                                         {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (const auto& s : steps) {
      const std::array<double, 3> cand = normalized(
          {p[0] + h * (s[0] * t1[0] + s[1] * t2[0]),
           p[1] + h * (s[0] * t1[1] + s[1] * t2[1]),
           p[2] + h * (s[0] * t1[2] + s[1] * t2[2])});
      const double v = f(cand);
      if (v < best) {
        best = v;
        best_p = cand;
      }
    }
  }
  return {best_p, best};
}

inline void require_unit_traceless(const SpinGenerator& g, const char* who) {
  if (std::abs(g.a0) > 1e-12)
    throw InvalidGenerator(std::string(who) + ": generator must be traceless");
  if (std::abs(g.norm() - 1.0) > 1e-9)
    throw InvalidGenerator(std::string(who) + ": generator must have unit norm");
}

}  // namespace detail

// All unit traceless X with [X, g] = 0 and the same normalization as g.
// Commuting with g forces the coefficient vector parallel to g's, and unit
// norm leaves exactly the two signs, so the answer is {g, -g} minus whatever
// the caller excludes.  With both signs excluded the problem is infeasible
// and the residual reports the smallest bracket norm seen on a grid of
// admissible candidates (positive: the grid misses the excluded directions).
inline RepSolutionSet solve_fourth_plane(
    const SpinGenerator& g, const std::vector<SpinGenerator>& exclude = {}) {
  detail::require_unit_traceless(g, "solve_fourth_plane");

  RepSolutionSet out;
  for (const SpinGenerator& cand : {g, g.negated()}) {
    bool excluded = false;
    for (const auto& e : exclude)
      if (cand.distance(e) < 1e-9) excluded = true;
    if (!excluded) out.solutions.push_back(cand);
  }
  if (!out.solutions.empty()) {
    out.feasible = true;
    out.residual = 0.0;
    return out;
  }

  const auto violation = [&](const std::array<double, 3>& b) {
    const SpinGenerator x = SpinGenerator::axis(b[0], b[1], b[2]);
    for (const auto& e : exclude)
      if (x.distance(e) < 1e-9) return std::numeric_limits<double>::infinity();
    return commutator(x, g).norm();
  };
  auto [pt, best] = detail::minimize_on_sphere(violation, 10'000, 0);
  out.feasible = false;
  out.residual = best;
  return out;
}

// Feasibility of a further independent plane: a unit traceless X with
// [X, g12] = 0 but [X, g34] != 0, where g34 is one of the solutions for the
// fourth plane (so g34 = +-g12).  Infeasible: commuting with g12 pins X to
// +-g12, which then commutes with g34 as well.  The residual is the smallest
// joint violation max(|[X,g12]|, 1 - |[X,g34]|) over the unit sphere; it
// cannot drop below 1/2 because the two brackets are equal in norm.
inline RepSolutionSet check_fifth_plane(const SpinGenerator& g12,
                                        const SpinGenerator& g34) {
  detail::require_unit_traceless(g12, "check_fifth_plane");
  if (std::min(g34.distance(g12), g34.distance(g12.negated())) > 1e-9)
    throw InvalidGenerator(
        "check_fifth_plane: second generator must solve the fourth plane");

  const auto violation = [&](const std::array<double, 3>& b) {
    const SpinGenerator x = SpinGenerator::axis(b[0], b[1], b[2]);
    return std::max(commutator(x, g12).norm(),
                    1.0 - commutator(x, g34).norm());
  };
  auto [pt, best] = detail::minimize_on_sphere(violation, 10'000, 40);
  return {{}, false, best};
}

}  // namespace phasemass
