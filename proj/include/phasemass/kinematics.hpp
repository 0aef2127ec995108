#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "phasemass/errors.hpp"
#include "phasemass/repcheck.hpp"

namespace phasemass {

using Vec3 = std::array<double, 3>;

enum class Units { natural, si };

// Exact SI defining constants; mev_to_joule is the charge times 1e6.
struct PhysicalConstants {
  double h = 6.62607015e-34;          // J s
  double c = 299792458.0;             // m / s
  double mev_to_joule = 1.602176634e-13;

  double hbar() const { return h / (2.0 * std::numbers::pi); }
};

inline const PhysicalConstants& constants() {
  static const PhysicalConstants k{};
  return k;
}

namespace detail {

inline double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline void require_unit3(const Vec3& n, const char* who) {
  const double len = std::sqrt(dot3(n, n));
  if (std::abs(len - 1.0) > 1e-12)
    throw NotUnit(std::string(who) + ": direction must have unit length");
}

}  // namespace detail

// Mass m at rapidity u along the unit direction n, natural units (c = 1).
struct KinematicState {
  double m;
  double u;
  Vec3 n;

  KinematicState(double mass, double rapidity, const Vec3& direction)
      : m(mass), u(rapidity), n(direction) {
    if (!(m > 0.0)) throw NonPositiveMass("KinematicState: mass must be positive");
    detail::require_unit3(n, "KinematicState");
  }

  double energy() const { return m * std::cosh(u); }
  Vec3 momentum() const {
    const double p = m * std::sinh(u);
    return {p * n[0], p * n[1], p * n[2]};
  }
};

struct EnergyMomentum {
  double e;
  Vec3 p;
};

// (E, p) on the mass shell: E^2 - |p|^2 = m^2 by the hyperbolic identity.
inline EnergyMomentum energy_momentum(const KinematicState& s) {
  return {s.energy(), s.momentum()};
}

// Phase (per unit mass) of a plane wave at rapidity u: cosh(u) t - sinh(u) n.x.
// At u = 0 this is the proper time t; a boost mixes t and the coordinate
// along n exactly as it mixes energy and momentum.
inline double plane_wave_phase(double u, const Vec3& n, const Vec3& x, double t) {
  detail::require_unit3(n, "plane_wave_phase");
  return std::cosh(u) * t - std::sinh(u) * detail::dot3(n, x);
}

// Full phase of the state's plane wave at an event (x in meters, t in
// seconds), converted through hbar: (E t - p.x / c) K / hbar with K the
// MeV-to-joule factor.  SI companion of plane_wave_phase.
inline double plane_wave_phase_si(const KinematicState& s, const Vec3& x_m,
                                  double t_s) {
  const auto& k = constants();
  const auto [e, p] = energy_momentum(s);
  return (e * t_s - detail::dot3(p, x_m) / k.c) * k.mev_to_joule / k.hbar();
}

// Phase accumulated at rest over duration s.  Natural units: m s (mass in
// MeV, duration in 1/MeV).  SI: duration in seconds, phase = m K s / hbar.
inline double rest_phase(double m, double s, Units units = Units::natural) {
  if (!(m > 0.0)) throw NonPositiveMass("rest_phase: mass must be positive");
  if (units == Units::natural) return m * s;
  const auto& k = constants();
  return m * k.mev_to_joule * s / k.hbar();
}

// Compton frequency m c^2 / h of a mass given in MeV, reported in ZHz.
inline double compton_frequency_zhz(double m_mev) {
  if (!(m_mev > 0.0)) throw NonPositiveMass("compton_frequency_zhz: mass must be positive");
  const auto& k = constants();
  return m_mev * k.mev_to_joule / k.h / 1e21;
}

// Eigenvalue picked up by a spin-1/2 eigenvector under a rotation by theta in
// one plane: e^{i theta / 2}.  A full turn gives -1; 4 pi returns to +1.
inline Complex rotation_eigenvalue(double theta) {
  return std::polar(1.0, 0.5 * theta);
}

// Right- and left-handed spinor pair.
struct SpinorPair {
  std::array<Complex, 2> right;
  std::array<Complex, 2> left;
};

inline double spinor_norm(const std::array<Complex, 2>& s) {
  return std::sqrt(std::norm(s[0]) + std::norm(s[1]));
}

// Boost by rapidity u acts on the pair as e^{+u/2} on the right-handed part
// and e^{-u/2} on the left-handed part, so their norm ratio gains e^u.
inline SpinorPair boost_chiral(const SpinorPair& s, double u) {
  const double grow = std::exp(0.5 * u);
  const double shrink = std::exp(-0.5 * u);
  return {{s.right[0] * grow, s.right[1] * grow},
          {s.left[0] * shrink, s.left[1] * shrink}};
}

}  // namespace phasemass
