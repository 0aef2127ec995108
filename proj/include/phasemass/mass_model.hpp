#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "phasemass/exact.hpp"
#include "phasemass/model_config.hpp"
#include "phasemass/subspace.hpp"

namespace phasemass {

// One particle's mass ratio against the proton, exact and compared with
// measurement.  The deviation is quoted relative to the model's own ratio,
// and the scale is the proton-equivalent mass M each particle implies.
struct MassRatioResult {
  Particle particle;
  Rational ratio;             // exact model value m / m_proton
  double ratio_float;
  double measured_ratio;
  double relative_deviation;  // |ratio_float - measured| / ratio_float
  double inferred_scale_mev;  // measured mass / ratio_float
};

namespace detail {

inline Rational exact_ratio(Particle p) {
  switch (p) {
    case Particle::electron:
      // One 4d alignment out of every coordinate 4-space of R^16.
      return Rational(factorial(4) * factorial(12), factorial(16));
    case Particle::pion:
      // 8d carrier in the 12d complement, accruing its 70 internal 4-spaces.
      return Rational(factorial(4) * factorial(8), factorial(12)) *
             Rational(factorial(8), factorial(4) * factorial(4));
    default:
      // The full 12d complement accrues every one of its 495 4-spaces.
      return Rational(factorial(4) * factorial(8), factorial(12)) *
             Rational(factorial(12), factorial(4) * factorial(8));
  }
}

}  // namespace detail

inline MassRatioResult ratio_for(Particle p, MassTable table = MassTable::paper) {
  const Rational ratio = detail::exact_ratio(p);
  const double rf = to_double(ratio);
  const auto& masses = measured_masses(table);
  const double measured = masses.of(p) / masses.proton_mev;
  return {p,
          ratio,
          rf,
          measured,
          std::abs(rf - measured) / rf,
          masses.of(p) / rf};
}

inline MassRatioResult ratio_electron(MassTable table = MassTable::paper) {
  return ratio_for(Particle::electron, table);
}
inline MassRatioResult ratio_pion(MassTable table = MassTable::paper) {
  return ratio_for(Particle::pion, table);
}
inline MassRatioResult ratio_proton(MassTable table = MassTable::paper) {
  return ratio_for(Particle::proton, table);
}

// The three ratios side by side with the mean inferred scale.
struct InferredScaleReport {
  std::array<MassRatioResult, 3> results;
  double mean_scale_mev;
};

inline InferredScaleReport inferred_scale_report(MassTable table = MassTable::paper) {
  InferredScaleReport rep{{ratio_electron(table), ratio_pion(table), ratio_proton(table)},
                          0.0};
  double s = 0.0;
  for (const auto& r : rep.results) s += r.inferred_scale_mev;
  rep.mean_scale_mev = s / 3.0;
  return rep;
}

// Number of coordinate 3-subspaces of R^{3a} for a = 1..a_max.
inline std::vector<std::pair<int, BigInt>> alignment_choice_table(int a_max) {
  if (a_max < 1) throw DomainError("alignment_choice_table: need a_max >= 1");
  std::vector<std::pair<int, BigInt>> out;
  out.reserve(static_cast<std::size_t>(a_max));
  for (int a = 1; a <= a_max; ++a)
    out.emplace_back(a, count_subspaces(3 * a, 3));
  return out;
}

// Compares the dimension of the space of n-subspaces of R^N with the number
// of independent coordinate weights: suffice means the weights carry no more
// freedom than the subspaces themselves.
struct SubspaceDofReport {
  int n;
  int N;
  long long dof;                 // n (N - n)
  BigInt coeff_count_minus_one;  // C(N, n) - 1
  bool coefficients_suffice;     // dof >= C(N, n) - 1
};

inline SubspaceDofReport grassmann_dof(int n, int N) {
  if (n < 1 || n > N) throw DomainError("grassmann_dof: need 1 <= n <= N");
  SubspaceDofReport rep;
  rep.n = n;
  rep.N = N;
  rep.dof = static_cast<long long>(n) * (N - n);
  rep.coeff_count_minus_one = count_subspaces(N, n) - 1;
  rep.coefficients_suffice = BigInt(rep.dof) >= rep.coeff_count_minus_one;
  return rep;
}

}  // namespace phasemass
