#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "phasemass/exact.hpp"
#include "phasemass/kinematics.hpp"
#include "phasemass/mass_model.hpp"
#include "phasemass/repcheck.hpp"
#include "phasemass/sampling.hpp"
#include "phasemass/subspace.hpp"

namespace phasemass {

// Rounds to `sig` significant decimal digits (ties away from zero).
inline double round_sig(double x, int sig) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double mag = std::floor(std::log10(std::abs(x)));
  const double scale = std::pow(10.0, sig - 1 - mag);
  return std::round(x * scale) / scale;
}

// Fixed significant-digit decimal rendering, used by every CSV writer.
inline std::string format_sig(double x, int sig = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig, x);
  return buf;
}

inline nlohmann::json json_of(const PlueckerCoefficients& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    nlohmann::json alpha = nlohmann::json::array();
    for (int a : p.alpha(i)) alpha.push_back(a);
    coeffs.push_back({{"alpha", std::move(alpha)}, {"w", p.w(i)}});
  }
  return {{"N", p.ambient()}, {"n", p.sub()}, {"coeffs", std::move(coeffs)}};
}

inline std::string csv_of(const PlueckerCoefficients& p) {
  std::string out = "alpha,w\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += p.alpha(i).joined();
    out += ',';
    out += format_sig(p.w(i));
    out += '\n';
  }
  return out;
}

inline nlohmann::json json_of(const McEstimate& e) {
  nlohmann::json out{{"mean", e.mean},
                     {"stderr", e.std_error},
                     {"samples", e.samples},
                     {"seed", e.seed}};
  if (e.expected) {
    out["expected_num"] = to_int64_checked(numerator(*e.expected));
    out["expected_den"] = to_int64_checked(denominator(*e.expected));
  }
  return out;
}

inline std::string csv_of(const McEstimate& e) {
  std::string out = "mean,stderr,samples,seed,expected_num,expected_den\n";
  out += format_sig(e.mean);
  out += ',';
  out += format_sig(e.std_error);
  out += ',';
  out += std::to_string(e.samples);
  out += ',';
  out += std::to_string(e.seed);
  if (e.expected) {
    out += ',';
    out += std::to_string(to_int64_checked(numerator(*e.expected)));
    out += ',';
    out += std::to_string(to_int64_checked(denominator(*e.expected)));
  } else {
    out += ",,";
  }
  out += '\n';
  return out;
}

inline nlohmann::json json_of(const RepSolutionSet& r) {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : r.solutions)
    sols.push_back({s.a0, s.a1, s.a2, s.a3});
  return {{"feasible", r.feasible},
          {"residual", r.residual},
          {"solutions", std::move(sols)}};
}

inline nlohmann::json json_of(const MassRatioResult& r) {
  return {{"particle", std::string(to_string(r.particle))},
          {"ratio",
           {{"num", to_int64_checked(numerator(r.ratio))},
            {"den", to_int64_checked(denominator(r.ratio))}}},
          {"ratio_float", r.ratio_float},
          {"measured", r.measured_ratio},
          {"deviation_pct", 100.0 * r.relative_deviation},
          {"inferred_M_mev", r.inferred_scale_mev}};
}

inline nlohmann::json json_of(const InferredScaleReport& rep, MassTable table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.results) rows.push_back(json_of(r));
  return {{"masses", std::string(to_string(table))},
          {"results", std::move(rows)},
          {"mean_inferred_M_mev", rep.mean_scale_mev}};
}

inline std::string csv_of(const InferredScaleReport& rep) {
  std::string out =
      "particle,ratio_num,ratio_den,ratio_float,measured,deviation_pct,inferred_M_mev\n";
  for (const auto& r : rep.results) {
    out += to_string(r.particle);
    out += ',';
    out += std::to_string(to_int64_checked(numerator(r.ratio)));
    out += ',';
    out += std::to_string(to_int64_checked(denominator(r.ratio)));
    out += ',';
    out += format_sig(r.ratio_float);
    out += ',';
    out += format_sig(r.measured_ratio);
    out += ',';
    out += format_sig(100.0 * r.relative_deviation);
    out += ',';
    out += format_sig(r.inferred_scale_mev);
    out += '\n';
  }
  out += "mean_M,,,,,,";
  out += format_sig(rep.mean_scale_mev);
  out += '\n';
  return out;
}

// Compton-frequency table for the three particles of one mass table.
struct FrequencyRow {
  Particle particle;
  double mass_mev;
  double freq_zhz;
  double freq_zhz_rounded_3sf;
};

inline std::vector<FrequencyRow> frequency_report(MassTable table = MassTable::paper) {
  const auto& masses = measured_masses(table);
  std::vector<FrequencyRow> rows;
  for (Particle p : {Particle::electron, Particle::pion, Particle::proton}) {
    const double m = masses.of(p);
    const double f = compton_frequency_zhz(m);
    rows.push_back({p, m, f, round_sig(f, 3)});
  }
  return rows;
}

inline nlohmann::json json_of(const std::vector<FrequencyRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"particle", std::string(to_string(r.particle))},
                   {"mass_mev", r.mass_mev},
                   {"freq_zhz", r.freq_zhz},
                   {"freq_zhz_rounded_3sf", r.freq_zhz_rounded_3sf}});
  return out;
}

inline std::string csv_of(const std::vector<FrequencyRow>& rows) {
  std::string out = "particle,mass_mev,freq_zhz,freq_zhz_rounded_3sf\n";
  for (const auto& r : rows) {
    out += to_string(r.particle);
    out += ',';
    out += format_sig(r.mass_mev);
    out += ',';
    out += format_sig(r.freq_zhz);
    out += ',';
    out += format_sig(r.freq_zhz_rounded_3sf);
    out += '\n';
  }
  return out;
}

}  // namespace phasemass
