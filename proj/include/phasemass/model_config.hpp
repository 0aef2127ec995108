#pragma once

#include <optional>
#include <string_view>

#include "phasemass/errors.hpp"
#include "phasemass/subspace.hpp"

namespace phasemass {

enum class Particle { electron, pion, proton };

inline std::string_view to_string(Particle p) {
  switch (p) {
    case Particle::electron: return "electron";
    case Particle::pion: return "pion";
    default: return "proton";
  }
}

inline std::optional<Particle> particle_from_string(std::string_view s) {
  if (s == "electron") return Particle::electron;
  if (s == "pion") return Particle::pion;
  if (s == "proton") return Particle::proton;
  return std::nullopt;
}

// Which measured masses the reports compare against: the rounded values used
// throughout the model's worked numbers, or full-precision PDG values.
enum class MassTable { paper, pdg };

inline std::optional<MassTable> mass_table_from_string(std::string_view s) {
  if (s == "paper") return MassTable::paper;
  if (s == "pdg") return MassTable::pdg;
  return std::nullopt;
}

inline std::string_view to_string(MassTable t) {
  return t == MassTable::paper ? "paper" : "pdg";
}

struct MeasuredMasses {
  double electron_mev;
  double pion_mev;
  double proton_mev;

  double of(Particle p) const {
    switch (p) {
      case Particle::electron: return electron_mev;
      case Particle::pion: return pion_mev;
      default: return proton_mev;
    }
  }
};

inline constexpr MeasuredMasses kRoundedMasses{0.511, 135.0, 938.0};
inline constexpr MeasuredMasses kPdgMasses{0.51099895, 134.9768, 938.27208816};

inline const MeasuredMasses& measured_masses(MassTable t) {
  return t == MassTable::paper ? kRoundedMasses : kPdgMasses;
}

// Dimension layout of the model: a 16-dimensional ambient space splits into
// the represented 4-space S, its 12-dimensional complement H, and inside H a
// distinguished 4-space S~ with an 8-dimensional remainder.
struct ModelConfig {
  int ambient_dim;
  IndexSet represented;        // S, indices in the ambient space
  IndexSet represented_tilde;  // S~, indices in the ambient space
  int hadron_dim;              // dim of the complement of S

  static const ModelConfig& standard() {
    static const ModelConfig cfg{16, IndexSet{1, 2, 3, 4}, IndexSet{5, 6, 7, 8}, 12};
    return cfg;
  }

  void validate() const {
    if (represented.size() != 4 || represented_tilde.size() != 4)
      throw DomainError("ModelConfig: S and S~ must be 4-dimensional");
    if (represented.max_index() > ambient_dim ||
        represented_tilde.max_index() > ambient_dim)
      throw DomainError("ModelConfig: index exceeds ambient dimension");
    for (int i : represented)
      for (int j : represented_tilde)
        if (i == j) throw DomainError("ModelConfig: S and S~ must be disjoint");
    if (ambient_dim != static_cast<int>(represented.size()) + hadron_dim)
      throw DomainError("ModelConfig: ambient_dim != dim S + hadron_dim");
    if (hadron_dim != 8 + static_cast<int>(represented_tilde.size()) ||
        hadron_dim != 4 + 4 + 4)
      throw DomainError("ModelConfig: complement does not split as 8+4 = 4+4+4");
  }
};

}  // namespace phasemass
