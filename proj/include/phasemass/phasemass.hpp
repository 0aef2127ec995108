#pragma once

// Umbrella header: subspace algebra, Monte Carlo alignment estimates,
// rotation-representation checks, phase kinematics, the exact mass-ratio
// model, and JSON/CSV report builders.

#include "phasemass/errors.hpp"
#include "phasemass/exact.hpp"
#include "phasemass/io.hpp"
#include "phasemass/kinematics.hpp"
#include "phasemass/mass_model.hpp"
#include "phasemass/model_config.hpp"
#include "phasemass/repcheck.hpp"
#include "phasemass/rng.hpp"
#include "phasemass/sampling.hpp"
#include "phasemass/subspace.hpp"
