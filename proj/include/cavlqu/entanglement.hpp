#pragma once

#include <optional>

#include "cavlqu/states.hpp"

namespace cavlqu {

/// Concurrence at or below this counts as zero when scanning for crossings.
inline constexpr double kConcurrenceZero = 1e-12;
inline constexpr double kCrossingTol = 1e-6;

struct ConcurrenceResult {
  double value;    // max(0, pre_max)
  double pre_max;  // sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4), unclamped
};

/// Wootters concurrence of a two-qubit state. The spin flip uses complex
/// conjugation in the computational basis.
ConcurrenceResult concurrence(const DensityMatrix& rho);

struct DeathBirthTimes {
  std::optional<double> cavity_death;
  std::optional<double> reservoir_birth;
};

/// Scans kappa*t in steps of `resolution` up to kt_max for the first time the
/// cavity pair loses all entanglement and the first time the reservoir pair
/// gains some, refining each crossing by bisection to kCrossingTol.
/// A cavity pair that starts unentangled has no death time.
DeathBirthTimes death_birth_times(const DensityMatrix& rho_cc, double kt_max, double resolution);

}  // namespace cavlqu
