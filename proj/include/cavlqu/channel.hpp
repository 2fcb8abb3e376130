#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "cavlqu/matrix.hpp"
#include "cavlqu/states.hpp"

namespace cavlqu {

/// Stand-in for kappa*t = infinity: 1 - xi^2 is below 2e-22 here.
inline constexpr double kAsymptoticKappaT = 50.0;

/// Cavity -> (cavity, reservoir) amplitude transfer at dimensionless time kappa*t:
///   |0>_c -> |0>_c|0>_r
///   |1>_c -> xi |1>_c|0>_r + chi |0>_c|1>_r
/// with xi = exp(-kt/2), chi = sqrt(1 - exp(-kt)).
class AmplitudeChannel {
 public:
  /// Throws BadParameter for negative or non-finite kappa_t.
  explicit AmplitudeChannel(double kappa_t);

  double kappa_t() const { return kappa_t_; }
  double xi() const { return xi_; }
  double chi() const { return chi_; }

  /// 4x2 isometry, output ordered (cavity, reservoir).
  ComplexMatrix isometry() const;

 private:
  double kappa_t_;
  double xi_;
  double chi_;
};

/// Time at which the cavity keeps the fraction of excitation the reservoir
/// holds at kappa_t: exp(-kt') = 1 - exp(-kt). Swaps xi^2 and chi^2.
/// Returns +infinity at kappa_t = 0.
double mirror_time(double kappa_t);

enum class JointQubit : std::size_t { C1 = 0, C2 = 1, R1 = 2, R2 = 3 };

std::string_view label(JointQubit q);

/// Four-qubit state ordered [c1, c2, r1, r2].
struct JointState {
  DensityMatrix rho;
  double kappa_t;
};

/// 16x4 operator W = P (V (x) V) taking the two cavity qubits to the
/// ordered register [c1, c2, r1, r2], with both reservoirs starting in vacuum.
ComplexMatrix joint_isometry(const AmplitudeChannel& ch);

/// rho(t) = W rho_cc W^dagger. Throws BadDimension for a non-2-qubit input.
JointState evolve(const DensityMatrix& rho_cc, double kappa_t);

/// Reduced state over the listed qubits, in the order given.
DensityMatrix reduced(const JointState& js, std::span<const JointQubit> keep);
DensityMatrix reduced(const JointState& js, std::initializer_list<JointQubit> keep);

inline constexpr std::array<JointQubit, 2> kCavities{JointQubit::C1, JointQubit::C2};
inline constexpr std::array<JointQubit, 2> kReservoirs{JointQubit::R1, JointQubit::R2};

}  // namespace cavlqu
