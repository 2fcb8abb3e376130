#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cavlqu/matrix.hpp"
#include "cavlqu/states.hpp"

namespace cavlqu {

inline constexpr double kLquClampTol = 1e-9;
inline constexpr double kGeometricMeanZero = 1e-12;
inline constexpr std::size_t kDefaultDirections = 20000;

using Axis = std::array<double, 3>;

/// Real symmetric 3x3 matrix m_ij = Tr{ sqrt(rho) P_i sqrt(rho) P_j }, P_i = sigma_i
/// on the measured qubit and identity elsewhere.
struct LquMatrix {
  std::array<std::array<double, 3>, 3> m{};

  double max_eigenvalue() const;
  /// n^T m n
  double quadratic_form(const Axis& n) const;
};

/// Local observable sigma . n on one qubit.
class Observable {
 public:
  /// Throws BadParameter unless |axis| = 1 within 1e-12.
  explicit Observable(const Axis& axis);
  /// Normalizes a nonzero direction.
  static Observable along(double x, double y, double z);

  const Axis& axis() const { return axis_; }
  /// 2x2 matrix sigma . n
  ComplexMatrix matrix() const;

 private:
  Axis axis_;
};

struct QubitLqu {
  std::size_t qubit;
  double value;
};

struct LquBreakdown {
  std::vector<QubitLqu> per_qubit;
  double combined = 0.0;
};

/// Square root of a state together with its register size; computing it is
/// the only expensive step, so callers evaluating several measured qubits
/// should build one and reuse it.
struct StateRoot {
  ComplexMatrix sqrt_rho;
  std::size_t n_qubits;

  static StateRoot of(const DensityMatrix& rho);
};

LquMatrix lqu_matrix(const StateRoot& root, std::size_t measured_qubit);
LquMatrix lqu_matrix(const DensityMatrix& rho, std::size_t measured_qubit);

/// 1 - lambda_max clamped to [0,1]. Throws NumericalNegative when the raw
/// value is below -kLquClampTol.
double lqu_from_matrix(const LquMatrix& m);

/// Closed-form LQU of a qubit against the rest of the register.
double lqu_bipartite(const DensityMatrix& rho, std::size_t measured_qubit);

/// Per-qubit bipartition LQUs and their geometric mean. The mean is exactly
/// zero once any factor is <= kGeometricMeanZero.
LquBreakdown lqu_multiqubit(const DensityMatrix& rho);

double geometric_mean_lqu(std::span<const double> per_qubit);

/// Tr(rho K^2) - Tr(sqrt(rho) K sqrt(rho) K) for K = obs on measured_qubit.
double skew_information(const DensityMatrix& rho, const Observable& obs, std::size_t measured_qubit);

/// Deterministic golden-angle (Fibonacci) grid of unit vectors.
std::vector<Axis> fibonacci_sphere(std::size_t n_directions);

/// Minimum of skew_information over a Fibonacci-sphere grid of local
/// observables. An upper bound on the LQU, independent of LquMatrix.
/// Throws BadParameter for n_directions < 1000.
double lqu_bruteforce(const DensityMatrix& rho, std::size_t measured_qubit,
                      std::size_t n_directions = kDefaultDirections);

/// Single-threaded reference for lqu_bruteforce.
double lqu_bruteforce_serial(const DensityMatrix& rho, std::size_t measured_qubit,
                             std::size_t n_directions = kDefaultDirections);

}  // namespace cavlqu
