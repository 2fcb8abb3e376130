#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cavlqu/matrix.hpp"

namespace cavlqu {

inline constexpr double kStateTol = 1e-9;

enum class ViolationKind { NonFinite, BadShape, NotHermitian, TraceDeviation, NegativeEigenvalue };

struct Violation {
  ViolationKind kind;
  double magnitude;

  std::string describe() const;
};

/// Checks every density-matrix invariant at kStateTol and reports what
/// fails. Never throws.
///
/// TraceDeviation carries |Tr(m) - 1|, NegativeEigenvalue the lowest
/// eigenvalue, NotHermitian max |m - m^dagger|.
std::vector<Violation> validate(const ComplexMatrix& m);

/// A validated quantum state over n qubits.
class DensityMatrix {
 public:
  /// Throws InvalidState listing every violation.
  explicit DensityMatrix(ComplexMatrix m);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  double purity() const;

 private:
  std::size_t n_qubits_ = 0;
  ComplexMatrix mat_;
};

std::vector<Violation> validate(const DensityMatrix& rho);

/// alpha|00> + beta|11> with real nonnegative amplitudes.
class PureInitialState {
 public:
  /// Throws BadAmplitudes unless both lie in [0,1] and alpha^2 + beta^2 = 1 within 1e-12.
  PureInitialState(double alpha, double beta);
  /// beta = sqrt(1 - alpha^2).
  static PureInitialState from_alpha(double alpha);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

class WernerParam {
 public:
  /// Throws BadParameter unless 0 <= p <= 1.
  explicit WernerParam(double p);
  double p() const { return p_; }

 private:
  double p_;
};

DensityMatrix pure_state(const PureInitialState& s);

/// p |Phi><Phi| + (1-p)/4 I with |Phi> = (|00> + |11>)/sqrt(2).
DensityMatrix werner_state(const WernerParam& w);

/// |bits><bits| for a computational basis string such as "0101".
DensityMatrix basis_state(const std::string& bits);

DensityMatrix maximally_mixed(std::size_t n_qubits);

/// (|0...0> + |1...1>)/sqrt(2)
DensityMatrix ghz_state(std::size_t n_qubits);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace cavlqu
