#include "cavlqu/channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cavlqu/errors.hpp"
#include "cavlqu/linalg.hpp"

namespace cavlqu {

AmplitudeChannel::AmplitudeChannel(double kappa_t)
    : kappa_t_(kappa_t), xi_(std::exp(-0.5 * kappa_t)), chi_(std::sqrt(-std::expm1(-kappa_t))) {
  if (!(kappa_t >= 0.0) || !std::isfinite(kappa_t)) {
    std::ostringstream os;
    os << "kappa_t=" << kappa_t << " must be finite and nonnegative";
    throw BadParameter(os.str());
  }
}

ComplexMatrix AmplitudeChannel::isometry() const {
  // Rows index |c r>: 0=|00>, 1=|01>, 2=|10>, 3=|11>.
  ComplexMatrix v(4, 2);
  v(0, 0) = 1.0;
  v(2, 1) = xi_;
  v(1, 1) = chi_;
  return v;
}

double mirror_time(double kappa_t) {
  if (kappa_t == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log(-std::expm1(-kappa_t));
}

std::string_view label(JointQubit q) {
  switch (q) {
    case JointQubit::C1:
      return "c1";
    case JointQubit::C2:
      return "c2";
    case JointQubit::R1:
      return "r1";
    case JointQubit::R2:
      return "r2";
  }
  return "?";
}

ComplexMatrix joint_isometry(const AmplitudeChannel& ch) {
  const ComplexMatrix v = ch.isometry();
  // kron(V, V) yields the pair order (c1, r1, c2, r2); output slot k takes input qubit order[k].
  static const ComplexMatrix reorder = [] {
    const std::array<std::size_t, 4> order{0, 2, 1, 3};
    return qubit_permutation(4, order);
  }();
  return reorder * kron(v, v);
}

JointState evolve(const DensityMatrix& rho_cc, double kappa_t) {
  if (rho_cc.n_qubits() != 2) {
    throw BadDimension("evolve: expected a 2-qubit cavity state, got " +
                       std::to_string(rho_cc.n_qubits()) + " qubits");
  }
  const AmplitudeChannel ch(kappa_t);
  const ComplexMatrix w = joint_isometry(ch);
  ComplexMatrix rho = w * rho_cc.matrix() * w.adjoint();
  return JointState{DensityMatrix(std::move(rho)), kappa_t};
}

DensityMatrix reduced(const JointState& js, std::span<const JointQubit> keep) {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (const JointQubit q : keep) idx.push_back(static_cast<std::size_t>(q));
  return DensityMatrix(partial_trace(js.rho.matrix(), 4, idx));
}

DensityMatrix reduced(const JointState& js, std::initializer_list<JointQubit> keep) {
  return reduced(js, std::span<const JointQubit>(keep.begin(), keep.size()));
}

}  // namespace cavlqu
