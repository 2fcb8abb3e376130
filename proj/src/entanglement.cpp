#include "cavlqu/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cavlqu/channel.hpp"
#include "cavlqu/errors.hpp"
#include "cavlqu/linalg.hpp"

namespace cavlqu {

namespace {

// First kt in (lo, hi] where pred flips from its value at lo; pred(lo) != pred(hi).
double bisect(const std::function<bool(double)>& pred, double lo, double hi) {
  const bool at_lo = pred(lo);
  while (hi - lo > kCrossingTol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw BadDimension("concurrence: expected a 2-qubit state, got " +
                       std::to_string(rho.n_qubits()) + " qubits");
  }
  static const ComplexMatrix flip = kron(pauli(PauliAxis::Y), pauli(PauliAxis::Y));
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix tilde = flip * m.conjugate() * flip;
  // rho * tilde shares its spectrum with the Hermitian sqrt(rho) tilde sqrt(rho).
  const ComplexMatrix s = matrix_sqrt(m);
  auto ev = eigvalsh(s * tilde * s);
  const double floor = kSqrtNoiseFloor * static_cast<double>(ev.size()) * std::abs(ev.back());
  std::vector<double> roots(ev.size());
  std::transform(ev.begin(), ev.end(), roots.begin(),
                 [floor](double x) { return x <= floor ? 0.0 : std::sqrt(x); });
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double pre = roots[0] - roots[1] - roots[2] - roots[3];
  return {std::max(0.0, pre), pre};
}

DeathBirthTimes death_birth_times(const DensityMatrix& rho_cc, double kt_max, double resolution) {
  if (!(kt_max > 0.0) || !(resolution > 0.0)) {
    throw BadParameter("death_birth_times: kt_max and resolution must be positive");
  }
  const auto cavity_entangled = [&](double kt) {
    return concurrence(reduced(evolve(rho_cc, kt), kCavities)).value > kConcurrenceZero;
  };
  const auto reservoir_entangled = [&](double kt) {
    return concurrence(reduced(evolve(rho_cc, kt), kReservoirs)).value > kConcurrenceZero;
  };

  DeathBirthTimes out;
  bool watch_death = cavity_entangled(0.0);
  bool watch_birth = !reservoir_entangled(0.0);
  double prev = 0.0;
  const auto steps = static_cast<std::size_t>(std::ceil(kt_max / resolution));
  for (std::size_t k = 1; k <= steps && (watch_death || watch_birth); ++k) {
    const double kt = std::min(kt_max, static_cast<double>(k) * resolution);
    if (watch_death && !cavity_entangled(kt)) {
      out.cavity_death = bisect(cavity_entangled, prev, kt);
      watch_death = false;
    }
    if (watch_birth && reservoir_entangled(kt)) {
      out.reservoir_birth = bisect(reservoir_entangled, prev, kt);
      watch_birth = false;
    }
    prev = kt;
  }
  return out;
}

}  // namespace cavlqu
