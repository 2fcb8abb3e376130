#include "cavlqu/lqu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cavlqu/errors.hpp"
#include "cavlqu/linalg.hpp"

namespace cavlqu {

namespace {

constexpr double kImagTol = 1e-10;

void require_qubit(std::size_t qubit, std::size_t n_qubits) {
  if (qubit >= n_qubits) {
    throw BadIndex("measured qubit " + std::to_string(qubit) + " out of range for " +
                   std::to_string(n_qubits) + " qubits");
  }
}

std::array<ComplexMatrix, 3> embedded_paulis(std::size_t qubit, std::size_t n_qubits) {
  const auto& s = pauli_matrices();
  return {embed_single_qubit(s[0], qubit, n_qubits), embed_single_qubit(s[1], qubit, n_qubits),
          embed_single_qubit(s[2], qubit, n_qubits)};
}

// Everything the skew-information evaluation needs that does not depend on the axis.
struct SkewKernel {
  ComplexMatrix rho;
  ComplexMatrix sqrt_rho;
  std::array<ComplexMatrix, 3> paulis;

  SkewKernel(const DensityMatrix& state, std::size_t qubit)
      : rho(state.matrix()),
        sqrt_rho(matrix_sqrt(state.matrix())),
        paulis(embedded_paulis(qubit, state.n_qubits())) {}

  double evaluate(const Axis& n) const {
    ComplexMatrix k = Complex{n[0], 0.0} * paulis[0];
    k += Complex{n[1], 0.0} * paulis[1];
    k += Complex{n[2], 0.0} * paulis[2];
    const ComplexMatrix sk = sqrt_rho * k;
    const double local_variance = trace_of_product(rho, k * k).real();
    return local_variance - trace_of_product(sk, sk).real();
  }
};

void require_directions(std::size_t n_directions) {
  if (n_directions < 1000) {
    throw BadParameter("lqu_bruteforce: need at least 1000 directions, got " +
                       std::to_string(n_directions));
  }
}

}  // namespace

double LquMatrix::max_eigenvalue() const {
  ComplexMatrix c(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = m[i][j];
  return eigvalsh(c).back();
}

double LquMatrix::quadratic_form(const Axis& n) const {
  double q = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q += n[i] * m[i][j] * n[j];
  return q;
}

Observable::Observable(const Axis& axis) : axis_(axis) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    std::ostringstream os;
    os << "observable axis has norm " << norm << ", expected 1";
    throw BadParameter(os.str());
  }
}

Observable Observable::along(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw BadParameter("observable direction is zero");
  return Observable(Axis{x / norm, y / norm, z / norm});
}

ComplexMatrix Observable::matrix() const {
  const auto& s = pauli_matrices();
  ComplexMatrix k = Complex{axis_[0], 0.0} * s[0];
  k += Complex{axis_[1], 0.0} * s[1];
  k += Complex{axis_[2], 0.0} * s[2];
  return k;
}

StateRoot StateRoot::of(const DensityMatrix& rho) {
  return StateRoot{matrix_sqrt(rho.matrix()), rho.n_qubits()};
}

LquMatrix lqu_matrix(const StateRoot& root, std::size_t measured_qubit) {
  require_qubit(measured_qubit, root.n_qubits);
  const auto paulis = embedded_paulis(measured_qubit, root.n_qubits);
  std::array<ComplexMatrix, 3> sp{root.sqrt_rho * paulis[0], root.sqrt_rho * paulis[1],
                                  root.sqrt_rho * paulis[2]};

  LquMatrix out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      const Complex mij = trace_of_product(sp[i], sp[j]);
      const Complex mji = trace_of_product(sp[j], sp[i]);
      if (std::abs(mij.imag()) > kImagTol || std::abs(mji.imag()) > kImagTol) {
        std::ostringstream os;
        os << "lqu_matrix: entry (" << i << "," << j << ") has imaginary part " << mij.imag();
        throw NotHermitian(os.str());
      }
      out.m[i][j] = out.m[j][i] = 0.5 * (mij.real() + mji.real());
    }
  return out;
}

LquMatrix lqu_matrix(const DensityMatrix& rho, std::size_t measured_qubit) {
  require_qubit(measured_qubit, rho.n_qubits());
  return lqu_matrix(StateRoot::of(rho), measured_qubit);
}

double lqu_from_matrix(const LquMatrix& m) {
  const double raw = 1.0 - m.max_eigenvalue();
  if (raw < -kLquClampTol) {
    std::ostringstream os;
    os << "LQU evaluated to " << raw << " (below -" << kLquClampTol << ")";
    throw NumericalNegative(os.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

double lqu_bipartite(const DensityMatrix& rho, std::size_t measured_qubit) {
  return lqu_from_matrix(lqu_matrix(rho, measured_qubit));
}

double geometric_mean_lqu(std::span<const double> per_qubit) {
  if (per_qubit.empty()) return 0.0;
  double log_sum = 0.0;
  for (const double v : per_qubit) {
    if (v <= kGeometricMeanZero) return 0.0;
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(per_qubit.size()));
}

LquBreakdown lqu_multiqubit(const DensityMatrix& rho) {
  if (rho.n_qubits() < 2) throw BadDimension("lqu_multiqubit: need at least 2 qubits");
  const StateRoot root = StateRoot::of(rho);
  LquBreakdown out;
  std::vector<double> values;
  for (std::size_t q = 0; q < rho.n_qubits(); ++q) {
    const double v = lqu_from_matrix(lqu_matrix(root, q));
    out.per_qubit.push_back({q, v});
    values.push_back(v);
  }
  out.combined = geometric_mean_lqu(values);
  return out;
}

double skew_information(const DensityMatrix& rho, const Observable& obs, std::size_t measured_qubit) {
  require_qubit(measured_qubit, rho.n_qubits());
  const ComplexMatrix k = embed_single_qubit(obs.matrix(), measured_qubit, rho.n_qubits());
  const ComplexMatrix sqrt_rho = matrix_sqrt(rho.matrix());
  const ComplexMatrix sk = sqrt_rho * k;
  return trace_of_product(rho.matrix(), k * k).real() - trace_of_product(sk, sk).real();
}

std::vector<Axis> fibonacci_sphere(std::size_t n_directions) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double n = static_cast<double>(n_directions);
  std::vector<Axis> out(n_directions);
  for (std::size_t i = 0; i < n_directions; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(i);
    out[i] = {r * std::cos(phi), r * std::sin(phi), z};
  }
  return out;
}

double lqu_bruteforce_serial(const DensityMatrix& rho, std::size_t measured_qubit,
                             std::size_t n_directions) {
  require_directions(n_directions);
  require_qubit(measured_qubit, rho.n_qubits());
  const SkewKernel kernel(rho, measured_qubit);
  const auto grid = fibonacci_sphere(n_directions);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& n : grid) best = std::min(best, kernel.evaluate(n));
  return best;
}

double lqu_bruteforce(const DensityMatrix& rho, std::size_t measured_qubit, std::size_t n_directions) {
  require_directions(n_directions);
  require_qubit(measured_qubit, rho.n_qubits());
  const SkewKernel kernel(rho, measured_qubit);
  const auto grid = fibonacci_sphere(n_directions);
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) best = std::min(best, kernel.evaluate(grid[i]));
  return best;
}

}  // namespace cavlqu
