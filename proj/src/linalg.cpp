#include "cavlqu/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cavlqu/errors.hpp"

namespace cavlqu {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& v : a.data()) sum += std::norm(v);
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i phi}) * R(theta)
// restricted to rows/columns p and q, then accumulates G into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  // a <- a G
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  // a <- G^dagger a
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double herm_err = m.hermiticity_error();
  if (!(herm_err <= kHermitianTol)) {
    throw NotHermitian("eigh: max |m - m^dagger| = " + std::to_string(herm_err));
  }

  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagTol * frobenius_norm(a);

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == kMaxJacobiSweeps) {
      throw NoConvergence("eigh: off-diagonal norm " + std::to_string(off_diagonal_norm(a)) +
                          " after " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& m) { return eigh(m).eigenvalues; }

ComplexMatrix matrix_sqrt(const EigenDecomposition& decomposition) {
  const double lowest = decomposition.eigenvalues.empty() ? 0.0 : decomposition.eigenvalues.front();
  if (lowest < -kNegativeEigenTol) {
    throw NotPositive("matrix_sqrt: eigenvalue " + std::to_string(lowest) + " is negative");
  }
  // Eigenvalues at rounding level relative to the spectrum are zero; their square
  // roots would otherwise leak ~sqrt(eps) into the result.
  const double top = decomposition.eigenvalues.empty() ? 0.0 : std::abs(decomposition.eigenvalues.back());
  const double floor = kSqrtNoiseFloor * static_cast<double>(decomposition.eigenvalues.size()) * top;
  return decomposition.apply_function([floor](double x) { return x <= floor ? 0.0 : std::sqrt(x); });
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& rho) { return matrix_sqrt(eigh(rho)); }

std::size_t qubit_count(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw BadDimension("dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t n_qubits,
                            std::span<const std::size_t> keep) {
  const std::size_t dim = rho.dim();
  if (dim != (std::size_t{1} << n_qubits)) {
    throw BadDimension("partial_trace: dimension " + std::to_string(dim) + " does not match " +
                       std::to_string(n_qubits) + " qubits");
  }
  if (keep.empty()) throw BadIndex("partial_trace: keep is empty");

  std::vector<bool> kept(n_qubits, false);
  for (const std::size_t q : keep) {
    if (q >= n_qubits) {
      throw BadIndex("partial_trace: qubit " + std::to_string(q) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
    }
    if (kept[q]) throw BadIndex("partial_trace: qubit " + std::to_string(q) + " repeated");
    kept[q] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (!kept[q]) traced.push_back(q);

  const auto bit_of = [n_qubits](std::size_t q) { return n_qubits - 1 - q; };
  const std::size_t k = keep.size();
  const std::size_t out_dim = std::size_t{1} << k;
  const std::size_t env_dim = std::size_t{1} << traced.size();

  // Full-register index for (kept bits, traced bits).
  const auto compose = [&](std::size_t kept_index, std::size_t env_index) {
    std::size_t full = 0;
    for (std::size_t m = 0; m < k; ++m)
      if ((kept_index >> (k - 1 - m)) & 1U) full |= std::size_t{1} << bit_of(keep[m]);
    for (std::size_t m = 0; m < traced.size(); ++m)
      if ((env_index >> (traced.size() - 1 - m)) & 1U) full |= std::size_t{1} << bit_of(traced[m]);
    return full;
  };

  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j) {
      Complex sum = 0.0;
      for (std::size_t e = 0; e < env_dim; ++e) sum += rho(compose(i, e), compose(j, e));
      out(i, j) = sum;
    }
  return out;
}

ComplexMatrix qubit_permutation(std::size_t n_qubits, std::span<const std::size_t> order) {
  if (order.size() != n_qubits) throw BadIndex("qubit_permutation: order has wrong length");
  std::vector<bool> seen(n_qubits, false);
  for (const std::size_t q : order) {
    if (q >= n_qubits || seen[q]) throw BadIndex("qubit_permutation: order is not a permutation");
    seen[q] = true;
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix p(dim);
  for (std::size_t in = 0; in < dim; ++in) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < n_qubits; ++k) {
      const std::size_t bit = (in >> (n_qubits - 1 - order[k])) & 1U;
      out |= bit << (n_qubits - 1 - k);
    }
    p(out, in) = 1.0;
  }
  return p;
}

ComplexMatrix pauli(PauliAxis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case PauliAxis::X:
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case PauliAxis::Y:
      return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case PauliAxis::Z:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
  throw BadIndex("pauli: unknown axis");
}

const std::array<ComplexMatrix, 3>& pauli_matrices() {
  static const std::array<ComplexMatrix, 3> paulis{pauli(PauliAxis::X), pauli(PauliAxis::Y),
                                                   pauli(PauliAxis::Z)};
  return paulis;
}

ComplexMatrix embed_single_qubit(const ComplexMatrix& op, std::size_t qubit, std::size_t n_qubits) {
  if (op.rows() != 2 || op.cols() != 2) throw BadDimension("embed_single_qubit: op must be 2x2");
  if (qubit >= n_qubits) {
    throw BadIndex("embed_single_qubit: qubit " + std::to_string(qubit) + " out of range");
  }
  const ComplexMatrix left = ComplexMatrix::identity(std::size_t{1} << qubit);
  const ComplexMatrix right = ComplexMatrix::identity(std::size_t{1} << (n_qubits - 1 - qubit));
  return kron(kron(left, op), right);
}

}  // namespace cavlqu
