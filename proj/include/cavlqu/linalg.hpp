#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cavlqu/matrix.hpp"

namespace cavlqu {

// Qubit convention used throughout: qubit 0 is the most significant bit of
// the computational-basis index, |q0 q1 ... q(n-1)> <-> q0*2^(n-1) + ... + q(n-1).

inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kNegativeEigenTol = 1e-9;
// Per-dimension multiple of machine epsilon below which sqrt treats an eigenvalue as zero.
inline constexpr double kSqrtNoiseFloor = 8.0 * 2.220446049250313e-16;
inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-12;

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns

  /// V diag(f(lambda)) V^dagger.
  template <class F>
  ComplexMatrix apply_function(F&& f) const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double fk = f(eigenvalues[k]);
      if (fk == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = eigenvectors(i, k) * fk;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eigenvectors(j, k));
      }
    }
    return out;
  }

  ComplexMatrix reconstruct() const {
    return apply_function([](double x) { return x; });
  }
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// The input is symmetrized as (m + m^dagger)/2 before solving. Throws
/// NotHermitian when max |m - m^dagger| exceeds kHermitianTol and
/// NoConvergence when kMaxJacobiSweeps sweeps do not bring the off-diagonal
/// Frobenius norm under kJacobiOffDiagTol.
EigenDecomposition eigh(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> eigvalsh(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-kNegativeEigenTol, 0) are clamped to zero; anything
/// more negative throws NotPositive.
ComplexMatrix matrix_sqrt(const ComplexMatrix& rho);
ComplexMatrix matrix_sqrt(const EigenDecomposition& decomposition);

/// Reduced matrix over the qubits in `keep`, in the order given.
/// Throws BadIndex for an empty, out-of-range or repeated index and
/// BadDimension when rho is not 2^n_qubits square.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t n_qubits,
                            std::span<const std::size_t> keep);

/// Permutation matrix P with P|b_0 ... b_{n-1}> = |b_{order[0]} ... b_{order[n-1]}>,
/// i.e. output qubit k carries input qubit order[k].
ComplexMatrix qubit_permutation(std::size_t n_qubits, std::span<const std::size_t> order);

enum class PauliAxis { X = 0, Y = 1, Z = 2 };

ComplexMatrix pauli(PauliAxis axis);
const std::array<ComplexMatrix, 3>& pauli_matrices();

/// op acting on `qubit` of an n-qubit register, identity elsewhere.
ComplexMatrix embed_single_qubit(const ComplexMatrix& op, std::size_t qubit, std::size_t n_qubits);

/// Number of qubits for a 2^n dimension. Throws BadDimension otherwise.
std::size_t qubit_count(std::size_t dim);

}  // namespace cavlqu
