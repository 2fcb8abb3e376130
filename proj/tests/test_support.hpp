#pragma once

// Shared generators and independent reference routines for the test suites.

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "cavlqu/linalg.hpp"
#include "cavlqu/matrix.hpp"
#include "cavlqu/states.hpp"

namespace cavlqu::testutil {

inline ComplexMatrix random_complex(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex{g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix a = random_complex(rng, dim, dim);
  return a + a.adjoint();
}

/// A A^dagger / Tr, full rank with probability one.
inline DensityMatrix random_mixed_state(std::mt19937_64& rng, std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const ComplexMatrix a = random_complex(rng, dim, dim);
  ComplexMatrix rho = a * a.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return DensityMatrix(rho.hermitian_part());
}

/// Rank-limited A A^dagger / Tr with A of shape dim x rank.
inline DensityMatrix random_low_rank_state(std::mt19937_64& rng, std::size_t n_qubits, std::size_t rank) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const ComplexMatrix a = random_complex(rng, dim, rank);
  ComplexMatrix rho = a * a.adjoint();
  rho *= Complex{1.0 / rho.trace().real(), 0.0};
  return DensityMatrix(rho.hermitian_part());
}

inline std::vector<Complex> random_ket(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto& x : v) {
    x = Complex{g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

/// Haar-ish single-qubit unitary via QR of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix a = random_complex(rng, dim, dim);
  Eigen::MatrixXcd e(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) e(i, j) = a(i, j);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(e);
  const Eigen::MatrixXcd q = qr.householderQ();
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) u(i, j) = q(i, j);
  return u;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

/// Square root through Eigen's Householder-tridiagonal solver.
inline ComplexMatrix reference_sqrt(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return from_eigen(es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint());
}

/// Closed-form 3x3 Bloch matrix computed with the reference square root, so
/// LQU checks do not share the library's eigen solver.
inline double reference_lqu(const DensityMatrix& rho, std::size_t qubit) {
  const ComplexMatrix s = reference_sqrt(rho.matrix());
  Eigen::Matrix3d m;
  const auto& paulis = pauli_matrices();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const ComplexMatrix pi = embed_single_qubit(paulis[static_cast<std::size_t>(i)], qubit, rho.n_qubits());
      const ComplexMatrix pj = embed_single_qubit(paulis[static_cast<std::size_t>(j)], qubit, rho.n_qubits());
      m(i, j) = (s * pi * s * pj).trace().real();
    }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 * (m + m.transpose()));
  return 1.0 - es.eigenvalues().maxCoeff();
}

/// Tr_B via sum_k (I (x) <k|) rho (I (x) |k>) for the last `traced` qubits.
inline ComplexMatrix trace_out_last(const ComplexMatrix& rho, std::size_t traced) {
  const std::size_t env = std::size_t{1} << traced;
  const std::size_t keep_dim = rho.rows() / env;
  ComplexMatrix out(keep_dim);
  for (std::size_t k = 0; k < env; ++k) {
    ComplexMatrix bra(1, env);
    bra(0, k) = 1.0;
    const ComplexMatrix proj = kron(ComplexMatrix::identity(keep_dim), bra);
    out += proj * rho * proj.adjoint();
  }
  return out;
}

}  // namespace cavlqu::testutil
