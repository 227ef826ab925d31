#pragma once

// Wigner small-d matrix from exp(-i beta J_y), built by diagonalizing the
// spin-j J_y. Rows/columns ordered m = j, j-1, ..., -j.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace oracle {

inline Eigen::MatrixXcd spin_jy(int twice_j) {
  const int dim = twice_j + 1;
  const double j = 0.5 * twice_j;
  Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 1; col < dim; ++col) {
    const double m = j - col;
    jp(col - 1, col) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return (jp - jp.adjoint()) / std::complex<double>(0.0, 2.0);
}

inline Eigen::MatrixXd wigner_d(int twice_j, double beta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(spin_jy(twice_j));
  const Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -beta) * es.eigenvalues().cast<std::complex<double>>())
          .array()
          .exp();
  const Eigen::MatrixXcd d = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return d.real();
}

}  // namespace oracle
