#pragma once

#include <random>
#include <vector>

#include "cqg/types.hpp"

namespace cqg::linalg {

// Orthonormal basis (columns) of the nullspace of A. Singular values at or
// below rel_tol * max(1, sigma_max) count as zero.
CMatrix nullspace(const CMatrix& A, double rel_tol = 1e-9);

// Rank with the same thresholding rule as nullspace().
Eigen::Index rank(const CMatrix& A, double rel_tol = 1e-9);

// Multiplies v by a unit phase so that its first entry with modulus above
// tol * max|v| is real and positive.
void fix_phase(Eigen::Ref<CVector> v, double tol = 1e-9);
cplx phase_of_first_nonzero(const Eigen::Ref<const CVector>& v, double tol = 1e-9);

// Applies fix_phase to each column.
void fix_column_phases(CMatrix& M, double tol = 1e-9);

double max_abs(const CMatrix& M);
double max_abs(const CVector& v);

// Hermitian positive-definiteness with a relative eigenvalue floor.
struct PdCertificate {
  bool hermitian = false;
  bool positive_definite = false;
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};
PdCertificate certify_pd(const CMatrix& G, double rel_floor = 1e-10);

// Upper-triangular-free factor: returns B with B^H G B = I for Hermitian PD G.
CMatrix inverse_sqrt_basis(const CMatrix& G);

// Groups sorted eigenvalues into clusters whose neighbours differ by at most
// rel_tol * max(1, spread). Returns index lists into the eigenvalue vector.
std::vector<std::vector<int>> cluster_eigenvalues(const Eigen::VectorXd& evals,
                                                  double rel_tol = 1e-8);

// Gaussian random complex matrix.
CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

// Kronecker product.
CMatrix kron(const CMatrix& A, const CMatrix& B);

// Row-major vectorisation helpers for n×n coefficient matrices.
CVector vec_rows(const CMatrix& M);
CMatrix unvec_rows(const CVector& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace cqg::linalg
