#include "cqg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cqg::linalg {

namespace {

Eigen::Index null_count(const Eigen::VectorXd& sv, Eigen::Index cols, double rel_tol,
                        Eigen::Index* rank_out) {
  const double smax = sv.size() ? sv(0) : 0.0;
  // Floor at rel_tol so round-off residue of an all-zero matrix is not counted.
  const double thr = rel_tol * std::max(smax, 1.0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thr) ++r;
  if (rank_out) *rank_out = r;
  return cols - r;
}

}  // namespace

CMatrix nullspace(const CMatrix& A, double rel_tol) {
  const Eigen::Index cols = A.cols();
  if (cols == 0) return CMatrix(0, 0);
  if (A.rows() == 0) return CMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeFullV);
  Eigen::Index r = 0;
  null_count(svd.singularValues(), cols, rel_tol, &r);
  return svd.matrixV().rightCols(cols - r);
}

Eigen::Index rank(const CMatrix& A, double rel_tol) {
  if (A.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(A);
  Eigen::Index r = 0;
  null_count(svd.singularValues(), A.cols(), rel_tol, &r);
  return r;
}

cplx phase_of_first_nonzero(const Eigen::Ref<const CVector>& v, double tol) {
  const double m = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  if (m == 0.0) return 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > tol * m) return v(i) / std::abs(v(i));
  return 1.0;
}

void fix_phase(Eigen::Ref<CVector> v, double tol) {
  v *= std::conj(phase_of_first_nonzero(v, tol));
}

void fix_column_phases(CMatrix& M, double tol) {
  for (Eigen::Index c = 0; c < M.cols(); ++c) {
    CVector col = M.col(c);
    fix_phase(col, tol);
    M.col(c) = col;
  }
}

double max_abs(const CMatrix& M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const CVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

PdCertificate certify_pd(const CMatrix& G, double rel_floor) {
  PdCertificate c;
  c.hermiticity_residual = max_abs(CMatrix(G - G.adjoint()));
  const double scale = std::max(1.0, max_abs(G));
  c.hermitian = c.hermiticity_residual <= 1e-12 * scale;
  CMatrix H = 0.5 * (G + G.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  c.max_eigenvalue = es.eigenvalues().maxCoeff();
  c.positive_definite =
      c.max_eigenvalue > 0.0 && c.min_eigenvalue > rel_floor * c.max_eigenvalue;
  return c;
}

CMatrix inverse_sqrt_basis(const CMatrix& G) {
  Eigen::LLT<CMatrix> llt(0.5 * (G + G.adjoint()));
  // G = L L^H, so B = L^{-H} gives B^H G B = I.
  CMatrix Linv = llt.matrixL().solve(CMatrix::Identity(G.rows(), G.cols()));
  return Linv.adjoint();
}

std::vector<std::vector<int>> cluster_eigenvalues(const Eigen::VectorXd& evals, double rel_tol) {
  std::vector<int> order(evals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return evals(a) < evals(b); });
  std::vector<std::vector<int>> clusters;
  if (order.empty()) return clusters;
  const double spread = evals.cwiseAbs().maxCoeff();
  const double thr = rel_tol * std::max(1.0, spread);
  clusters.push_back({order[0]});
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (evals(order[i]) - evals(order[i - 1]) > thr)
      clusters.push_back({order[i]});
    else
      clusters.back().push_back(order[i]);
  }
  return clusters;
}

CMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix M(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) M(i, j) = cplx(nd(rng), nd(rng));
  return M;
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

CVector vec_rows(const CMatrix& M) {
  CVector v(M.size());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) v(i * M.cols() + j) = M(i, j);
  return v;
}

CMatrix unvec_rows(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  CMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = v(i * cols + j);
  return M;
}

}  // namespace cqg::linalg
