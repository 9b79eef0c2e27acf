#pragma once

// Classical brute-force oracles for S3, computed from permutations without the
// library's algebra code.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Perm = std::array<int, 3>;

// Element order matches the built-in S3 table: e, (12), (13), (23), (123), (132).
inline std::vector<Perm> s3_perms() {
  return {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
}

// (pq)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

inline int index_of(const Perm& p) {
  const auto all = s3_perms();
  for (int i = 0; i < 6; ++i)
    if (all[i] == p) return i;
  return -1;
}

inline int s3_mul(int a, int b) {
  const auto all = s3_perms();
  return index_of(compose(all[a], all[b]));
}

inline int s3_inv(int a) {
  for (int b = 0; b < 6; ++b)
    if (s3_mul(a, b) == 0) return b;
  return -1;
}

// 3×3 permutation matrix with P e_i = e_{p(i)}.
inline Eigen::Matrix3d perm_matrix(const Perm& p) {
  Eigen::Matrix3d P = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) P(p[i], i) = 1.0;
  return P;
}

// Standard irrep on the sum-zero plane, orthonormal basis (1,-1,0)/√2, (1,1,-2)/√6.
inline Eigen::Matrix2d standard_irrep(int g) {
  Eigen::Matrix<double, 3, 2> U;
  U << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0), -1 / std::sqrt(2.0), 1 / std::sqrt(6.0), 0,
      -2 / std::sqrt(6.0);
  return U.transpose() * perm_matrix(s3_perms()[g]) * U;
}

inline double sign_char(int g) { return (g == 1 || g == 2 || g == 3) ? -1.0 : 1.0; }

// Characters of trivial, sign, standard.
inline double character(int irrep, int g) {
  if (irrep == 0) return 1.0;
  if (irrep == 1) return sign_char(g);
  return standard_irrep(g).trace();
}

// Multiplicity of an irrep in the permutation representation on cosets of H
// (left cosets xH), by counting fixed cosets.
inline int coset_multiplicity(int irrep, const std::vector<int>& H) {
  double acc = 0;
  for (int x = 0; x < 6; ++x) {
    int fixed = 0;
    for (int y = 0; y < 6; ++y) {
      // Coset yH is fixed by x iff y^{-1} x y ∈ H; each coset is counted |H| times.
      const int c = s3_mul(s3_inv(y), s3_mul(x, y));
      for (int h : H)
        if (h == c) ++fixed;
    }
    acc += static_cast<double>(fixed) / H.size() * character(irrep, x);
  }
  return static_cast<int>(std::lround(acc / 6.0));
}

// n_pq^r from the character table.
inline int fusion(int p, int q, int r) {
  double acc = 0;
  for (int g = 0; g < 6; ++g) acc += character(p, g) * character(q, g) * character(r, g);
  return static_cast<int>(std::lround(acc / 6.0));
}

// Right translation (R̂(x)f)(y) = f(yx) on C(S3) in the delta basis.
inline Eigen::MatrixXcd right_translation(int x) {
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(6, 6);
  // (R̂ δ_z)(y) = δ_z(yx) = 1 iff y = z x^{-1}.
  for (int z = 0; z < 6; ++z) R(s3_mul(z, s3_inv(x)), z) = 1.0;
  return R;
}

// Dimension of the space of pairs (Q_1, Q_2) of operators on C(S3) with
// R̂(x) Q_j R̂(x^{-1}) = Σ_k Q_k Γ_kj(x), counted by a direct linear solve.
inline int family_space_dimension_standard() {
  const int b = 6, bb = 36, d = 2;
  Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(6 * d * bb, d * bb);
  for (int x = 0; x < 6; ++x) {
    const Eigen::MatrixXcd Rx = right_translation(x), Rxi = right_translation(s3_inv(x));
    const Eigen::Matrix2d G = standard_irrep(x);
    for (int j = 0; j < d; ++j)
      for (int col = 0; col < bb; ++col) {
        // Unit operator E with E(col % b, col / b) = 1 placed in slot j.
        Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(b, b);
        E(col % b, col / b) = 1.0;
        const Eigen::MatrixXcd conj = Rx * E * Rxi;
        for (int jj = 0; jj < d; ++jj) {
          const int row0 = (x * d + jj) * bb;
          if (jj == j)
            for (int e = 0; e < bb; ++e) sys(row0 + e, j * bb + col) += conj(e % b, e / b);
          // −Σ_k Q_k Γ_k,jj(x): unknown Q_j enters with coefficient Γ_j,jj(x).
          sys(row0 + col, j * bb + col) -= G(j, jj);
        }
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > 1e-9 * s(0)) ++rank;
  return d * bb - rank;
}

// Character count of the same dimension: (1/|G|) Σ_x |fix(x)|² χ(x).
inline int family_space_dimension_by_characters(int irrep) {
  double acc = 0;
  for (int x = 0; x < 6; ++x) {
    const double fix = x == 0 ? 6.0 : 0.0;
    acc += fix * fix * character(irrep, x);
  }
  return static_cast<int>(std::lround(acc / 6.0));
}

}  // namespace oracle
