#include "cqg/cg.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/linalg.hpp"

namespace cqg {

Element character(const Corepresentation& pi) {
  Element chi{CVector::Zero(pi.algebra_dim())};
  for (int j = 0; j < pi.d; ++j) chi += pi.entry(j, j);
  return chi;
}

CharacterPairing character_orthogonality(const HopfAlgebra& A, const HaarFunctional& h,
                                         const Element& chi_p, const Element& chi_q) {
  const Element s = A.star(chi_p);
  return {h.of_product(s, chi_q), h.of_product(chi_q, s)};
}

int multiplicity_in(const HopfAlgebra& A, const HaarFunctional& h, const Element& chi_v,
                    const Element& chi_p, double tol) {
  const cplx v = h.of_product(chi_v, A.star(chi_p));
  const double r = std::round(v.real());
  if (std::abs(v - cplx(r)) > tol || r < 0)
    throw Error(ErrorKind::NonIntegerMultiplicity,
                "character pairing " + std::to_string(v.real()) + "+" + std::to_string(v.imag()) + "i");
  return static_cast<int>(r);
}

Corepresentation tensor_product(const HopfAlgebra& A, const Corepresentation& V,
                                const Corepresentation& W, OperatorKind kind) {
  const int dv = V.d, dw = W.d;
  std::vector<std::vector<Element>> e(dv * dw, std::vector<Element>(dv * dw));
  for (int s = 0; s < dv; ++s)
    for (int t = 0; t < dw; ++t)
      for (int j = 0; j < dv; ++j)
        for (int k = 0; k < dw; ++k) {
          const Element v = V.entry(s, j), w = W.entry(t, k);
          e[s * dw + t][j * dw + k] =
              kind == OperatorKind::Ordinary ? A.multiply(v, w) : A.multiply(w, v);
        }
  return Corepresentation::from_entries(
      e, V.label + (kind == OperatorKind::Ordinary ? "(x)" : "(x~)") + W.label);
}

CMatrix pair_swap_permutation(int dV, int dW) {
  CMatrix P = CMatrix::Zero(dV * dW, dV * dW);
  for (int s = 0; s < dV; ++s)
    for (int t = 0; t < dW; ++t) P(t * dV + s, s * dW + t) = 1.0;
  return P;
}

std::vector<std::vector<std::vector<int>>> fusion_multiplicities(const HopfAlgebra& A,
                                                                 const HaarFunctional& h,
                                                                 const IrrepTable& table) {
  const int T = table.size();
  std::vector<std::vector<std::vector<int>>> N(T, std::vector<std::vector<int>>(T, std::vector<int>(T)));
  for (int p = 0; p < T; ++p)
    for (int q = 0; q < T; ++q) {
      const Element pq = A.multiply(table[p].character, table[q].character);
      for (int r = 0; r < T; ++r) N[p][q][r] = multiplicity_in(A, h, pq, table[r].character);
    }
  return N;
}

Report conjugate_multiplicity_symmetries(const HopfAlgebra& A, const HaarFunctional& h,
                                         const IrrepTable& table) {
  const auto N = fusion_multiplicities(A, h, table);
  const int T = table.size();
  int bad1 = 0, bad2 = 0, unresolved = 0;
  for (int p = 0; p < T; ++p) {
    const int pb = table[p].conjugate;
    if (pb < 0) {
      ++unresolved;
      continue;
    }
    for (int q = 0; q < T; ++q)
      for (int r = 0; r < T; ++r) {
        if (N[p][q][r] != N[pb][r][q]) ++bad1;
        if (N[r][pb][q] != N[q][p][r]) ++bad2;
      }
  }
  Report rep;
  rep.title = "conjugate multiplicity symmetries";
  rep.add("n_pq^r = n_(conj p) r^q violations", bad1, 0.0);
  rep.add("n_r(conj p)^q = n_qp^r violations", bad2, 0.0);
  rep.add("irreps without resolved conjugate", unresolved, 0.0);
  return rep;
}

double cg_block_residual(const HopfAlgebra& A, const IrrepTable& table, const CGSystem& cg) {
  const Corepresentation T = tensor_product(A, table[cg.p].pi, table[cg.q].pi, OperatorKind::Ordinary);
  const int m = cg.dp * cg.dq;
  double r = 0;
  for (int l = 0; l < A.dim(); ++l) {
    CMatrix blocks = CMatrix::Zero(m, m);
    for (int t = 0; t < table.size(); ++t)
      for (int a = 0; a < cg.multiplicity[t]; ++a) {
        const int c = cg.column(t, a, 0), dr = table[t].dim();
        blocks.block(c, c, dr, dr) = table[t].pi.layers[l];
      }
    r = std::max(r, linalg::max_abs(CMatrix(cg.Cinv * T.layers[l] * cg.C - blocks)));
  }
  return r;
}

CGSystem rotate_multiplicity_space(const CGSystem& cg, int r, const CMatrix& U) {
  const int n = cg.multiplicity[r], d = cg.irrep_dim[r];
  if (U.rows() != n || U.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "rotation does not match the multiplicity");
  Eigen::FullPivLU<CMatrix> lu(U);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularC, "rotation is singular");
  const CMatrix Uinv = lu.inverse();
  CGSystem out = cg;
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < d; ++l) {
      CVector col = CVector::Zero(cg.C.rows());
      CVector row = CVector::Zero(cg.Cinv.cols());
      for (int b = 0; b < n; ++b) {
        col += U(b, a) * cg.C.col(cg.column(r, b, l));
        row += Uinv(a, b) * cg.Cinv.row(cg.column(r, b, l)).transpose();
      }
      out.C.col(cg.column(r, a, l)) = col;
      out.Cinv.row(cg.column(r, a, l)) = row.transpose();
    }
  return out;
}

CGSystem solve_cg(const HopfAlgebra& A, const HaarFunctional& h, const IrrepTable& table, int p,
                  int q) {
  const Corepresentation& P = table[p].pi;
  const Corepresentation& Q = table[q].pi;
  const Corepresentation T = tensor_product(A, P, Q, OperatorKind::Ordinary);
  const int m = P.d * Q.d, n = A.dim();
  CGSystem cg;
  cg.p = p;
  cg.q = q;
  cg.dp = P.d;
  cg.dq = Q.d;
  cg.C = CMatrix::Zero(m, m);
  const Element chi_pq = A.multiply(table[p].character, table[q].character);
  int col = 0;
  for (int r = 0; r < table.size(); ++r) {
    const Corepresentation& R = table[r].pi;
    const int dr = R.d;
    cg.offset.push_back(col);
    cg.irrep_dim.push_back(dr);
    const int expected = multiplicity_in(A, h, chi_pq, table[r].character);
    // T_l X = X R_l for all l, X is m×dr (column-major unknown).
    const CMatrix Im = CMatrix::Identity(m, m), Ir = CMatrix::Identity(dr, dr);
    CMatrix sys(n * m * dr, m * dr);
    for (int l = 0; l < n; ++l)
      sys.middleRows(l * m * dr, m * dr) =
          linalg::kron(Ir, T.layers[l]) - linalg::kron(R.layers[l].transpose(), Im);
    const CMatrix N = linalg::nullspace(sys);
    if (N.cols() != expected)
      throw Error(ErrorKind::MultiplicityMismatch,
                  "intertwiner space for irrep " + std::to_string(r) + " has dimension " +
                      std::to_string(N.cols()) + ", characters give " + std::to_string(expected));
    if (col + expected * dr > m) throw Error(ErrorKind::SingularC, "too many CG columns");
    for (int a = 0; a < expected; ++a) {
      CMatrix X = Eigen::Map<const CMatrix>(N.col(a).data(), m, dr) * std::sqrt(static_cast<double>(dr));
      const cplx ph = linalg::phase_of_first_nonzero(X.col(0));
      cg.C.middleCols(col, dr) = X * std::conj(ph);
      col += dr;
    }
    cg.multiplicity.push_back(expected);
  }
  if (col != m)
    throw Error(ErrorKind::SingularC, "irrep table does not exhaust the tensor product");
  Eigen::FullPivLU<CMatrix> lu(cg.C);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularC, "CG matrix is singular");
  cg.Cinv = lu.inverse();
  cg.block_residual = cg_block_residual(A, table, cg);
  return cg;
}

CoupledBasisFunctions coupled_basis_functions(const HopfAlgebra& A, const BasisFunctionSet& phi,
                                              const BasisFunctionSet& psi, const CGSystem& cg) {
  if (phi.side != psi.side) throw Error(ErrorKind::DimensionMismatch, "sets use different sides");
  const bool right = phi.side == Side::R;
  const int dphi = phi.size(), dpsi = psi.size();
  if ((right && (cg.dp != dphi || cg.dq != dpsi)) || (!right && (cg.dp != dpsi || cg.dq != dphi)))
    throw Error(ErrorKind::DimensionMismatch, "CG system order does not match the sets");
  // prod[row] = φ_j ψ_k with row index taken in the CG system's own order.
  std::vector<Element> prod(dphi * dpsi);
  CMatrix span(A.dim(), dphi * dpsi);
  for (int j = 0; j < dphi; ++j)
    for (int k = 0; k < dpsi; ++k) {
      const int row = right ? cg.row(j, k) : cg.row(k, j);
      prod[row] = A.multiply(phi.functions[j], psi.functions[k]);
      span.col(row) = prod[row].coeffs;
    }
  CoupledBasisFunctions out;
  out.independent = linalg::rank(span) == dphi * dpsi;
  const int T = static_cast<int>(cg.multiplicity.size());
  CMatrix theta_all = span * cg.C;  // column (r,α,ℓ)
  for (int r = 0; r < T; ++r)
    for (int a = 0; a < cg.multiplicity[r]; ++a) {
      CoupledSet cs;
      cs.r = r;
      cs.alpha = a;
      cs.set.side = phi.side;
      for (int l = 0; l < cg.irrep_dim[r]; ++l)
        cs.set.functions.push_back({theta_all.col(cg.column(r, a, l))});
      out.sets.push_back(std::move(cs));
    }
  out.inverse_residual = linalg::max_abs(CMatrix(theta_all * cg.Cinv - span));
  return out;
}

Report verify_triple_haar(const HopfAlgebra& A, const HaarFunctional& h, const IrrepTable& table,
                          const CGSystem& cg_pq, const CGSystem& cg_qp, int r, double tol) {
  const int p = cg_pq.p, q = cg_pq.q;
  if (cg_qp.p != q || cg_qp.q != p)
    throw Error(ErrorKind::DimensionMismatch, "second CG system must be for the reversed order");
  const Corepresentation& P = table[p].pi;
  const Corepresentation& Q = table[q].pi;
  const Corepresentation& R = table[r].pi;
  const CMatrix& Fi = table[r].Finv;
  const cplx trFi = Fi.trace();
  const int dp = P.d, dq = Q.d, dr = R.d;
  // pq[(s,j,t,k)] = π^p_sj π^q_tk, qp = reversed product.
  std::vector<Element> pq(dp * dp * dq * dq), qp(dp * dp * dq * dq);
  auto idx = [&](int s, int j, int t, int k) { return ((s * dp + j) * dq + t) * dq + k; };
  for (int s = 0; s < dp; ++s)
    for (int j = 0; j < dp; ++j)
      for (int t = 0; t < dq; ++t)
        for (int k = 0; k < dq; ++k) {
          const Element a = P.entry(s, j), b = Q.entry(t, k);
          pq[idx(s, j, t, k)] = A.multiply(a, b);
          qp[idx(s, j, t, k)] = A.multiply(b, a);
        }
  double r1 = 0, r2 = 0;
  for (int u = 0; u < dr; ++u)
    for (int l = 0; l < dr; ++l) {
      const Element rs = A.star(R.entry(u, l));
      for (int s = 0; s < dp; ++s)
        for (int j = 0; j < dp; ++j)
          for (int t = 0; t < dq; ++t)
            for (int k = 0; k < dq; ++k) {
              const cplx lhs1 = h.of_product(rs, pq[idx(s, j, t, k)]);
              const cplx lhs2 = h.of_product(rs, qp[idx(s, j, t, k)]);
              cplx rhs1 = 0, rhs2 = 0;
              for (int a = 0; a < cg_pq.multiplicity[r]; ++a)
                for (int v = 0; v < dr; ++v)
                  rhs1 += cg_pq.Cinv(cg_pq.column(r, a, l), cg_pq.row(j, k)) *
                          cg_pq.C(cg_pq.row(s, t), cg_pq.column(r, a, v)) * Fi(v, u);
              for (int a = 0; a < cg_qp.multiplicity[r]; ++a)
                for (int v = 0; v < dr; ++v)
                  rhs2 += cg_qp.Cinv(cg_qp.column(r, a, l), cg_qp.row(k, j)) *
                          cg_qp.C(cg_qp.row(t, s), cg_qp.column(r, a, v)) * Fi(v, u);
              r1 = std::max(r1, std::abs(lhs1 - rhs1 / trFi));
              r2 = std::max(r2, std::abs(lhs2 - rhs2 / trFi));
            }
    }
  Report rep;
  rep.title = "triple Haar identity";
  rep.add("order (p,q)", r1, tol);
  rep.add("order (q,p)", r2, tol);
  return rep;
}

}  // namespace cqg
