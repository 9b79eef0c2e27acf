#include "cqg/regular.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/linalg.hpp"

namespace cqg {

namespace {

double diff(const CMatrix& a, const CMatrix& b) { return linalg::max_abs(CMatrix(a - b)); }

}  // namespace

TensorElement regular_coaction(const HopfAlgebra& A, Side side, const Element& x) {
  TensorElement d = A.coproduct(x);
  if (side == Side::R) return d;
  return {d.coeffs.transpose() * A.antipode_matrix().transpose()};
}

Report regular_coaction_axioms(const HopfAlgebra& A, const HaarFunctional& h, Side side,
                               double tol) {
  const int n = A.dim();
  const double etol = effective_tolerance(A, tol);
  double coassoc = 0, counit = 0, left_inv = 0, right_inv = 0;
  std::vector<CMatrix> T(n);
  for (int j = 0; j < n; ++j) T[j] = regular_coaction(A, side, A.basis(j)).coeffs;
  for (int j = 0; j < n; ++j) {
    // (π⊗id)π(a) against (id⊗Δ)π(a), compared slice by slice in the last leg.
    for (int t = 0; t < n; ++t) {
      CMatrix lhs = CMatrix::Zero(n, n), rhs = CMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
          if (T[j](i, m) == cplx(0.0)) continue;
          // lhs(p,q) at last index t: Σ_i T_j(i,t) T_i(p,q)
          if (m == t) lhs += T[j](i, m) * T[i];
          // rhs(p,q) at t: Σ_m T_j(p,m) μ(m,q,t)
          for (int q = 0; q < n; ++q) rhs(i, q) += T[j](i, m) * A.mu(m, q, t);
        }
      coassoc = std::max(coassoc, diff(lhs, rhs));
    }
    const CVector back = T[j] * A.data().counit;
    counit = std::max(counit, linalg::max_abs(CVector(back - A.basis(j).coeffs)));
    const CVector target = h.h.covector(j) * A.one().coeffs;
    left_inv = std::max(left_inv, linalg::max_abs(CVector(T[j].transpose() * h.h.covector - target)));
    right_inv = std::max(right_inv, linalg::max_abs(CVector(T[j] * h.h.covector - target)));
  }
  Report rep;
  rep.title = std::string("regular coaction ") + to_string(side);
  rep.add("coaction coassociative", coassoc, etol);
  rep.add("coaction counital", counit, etol);
  rep.add("Haar invariance, first leg", left_inv, etol);
  rep.add("Haar invariance, second leg", right_inv, etol);
  return rep;
}

RegularCarrier RegularCarrier::full(const HopfAlgebra& A, Side side) {
  RegularCarrier c;
  c.side = side;
  c.embed = CMatrix::Identity(A.dim(), A.dim());
  c.project = c.embed;
  return c;
}

CMatrix carrier_coaction(const HopfAlgebra& A, const RegularCarrier& c, const CVector& x) {
  return c.project * regular_coaction(A, c.side, Element{c.embed * x}).coeffs;
}

CMatrix carrier_multiplication(const HopfAlgebra& A, const RegularCarrier& c, const Element& y,
                               bool left) {
  const CMatrix M = left ? A.left_mult_matrix(y) : A.right_mult_matrix(y);
  return c.project * M * c.embed;
}

double check_basis_functions(const HopfAlgebra& A, const BasisFunctionSet& set,
                             const Corepresentation& pi) {
  if (set.size() != pi.d)
    throw Error(ErrorKind::DimensionMismatch, "basis-function set size differs from corep dimension");
  double r = 0;
  for (int j = 0; j < pi.d; ++j) {
    CMatrix rhs = CMatrix::Zero(A.dim(), A.dim());
    for (int k = 0; k < pi.d; ++k) rhs += A.tensor(set.functions[k], pi.entry(k, j)).coeffs;
    r = std::max(r, diff(regular_coaction(A, set.side, set.functions[j]).coeffs, rhs));
  }
  return r;
}

BasisFunctionSet canonical_basis_functions(const HopfAlgebra& A, const Corepresentation& pi,
                                           Side side, int row) {
  if (row < 0 || row >= pi.d) throw Error(ErrorKind::DimensionMismatch, "row out of range");
  BasisFunctionSet s;
  s.corep_label = pi.label;
  s.side = side;
  s.canonical_row = row;
  if (side == Side::L) {
    const bool unitary = pi.unitary == Flag::Yes ||
                         (pi.unitary == Flag::Unknown && check_unitary(A, pi).passed());
    if (!unitary) throw Error(ErrorKind::NotUnitary, "left canonical basis functions need unitary input");
  }
  for (int j = 0; j < pi.d; ++j) {
    if (side == Side::R)
      s.functions.push_back(pi.entry(row, j));
    else
      s.functions.push_back({A.antipode_inverse_squared_matrix() * A.star(pi.entry(j, row)).coeffs});
  }
  return s;
}

std::vector<BasisFunctionSet> solve_basis_functions(const HopfAlgebra& A, const RegularCarrier& c,
                                                    const Corepresentation& pi) {
  const int b = c.dim(), n = A.dim(), d = pi.d;
  std::vector<CMatrix> K(b);
  for (int i = 0; i < b; ++i) K[i] = carrier_coaction(A, c, CVector::Unit(b, i));
  // Unknown (k,i) at column k*b+i; residual block j holds a b×n matrix.
  CMatrix sys = CMatrix::Zero(d * b * n, d * b);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < b; ++i) {
      CVector col(d * b * n);
      for (int j = 0; j < d; ++j) {
        CMatrix blk = CMatrix::Zero(b, n);
        if (j == k) blk += K[i];
        blk.row(i) -= pi.entry(k, j).coeffs.transpose();
        col.segment(j * b * n, b * n) = linalg::vec_rows(blk);
      }
      sys.col(k * b + i) = col;
    }
  CMatrix N = linalg::nullspace(sys);
  linalg::fix_column_phases(N);
  std::vector<BasisFunctionSet> out;
  for (Eigen::Index s = 0; s < N.cols(); ++s) {
    BasisFunctionSet set;
    set.corep_label = pi.label;
    set.side = c.side;
    for (int j = 0; j < d; ++j) set.functions.push_back({c.embed * N.col(s).segment(j * b, b)});
    out.push_back(std::move(set));
  }
  return out;
}

Report basis_function_orthogonality(const HopfAlgebra& A, const GramPair& gram,
                                    const BasisFunctionSet& psi, const Irrep& q,
                                    const BasisFunctionSet& phi, const Irrep& p, double tol) {
  (void)A;
  if (psi.side != phi.side) throw Error(ErrorKind::DimensionMismatch, "sets use different sides");
  const CMatrix& G = gram[psi.side];
  const bool same = q.label == p.label;
  CMatrix V(psi.size(), phi.size());
  for (int k = 0; k < psi.size(); ++k)
    for (int j = 0; j < phi.size(); ++j)
      V(k, j) = inner_product(G, psi.functions[k], phi.functions[j]);
  double off = 0, diag = 0, canon = 0;
  for (int k = 0; k < psi.size(); ++k)
    for (int j = 0; j < phi.size(); ++j)
      if (!same || j != k) off = std::max(off, std::abs(V(k, j)));
  Report rep;
  rep.title = "basis function orthogonality";
  rep.add("off-diagonal inner products vanish", off, tol);
  if (same) {
    for (int j = 0; j < phi.size(); ++j) diag = std::max(diag, std::abs(V(j, j) - V(0, 0)));
    rep.add("diagonal independent of index", diag, tol);
    if (psi.canonical_row && phi.canonical_row) {
      const cplx expect = p.Finv(*phi.canonical_row, *psi.canonical_row) / p.Finv.trace();
      for (int j = 0; j < phi.size(); ++j) canon = std::max(canon, std::abs(V(j, j) - expect));
      rep.add("canonical diagonal value", canon, tol);
    }
  }
  return rep;
}

CMatrix projection_operator(const HopfAlgebra& A, const HaarFunctional& h,
                            const Corepresentation& pi, int m, int n, Side side,
                            ProjectionOrdering ordering) {
  const int N = A.dim();
  const CVector s = A.star(pi.entry(m, n)).coeffs;
  // w(t) = h(π*_mn a_t) or h(a_t π*_mn)
  const CVector w = ordering == ProjectionOrdering::Standard ? CVector(h.product.transpose() * s)
                                                             : CVector(h.product * s);
  CMatrix P(N, N);
  for (int k = 0; k < N; ++k) P.col(k) = regular_coaction(A, side, A.basis(k)).coeffs * w;
  return static_cast<double>(pi.d) * P;
}

CMatrix regular_action_operator(const HopfAlgebra& A, Side side, int m) {
  const int n = A.dim();
  CMatrix Op = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (side == Side::R) {
        Op(j, k) = A.mu(k, j, m);
      } else {
        cplx v = 0;
        for (int l = 0; l < n; ++l) v += A.mu(k, l, j) * A.s(l, m);
        Op(j, k) = v;
      }
    }
  return Op;
}

CMatrix projection_operator_dual_form(const HopfAlgebra& A, const HaarFunctional& h,
                                      const Corepresentation& pi, int m, int n, Side side) {
  const int N = A.dim();
  const CVector s = A.star(pi.entry(m, n)).coeffs;
  const CVector w = h.product.transpose() * s;
  CMatrix P = CMatrix::Zero(N, N);
  for (int t = 0; t < N; ++t)
    if (w(t) != cplx(0.0)) P += w(t) * regular_action_operator(A, side, t);
  return static_cast<double>(pi.d) * P;
}

Report verify_projection_identities(const HopfAlgebra& A, const HaarFunctional& h,
                                    const IrrepTable& table, Side side, double tol,
                                    ProjectionOrdering ordering) {
  const int T = table.size(), N = A.dim();
  std::vector<std::vector<CMatrix>> P(T);
  CMatrix total = CMatrix::Zero(N, N);
  double route = 0;
  for (int p = 0; p < T; ++p) {
    const auto& pi = table[p].pi;
    for (int m = 0; m < pi.d; ++m)
      for (int n = 0; n < pi.d; ++n) {
        P[p].push_back(projection_operator(A, h, pi, m, n, side, ordering));
        if (ordering == ProjectionOrdering::Standard)
          route = std::max(route, diff(P[p].back(), projection_operator_dual_form(A, h, pi, m, n, side)));
        if (m == n) total += P[p].back();
      }
  }
  double compose = 0, action = 0;
  for (int p = 0; p < T; ++p) {
    const int dp = table[p].dim();
    const CMatrix& Fi = table[p].Finv;
    const cplx trFi = Fi.trace();
    for (int q = 0; q < T; ++q) {
      const int dq = table[q].dim();
      for (int m = 0; m < dp; ++m)
        for (int n = 0; n < dp; ++n)
          for (int j = 0; j < dq; ++j)
            for (int k = 0; k < dq; ++k) {
              CMatrix expect = CMatrix::Zero(N, N);
              if (p == q) expect = static_cast<double>(dp) * Fi(n, j) / trFi * P[p][m * dp + k];
              compose = std::max(compose, diff(CMatrix(P[p][m * dp + n] * P[q][j * dq + k]), expect));
            }
      for (int row = 0; row < dq; ++row) {
        const auto psi = canonical_basis_functions(A, table[q].pi, side, row);
        for (int m = 0; m < dp; ++m)
          for (int n = 0; n < dp; ++n)
            for (int k = 0; k < dq; ++k) {
              CVector expect = CVector::Zero(N);
              if (p == q && n == k)
                for (int l = 0; l < dq; ++l)
                  expect += static_cast<double>(dp) * Fi(l, m) / trFi * psi.functions[l].coeffs;
              const CVector got = P[p][m * dp + n] * psi.functions[k].coeffs;
              action = std::max(action, linalg::max_abs(CVector(got - expect)));
            }
      }
    }
  }
  Report rep;
  rep.title = std::string("projection operators ") + to_string(side);
  rep.notes["ordering"] = ordering == ProjectionOrdering::Standard ? "standard" : "alternative";
  rep.add("composition rule", compose, tol);
  rep.add("action on basis functions", action, tol);
  rep.add("diagonal projections sum to identity",
          diff(total, CMatrix(CMatrix::Identity(N, N))), tol);
  if (ordering == ProjectionOrdering::Standard)
    rep.add("structure-constant route agrees", route, 1e-12 * std::max(1.0, A.scale()));
  return rep;
}

double product_rule_residual(const HopfAlgebra& A, Side side, bool twisted) {
  const int n = A.dim();
  std::vector<CMatrix> T(n);
  for (int j = 0; j < n; ++j) T[j] = regular_coaction(A, side, A.basis(j)).coeffs;
  double r = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const CMatrix lhs = regular_coaction(A, side, A.multiply(A.basis(j), A.basis(k))).coeffs;
      CMatrix rhs = CMatrix::Zero(n, n);
      const bool reverse = side == Side::L && twisted;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (T[j](p, q) == cplx(0.0)) continue;
          const CMatrix& second = reverse ? A.right_mult_basis(q) : A.left_mult_basis(q);
          rhs += T[j](p, q) * (A.left_mult_basis(p) * T[k] * second.transpose());
        }
      r = std::max(r, diff(lhs, rhs));
    }
  return r;
}

Report product_coaction_check(const HopfAlgebra& A, double tol) {
  const double etol = effective_tolerance(A, tol);
  Report rep;
  rep.title = "coaction of products";
  rep.add("right coaction is multiplicative", product_rule_residual(A, Side::R, true), etol);
  rep.add("left coaction with reversed second legs", product_rule_residual(A, Side::L, true), etol);
  rep.notes["left coaction without reversal, residual"] =
      std::to_string(product_rule_residual(A, Side::L, false));
  return rep;
}

Report dual_action_crosscheck(const HopfAlgebra& A, double tol) {
  const int n = A.dim();
  const double etol = effective_tolerance(A, tol);
  const DualAlgebra D = build_dual(A);
  Report rep;
  rep.title = "dual regular actions";
  rep.merge(dual_pairing_check(A, D, etol), "pairing: ");
  for (Side side : {Side::R, Side::L}) {
    std::vector<CMatrix> Op(n);
    for (int m = 0; m < n; ++m) Op[m] = regular_action_operator(A, side, m);
    double coaction = 0, law = 0;
    for (int k = 0; k < n; ++k) {
      const CMatrix T = regular_coaction(A, side, A.basis(k)).coeffs;
      for (int m = 0; m < n; ++m)
        coaction = std::max(coaction, linalg::max_abs(CVector(T.col(m) - Op[m].col(k))));
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CMatrix prod = CMatrix::Zero(n, n);
        for (int l = 0; l < n; ++l)
          if (D.m(i, j, l) != cplx(0.0)) prod += D.m(i, j, l) * Op[l];
        law = std::max(law, diff(CMatrix(Op[i] * Op[j]), prod));
      }
    CMatrix unit = CMatrix::Zero(n, n);
    for (int m = 0; m < n; ++m) unit += D.data().unit(m) * Op[m];
    const std::string tag = std::string(" ") + to_string(side);
    rep.add("operators reproduce coaction" + tag, coaction, etol);
    rep.add("action respects dual product" + tag, law, etol);
    rep.add("dual unit acts as identity" + tag, diff(unit, CMatrix(CMatrix::Identity(n, n))), etol);
  }
  return rep;
}

}  // namespace cqg
