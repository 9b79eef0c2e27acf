#include "cqg/wigner_eckart.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/linalg.hpp"

namespace cqg {

namespace {

// Row of the CG system for operator index k and function index j.
int cg_row(const CGSystem& cg, int k, int j, OperatorKind kind) {
  return kind == OperatorKind::Ordinary ? cg.row(k, j) : cg.row(j, k);
}

void require_cg_shape(const CGSystem& cg, int dq, int dp, OperatorKind kind) {
  const bool ok = kind == OperatorKind::Ordinary ? (cg.dp == dq && cg.dq == dp)
                                                 : (cg.dp == dp && cg.dq == dq);
  if (!ok) throw Error(ErrorKind::DimensionMismatch, "CG system order does not fit the tensor");
}

}  // namespace

Tensor3 we_tensor(const RegularCarrier& carrier, const CMatrix& gram, const BasisFunctionSet& psi,
                  const TensorOperatorFamily& fam, const BasisFunctionSet& phi) {
  if (psi.side != fam.side || phi.side != fam.side || carrier.side != fam.side)
    throw Error(ErrorKind::DimensionMismatch, "basis sets, family and carrier use different sides");
  const int dr = psi.size(), dq = fam.size(), dp = phi.size();
  if (gram.rows() != carrier.dim() || gram.cols() != carrier.dim())
    throw Error(ErrorKind::DimensionMismatch, "Gram matrix is not in carrier coordinates");
  Tensor3 T(dr, dq, dp);
  for (int k = 0; k < dq; ++k)
    for (int j = 0; j < dp; ++j) {
      const CVector Gimg = gram * (fam.ops[k] * (carrier.project * phi.functions[j].coeffs));
      for (int l = 0; l < dr; ++l) T(l, k, j) = (carrier.project * psi.functions[l].coeffs).dot(Gimg);
    }
  return T;
}

CVector reduced_elements(const Tensor3& tensor, const CGSystem& cg, int r, const CMatrix& Finv,
                         OperatorKind kind) {
  const int dr = tensor.extent(0), dq = tensor.extent(1), dp = tensor.extent(2);
  require_cg_shape(cg, dq, dp, kind);
  if (cg.irrep_dim[r] != dr || Finv.rows() != dr)
    throw Error(ErrorKind::DimensionMismatch, "target irrep dimension differs from the tensor");
  const cplx tr = Finv.trace();
  if (std::abs(tr) < 1e-14) throw Error(ErrorKind::TraceZero, "trace of F inverse vanishes");
  CVector red = CVector::Zero(cg.multiplicity[r]);
  for (int a = 0; a < cg.multiplicity[r]; ++a) {
    cplx acc = 0;
    for (int u = 0; u < dr; ++u)
      for (int t = 0; t < dq; ++t)
        for (int s = 0; s < dp; ++s)
          for (int v = 0; v < dr; ++v)
            acc += tensor(u, t, s) * cg.C(cg_row(cg, t, s, kind), cg.column(r, a, v)) * Finv(v, u);
    red(a) = acc / tr;
  }
  return red;
}

Tensor3 reconstruct_tensor(const CGSystem& cg, int r, const CVector& reduced, int dq, int dp,
                           OperatorKind kind) {
  require_cg_shape(cg, dq, dp, kind);
  const int dr = cg.irrep_dim[r];
  Tensor3 T(dr, dq, dp);
  for (int l = 0; l < dr; ++l)
    for (int k = 0; k < dq; ++k)
      for (int j = 0; j < dp; ++j) {
        cplx acc = 0;
        for (int a = 0; a < cg.multiplicity[r]; ++a)
          acc += cg.Cinv(cg.column(r, a, l), cg_row(cg, k, j, kind)) * reduced(a);
        T(l, k, j) = acc;
      }
  return T;
}

CVector reduced_elements_least_squares(const Tensor3& tensor, const CGSystem& cg, int r,
                                       OperatorKind kind) {
  const int dr = tensor.extent(0), dq = tensor.extent(1), dp = tensor.extent(2);
  const int nr = cg.multiplicity[r];
  if (nr == 0) return CVector(0);
  CMatrix B(dr * dq * dp, nr);
  CVector y(dr * dq * dp);
  for (int a = 0; a < nr; ++a) {
    const Tensor3 unit = reconstruct_tensor(cg, r, CVector::Unit(nr, a), dq, dp, kind);
    for (int l = 0; l < dr; ++l)
      for (int k = 0; k < dq; ++k)
        for (int j = 0; j < dp; ++j) B((l * dq + k) * dp + j, a) = unit(l, k, j);
  }
  for (int l = 0; l < dr; ++l)
    for (int k = 0; k < dq; ++k)
      for (int j = 0; j < dp; ++j) y((l * dq + k) * dp + j) = tensor(l, k, j);
  return B.colPivHouseholderQr().solve(y);
}

WEReport verify_wigner_eckart(const RegularCarrier& carrier, const CMatrix& gram,
                              const IrrepTable& table, int r, const BasisFunctionSet& psi,
                              int q, const TensorOperatorFamily& fam, int p,
                              const BasisFunctionSet& phi, const CGSystem& cg, double tol) {
  if (psi.size() != table[r].dim() || fam.size() != table[q].dim() || phi.size() != table[p].dim())
    throw Error(ErrorKind::DimensionMismatch, "inputs do not match the named irreps");
  WEReport out;
  out.p = table[p].label;
  out.q = table[q].label;
  out.r = table[r].label;
  out.side = fam.side;
  out.kind = fam.kind;
  const bool qp = cg.p == q && cg.q == p, pq = cg.p == p && cg.q == q;
  if (qp && (!pq || fam.kind == OperatorKind::Ordinary))
    out.cg_order = "(q,p)";
  else if (pq)
    out.cg_order = "(p,q)";
  else
    out.cg_order = "unrelated";
  out.tensor = we_tensor(carrier, gram, psi, fam, phi);
  out.multiplicity = cg.multiplicity[r];
  out.reduced = reduced_elements(out.tensor, cg, r, table[r].Finv, fam.kind);
  out.reduced_least_squares = reduced_elements_least_squares(out.tensor, cg, r, fam.kind);
  const Tensor3 rec = reconstruct_tensor(cg, r, out.reduced, fam.size(), phi.size(), fam.kind);
  double res = 0;
  for (int l = 0; l < psi.size(); ++l)
    for (int k = 0; k < fam.size(); ++k)
      for (int j = 0; j < phi.size(); ++j) res = std::max(res, std::abs(out.tensor(l, k, j) - rec(l, k, j)));
  out.residual = res;
  Report& rep = out.report;
  rep.title = "Wigner-Eckart " + variant_name(fam.kind, fam.side) + " r=" + out.r + " q=" + out.q +
              " p=" + out.p;
  rep.add("factorisation", res, tol);
  if (out.multiplicity == 0) {
    rep.add("tensor vanishes when the multiplicity is zero", out.tensor.max_abs(), tol);
  } else {
    rep.add("explicit and least-squares reduced elements agree",
            linalg::max_abs(CVector(out.reduced - out.reduced_least_squares)), tol);
  }
  rep.notes["cg order"] = out.cg_order;
  rep.notes["multiplicity"] = std::to_string(out.multiplicity);
  return out;
}

}  // namespace cqg
