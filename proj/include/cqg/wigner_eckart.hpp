#pragma once

#include <string>

#include "cqg/cg.hpp"
#include "cqg/tensor_ops.hpp"

namespace cqg {

// tensor(ℓ,k,j) = (ψ_ℓ, Q_k(φ_j))^X. The Gram matrix of (·,·)^X is given in
// carrier coordinates and the basis functions must lie in the carrier.
Tensor3 we_tensor(const RegularCarrier& carrier, const CMatrix& gram, const BasisFunctionSet& psi,
                  const TensorOperatorFamily& fam, const BasisFunctionSet& phi);

// Explicit formula. Ordinary families contract with the (q,p) system over rows
// (t,s); twisted families with the (p,q) system over rows (s,t).
CVector reduced_elements(const Tensor3& tensor, const CGSystem& cg, int r, const CMatrix& Finv,
                         OperatorKind kind);

// Σ_α Cinv[(r,α,ℓ),(k,j) or (j,k)] reduced_α.
Tensor3 reconstruct_tensor(const CGSystem& cg, int r, const CVector& reduced, int dq, int dp,
                           OperatorKind kind);

// Least-squares fit of the tensor onto the CG patterns; diagnostic only.
CVector reduced_elements_least_squares(const Tensor3& tensor, const CGSystem& cg, int r,
                                       OperatorKind kind);

struct WEReport {
  std::string p, q, r;
  Side side = Side::R;
  OperatorKind kind = OperatorKind::Ordinary;
  std::string cg_order;  // "(q,p)" or "(p,q)" relative to the labels above
  Tensor3 tensor;
  CVector reduced;
  CVector reduced_least_squares;
  int multiplicity = 0;
  double residual = 0.0;
  Report report;
};

// Factorisation check. With zero multiplicity the tensor itself must vanish.
WEReport verify_wigner_eckart(const RegularCarrier& carrier, const CMatrix& gram,
                              const IrrepTable& table, int r, const BasisFunctionSet& psi,
                              int q, const TensorOperatorFamily& fam, int p,
                              const BasisFunctionSet& phi, const CGSystem& cg, double tol = 1e-9);

}  // namespace cqg
