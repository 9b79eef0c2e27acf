#pragma once

#include <vector>

#include "cqg/corep.hpp"
#include "cqg/regular.hpp"

namespace cqg {

Element character(const Corepresentation& pi);

struct CharacterPairing {
  cplx forward;   // h(χ^p* χ^q)
  cplx reversed;  // h(χ^q χ^p*)
};
CharacterPairing character_orthogonality(const HopfAlgebra& A, const HaarFunctional& h,
                                         const Element& chi_p, const Element& chi_q);

// Rounds h(χ^V χ^p*) to an integer; throws NonIntegerMultiplicity if it is
// further than tol from one.
int multiplicity_in(const HopfAlgebra& A, const HaarFunctional& h, const Element& chi_v,
                    const Element& chi_p, double tol = 1e-8);

// Ordinary: entries π^V_sj π^W_tk; twisted: π^W_tk π^V_sj. Row (s,t) sits at s·d_W + t.
Corepresentation tensor_product(const HopfAlgebra& A, const Corepresentation& V,
                                const Corepresentation& W, OperatorKind kind);

// Permutation P with P(t·dV + s, s·dW + t) = 1, so twisted(V,W) = P^T ordinary(W,V) P.
CMatrix pair_swap_permutation(int dV, int dW);

// n_pq^r from characters, indexed [p][q][r].
std::vector<std::vector<std::vector<int>>> fusion_multiplicities(const HopfAlgebra& A,
                                                                 const HaarFunctional& h,
                                                                 const IrrepTable& table);

Report conjugate_multiplicity_symmetries(const HopfAlgebra& A, const HaarFunctional& h,
                                         const IrrepTable& table);

// Change of basis that splits π^p ⊠ π^q into copies of table irreps. Columns
// are ordered by irrep r, then copy α, then row ℓ of π^r; rows by (j,k).
struct CGSystem {
  int p = -1, q = -1;
  int dp = 0, dq = 0;
  CMatrix C;
  CMatrix Cinv;
  std::vector<int> multiplicity;  // per table irrep
  std::vector<int> offset;        // first column of irrep r
  std::vector<int> irrep_dim;
  double block_residual = 0.0;

  int row(int j, int k) const { return j * dq + k; }
  int column(int r, int alpha, int l) const { return offset[r] + alpha * irrep_dim[r] + l; }
};

CGSystem solve_cg(const HopfAlgebra& A, const HaarFunctional& h, const IrrepTable& table, int p,
                  int q);

// Replaces the copies of irrep r by their combinations under U (columns
// (r,α,ℓ) become Σ_β C(r,β,ℓ) U(β,α)); Cinv changes accordingly.
CGSystem rotate_multiplicity_space(const CGSystem& cg, int r, const CMatrix& U);

// Max over layers of |Cinv (π^p⊠π^q) C − ⊕ π^r|.
double cg_block_residual(const HopfAlgebra& A, const IrrepTable& table, const CGSystem& cg);

struct CoupledSet {
  int r = -1;
  int alpha = 0;
  BasisFunctionSet set;
};
struct CoupledBasisFunctions {
  std::vector<CoupledSet> sets;
  double inverse_residual = 0.0;  // products re-expanded in the coupled sets
  bool independent = true;        // products φ_j ψ_k linearly independent
};
// Side R uses the (p,q) system with rows (j,k); side L the (q,p) system with rows (k,j).
CoupledBasisFunctions coupled_basis_functions(const HopfAlgebra& A, const BasisFunctionSet& phi,
                                              const BasisFunctionSet& psi, const CGSystem& cg);

// Haar of π^r*_uℓ times both orders of π^p, π^q coefficients against the CG formulas.
Report verify_triple_haar(const HopfAlgebra& A, const HaarFunctional& h, const IrrepTable& table,
                          const CGSystem& cg_pq, const CGSystem& cg_qp, int r, double tol = 1e-9);

}  // namespace cqg
