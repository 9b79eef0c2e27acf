#pragma once

#include <string>
#include <vector>

#include "cqg/groups.hpp"
#include "cqg/haar.hpp"
#include "cqg/regular.hpp"
#include "cqg/tensor_ops.hpp"
#include "cqg/wigner_eckart.hpp"

namespace cqg {

// Right coideal: Δ(B) ⊆ B⊗A. Left coideal: Δ(B) ⊆ A⊗B.
enum class CoidealSide { Right, Left };
const char* to_string(CoidealSide s);

struct CoidealSubalgebra {
  std::string parent_label;
  CoidealSide side = CoidealSide::Right;
  CMatrix basis_matrix;  // b×n, rows span B as supplied
  CMatrix basis;         // b×n internal basis: the supplied rows, or an orthonormal row basis if they are dependent
  bool subalgebra = false;
  bool star_closed = false;
  bool contains_unit = false;
  bool coideal = false;
  bool s2_invariant = false;
  Report verification;

  int dim() const { return static_cast<int>(basis.rows()); }
  CMatrix embed() const { return basis.transpose(); }
  // Coordinates of an element of B in the internal basis.
  CVector coordinates(const Element& x) const;
  Element element(const CVector& coords) const;
};

// Closure, unit, coideal and S²-invariance residuals measured with the
// Euclidean projector onto span(B).
Report verify_coideal(const HopfAlgebra& A, const CMatrix& basis_matrix, CoidealSide side,
                      double tol = 1e-10);

// Verifies the candidate and records the flags. Dependent rows are replaced by
// an orthonormal basis of their span.
CoidealSubalgebra make_coideal_subalgebra(const HopfAlgebra& A, const CMatrix& basis_matrix,
                                          CoidealSide side, double tol = 1e-10);

// Indicator functions of the cosets xH (Left) or Hx (Right) in C(G), in order
// of first appearance. Throws NotASubgroup.
CoidealSubalgebra build_coset_subalgebra(const HopfAlgebra& function_algebra,
                                         const GroupTable& G, const std::vector<int>& H,
                                         CoidealSide side);

// Carrier for the restricted coaction π^X_B: side R needs a right coideal,
// side L a left coideal that is S²-invariant. Throws CoidealMismatch.
RegularCarrier coideal_carrier(const CoidealSubalgebra& B, Side side);

// b×n coefficients of π^X_B(b) with the first leg in the internal basis.
CMatrix restricted_coaction(const HopfAlgebra& A, const CoidealSubalgebra& B, Side side,
                            const CVector& coords);

// Comodule axioms and Haar invariance of π^X_B.
Report restricted_coaction_axioms(const HopfAlgebra& A, const HaarFunctional& h,
                                  const CoidealSubalgebra& B, Side side, double tol = 1e-10);

// E^H G_X E in the internal basis. Throws PositivityFailure.
CMatrix restricted_gram(const CoidealSubalgebra& B, Side side, const GramPair& gram);

struct RestrictedBasisFunctions {
  std::vector<BasisFunctionSet> solutions;  // basis of the solution space
  std::vector<BasisFunctionSet> canonical;  // canonical sets whose entries all lie in B
};

RestrictedBasisFunctions solve_restricted_basis_functions(const HopfAlgebra& A,
                                                          const CoidealSubalgebra& B, Side side,
                                                          const Corepresentation& pi,
                                                          double tol = 1e-10);

}  // namespace cqg
