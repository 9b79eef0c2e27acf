#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqg/algebra.hpp"
#include "cqg/corep.hpp"
#include "cqg/haar.hpp"
#include "cqg/report.hpp"

namespace cqg {

// R: Δ(x). L: σ∘(S⊗id)∘Δ(x), i.e. x_(2) ⊗ S(x_(1)).
TensorElement regular_coaction(const HopfAlgebra& A, Side side, const Element& x);

// Comodule axioms and Haar invariance of a regular coaction.
Report regular_coaction_axioms(const HopfAlgebra& A, const HaarFunctional& h, Side side,
                               double tol = 1e-9);

// A subspace of A (all of A, or a coideal subalgebra) carrying the restriction
// of one regular coaction. Carrier coordinates are coefficients in the columns of embed.
struct RegularCarrier {
  Side side = Side::R;
  CMatrix embed;    // n×b
  CMatrix project;  // b×n left inverse of embed

  int dim() const { return static_cast<int>(embed.cols()); }
  static RegularCarrier full(const HopfAlgebra& A, Side side);
};

// Coaction of a carrier vector, first leg in carrier coordinates (b×n).
CMatrix carrier_coaction(const HopfAlgebra& A, const RegularCarrier& c, const CVector& x);

// Operator x ↦ y·x (left = true) or x ↦ x·y on carrier coordinates.
CMatrix carrier_multiplication(const HopfAlgebra& A, const RegularCarrier& c, const Element& y,
                               bool left);

struct BasisFunctionSet {
  std::string corep_label;
  Side side = Side::R;
  std::vector<Element> functions;  // A-coordinates
  std::optional<int> canonical_row;

  int size() const { return static_cast<int>(functions.size()); }
};

// max_j |π^X(ψ_j) − Σ_k ψ_k ⊗ π_kj|.
double check_basis_functions(const HopfAlgebra& A, const BasisFunctionSet& set,
                             const Corepresentation& pi);

// R: ψ_j = π_{row,j}. L: ψ_j = S^{-2}(π_{j,row}*), which needs unitary π (NotUnitary otherwise).
BasisFunctionSet canonical_basis_functions(const HopfAlgebra& A, const Corepresentation& pi,
                                           Side side, int row);

// Basis of all d-tuples in the carrier that transform under π.
std::vector<BasisFunctionSet> solve_basis_functions(const HopfAlgebra& A, const RegularCarrier& c,
                                                    const Corepresentation& pi);

// Inner products (ψ^q_k, φ^p_j)^X: zero off the diagonal, constant diagonal, and
// the F-dependent value for canonical sets.
Report basis_function_orthogonality(const HopfAlgebra& A, const GramPair& gram,
                                    const BasisFunctionSet& psi, const Irrep& q,
                                    const BasisFunctionSet& phi, const Irrep& p,
                                    double tol = 1e-10);

// Standard: d_p Σ a^X_[1] h(π*_mn a^X_[2]). Alternative puts π*_mn on the right
// of a^X_[2]; the two agree when h is a trace.
enum class ProjectionOrdering { Standard, Alternative };

CMatrix projection_operator(const HopfAlgebra& A, const HaarFunctional& h,
                            const Corepresentation& pi, int m, int n, Side side,
                            ProjectionOrdering ordering = ProjectionOrdering::Standard);

// Same operator assembled from the regular action operators of the dual basis.
CMatrix projection_operator_dual_form(const HopfAlgebra& A, const HaarFunctional& h,
                                      const Corepresentation& pi, int m, int n, Side side);

// Composition rule and action on canonical basis functions, for every tuple.
Report verify_projection_identities(const HopfAlgebra& A, const HaarFunctional& h,
                                    const IrrepTable& table, Side side, double tol = 1e-10,
                                    ProjectionOrdering ordering = ProjectionOrdering::Standard);

// max over basis pairs of |π^X(ab) − rule(a,b)|. For R the rule multiplies
// both legs in order; for L the second legs are multiplied in reverse order
// unless twisted = false.
double product_rule_residual(const HopfAlgebra& A, Side side, bool twisted);

Report product_coaction_check(const HopfAlgebra& A, double tol = 1e-9);

// Matrix of the operator f ↦ Σ f^X_[1] <a^m, f^X_[2]> from structure constants.
CMatrix regular_action_operator(const HopfAlgebra& A, Side side, int m);

// Regular actions of the dual against the coactions, plus the action law with
// the dual product.
Report dual_action_crosscheck(const HopfAlgebra& A, double tol = 1e-12);

}  // namespace cqg
