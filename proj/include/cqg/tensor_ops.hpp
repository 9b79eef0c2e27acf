#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqg/cg.hpp"
#include "cqg/corep.hpp"
#include "cqg/regular.hpp"

namespace cqg {

// Operators act on carrier coordinates (b×b matrices, column convention).
// Side R carriers use the right regular coaction, side L the left one.

// Σ_m terms[m] ⊗ a_m.
struct OperatorCoaction {
  std::vector<CMatrix> terms;
};

// Standard: ordinary uses M and S, twisted uses M∘σ and S^{-1}. SwapOnly
// (M∘σ with S) and InverseOnly (M with S^{-1}) ignore the kind and are kept as
// diagnostics.
enum class CoactionRule { Standard, SwapOnly, InverseOnly };

// Linearised operator coaction for one carrier and kind. Built once; applying
// it is a sum over precomputed b×n blocks.
class OperatorCoactionMap {
 public:
  OperatorCoactionMap(const HopfAlgebra& A, const RegularCarrier& carrier, OperatorKind kind,
                      CoactionRule rule = CoactionRule::Standard);

  int carrier_dim() const { return b_; }
  int algebra_dim() const { return n_; }
  OperatorKind kind() const { return kind_; }
  Side side() const { return side_; }

  OperatorCoaction apply(const CMatrix& Q) const;
  // Row block m (b² rows, column-major vec) maps vec(Q) to vec(Q^{(m)}).
  const CMatrix& matrix() const { return W_; }

 private:
  int n_ = 0, b_ = 0;
  OperatorKind kind_;
  Side side_;
  std::vector<CMatrix> K_;  // carrier coaction of each carrier basis vector
  std::vector<CMatrix> G_;  // G_[p*n + w]: K_p composed with the second-leg product by a_w
  CMatrix W_;
};

// Direct evaluation of the composite on every carrier basis vector.
OperatorCoaction coaction_on_operator(const HopfAlgebra& A, const RegularCarrier& carrier,
                                      const CMatrix& Q, OperatorKind kind,
                                      CoactionRule rule = CoactionRule::Standard);

// Same coaction on full A from the structure constants alone.
OperatorCoaction coaction_on_operator_structure_constants(const HopfAlgebra& A, const CMatrix& Q,
                                                          OperatorKind kind, Side side);

double coaction_difference(const OperatorCoaction& a, const OperatorCoaction& b);

struct TensorOperatorFamily {
  OperatorKind kind = OperatorKind::Ordinary;
  Side side = Side::R;
  std::string corep_label;
  std::vector<CMatrix> ops;
  double residual = 0.0;

  int size() const { return static_cast<int>(ops.size()); }
};

std::string variant_name(OperatorKind kind, Side side);

// max_j over carrier basis vectors of the defining condition
// coaction(Q_j) = Σ_k Q_k ⊗ π_kj, evaluated by the composite.
double defining_condition_residual(const HopfAlgebra& A, const RegularCarrier& carrier,
                                   const std::vector<CMatrix>& ops, const Corepresentation& pi,
                                   OperatorKind kind, CoactionRule rule = CoactionRule::Standard);

// Defining condition plus the coaction form through the linearised map and,
// for full carriers, the structure-constant route.
Report check_family(const HopfAlgebra& A, const RegularCarrier& carrier,
                    const TensorOperatorFamily& fam, const Corepresentation& pi,
                    double tol = 1e-10);

TensorOperatorFamily identity_family(const RegularCarrier& carrier, const std::string& label);

// ordinary-R: x ↦ ψ_j x; twisted-R: x ↦ x ψ_j; ordinary-L: x ↦ x ψ_j; twisted-L: x ↦ ψ_j x.
// The residual field is the defining-condition residual against pi.
TensorOperatorFamily multiplication_family(const HopfAlgebra& A, const RegularCarrier& carrier,
                                           const BasisFunctionSet& psi, const Corepresentation& pi,
                                           OperatorKind kind);

// Basis of all d-tuples of carrier operators satisfying the defining condition.
std::vector<TensorOperatorFamily> solve_family_space(const HopfAlgebra& A,
                                                     const RegularCarrier& carrier,
                                                     const Corepresentation& pi,
                                                     OperatorKind kind);

// Least-squares distance of a family from the span of a solved family space.
double family_span_residual(const std::vector<TensorOperatorFamily>& space,
                            const TensorOperatorFamily& fam);

// π^X(Q_k(φ_j)) against Σ Q_t(φ_s) ⊗ π^q_tk π^p_sj (ordinary) or π^p_sj π^q_tk (twisted).
Report apply_family_to_basis_functions(const HopfAlgebra& A, const RegularCarrier& carrier,
                                       const TensorOperatorFamily& fam, const Corepresentation& q,
                                       const BasisFunctionSet& phi, const Corepresentation& p,
                                       double tol = 1e-10);

struct CoupledFamily {
  int r = -1;
  int alpha = 0;
  TensorOperatorFamily family;
};

// Products Q^p_j Q^q_k contracted with C. Ordinary families need the (p,q)
// system with rows (j,k); twisted families the (q,p) system with rows (k,j).
std::vector<CoupledFamily> couple_families(const TensorOperatorFamily& famP,
                                           const TensorOperatorFamily& famQ, const CGSystem& cg,
                                           const IrrepTable& table);

// Product rule, comodule axioms and counit law of the operator coactions on
// random operators; excluded rules reported as notes.
Report operator_coaction_properties(const HopfAlgebra& A, const RegularCarrier& carrier,
                                    std::uint64_t seed = 1, int samples = 3, double tol = 1e-9);

// Identity operator under the two excluded rules; residuals reported, never enforced.
Report excluded_rule_diagnostics(const HopfAlgebra& A, Side side);

}  // namespace cqg
