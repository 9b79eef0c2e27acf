#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqg/algebra.hpp"
#include "cqg/haar.hpp"
#include "cqg/report.hpp"

namespace cqg {

enum class Flag { Unknown, Yes, No };

// Matrix coefficients π_jk ∈ A stored by basis index: layers[l](j,k) is the
// coefficient of a_l in π_jk. The coaction is v_j ↦ Σ_k v_k ⊗ π_kj.
struct Corepresentation {
  std::string label;
  int d = 0;
  std::vector<CMatrix> layers;
  Flag verified = Flag::Unknown;
  Flag unitary = Flag::Unknown;
  Flag irreducible = Flag::Unknown;
  std::optional<CMatrix> F;
  std::string F_normalization;

  int algebra_dim() const { return static_cast<int>(layers.size()); }
  Element entry(int j, int k) const;
  // Σ_l layers[l] ⊗ a_l evaluated against a functional: (Σ_l f_l layers[l]).
  CMatrix evaluate(const CVector& functional) const;

  static Corepresentation from_entries(const std::vector<std::vector<Element>>& entries,
                                       std::string label = "");
};

// A right comodule given by its coaction matrix in some carrier basis.
using ComoduleCoaction = Corepresentation;

Corepresentation trivial_corep(const HopfAlgebra& A);
// Coaction matrix of the right (Δ) or left (σ∘(S⊗id)∘Δ) regular comodule in the basis a_j.
Corepresentation regular_corep(const HopfAlgebra& A, Side side);
Corepresentation direct_sum(const Corepresentation& a, const Corepresentation& b);
// Coefficients in the basis given by the columns of P: P^{-1} π P.
Corepresentation change_basis(const Corepresentation& pi, const CMatrix& P);

Report verify_corep(const HopfAlgebra& A, const Corepresentation& pi, double tol = 1e-9);
Report check_unitary(const HopfAlgebra& A, const Corepresentation& pi, double tol = 1e-9);
// max |Σ_{l,m} π_lj* G_lm π_mk − G_jk 1|: zero iff π is unitary for the inner product G.
double unitarity_residual(const HopfAlgebra& A, const Corepresentation& pi, const CMatrix& G);

// Basis of {Φ : Φ π_V = π_W Φ} (d_W × d_V matrices).
std::vector<CMatrix> morphism_space(const Corepresentation& V, const Corepresentation& W);
bool is_irreducible(const Corepresentation& pi);
bool equivalent(const Corepresentation& V, const Corepresentation& W);

Corepresentation doubly_contragredient(const HopfAlgebra& A, const Corepresentation& pi);
Corepresentation conjugate_corep(const HopfAlgebra& A, const Corepresentation& pi);

struct FMatrix {
  CMatrix F;
  std::string normalization;
  double residual = 0.0;
};
// Solves F π = π‡ F. Throws NoF or TraceZero.
FMatrix compute_F(const HopfAlgebra& A, const Corepresentation& pi);

// Both Schur orthogonality relations between π^p and π^q, with the F-deformed
// diagonal values when π^p and π^q are the same corepresentation.
Report verify_orthogonality(const HopfAlgebra& A, const HaarFunctional& h,
                            const Corepresentation& p, const Corepresentation& q,
                            double tol = 1e-10);

// Runs verify_corep, check_unitary and the irreducibility test, and records
// the outcomes in the flags.
Corepresentation certify(const HopfAlgebra& A, Corepresentation pi, double tol = 1e-9);

struct ComoduleBlock {
  CMatrix basis;  // carrier coordinates, one column per block basis vector
  Corepresentation irrep;
};

// Splits a comodule that is unitary for `gram` into irreducible orthogonal
// blocks by eigen-splitting random Hermitian commutant elements.
std::vector<ComoduleBlock> decompose_comodule(const ComoduleCoaction& c, const CMatrix& gram,
                                              std::uint64_t seed = 1);

// Σ_l h(π_lj* π_lk): an inner product for which π is unitary.
CMatrix invariant_gram(const HopfAlgebra& A, const HaarFunctional& h, const Corepresentation& pi);

struct Unitarized {
  Corepresentation pi;
  CMatrix change;  // pi = change^{-1} · input · change
};
Unitarized unitarize(const HopfAlgebra& A, const Corepresentation& pi, const CMatrix& gram);

struct Irrep {
  std::string label;
  std::vector<std::string> aliases;
  Corepresentation pi;
  CMatrix F;
  CMatrix Finv;
  Element character;
  int conjugate = -1;
  int regular_multiplicity = 0;

  int dim() const { return pi.d; }
};

// One unitary representative per equivalence class of irreducible
// corepresentations, ordered trivial first, then by dimension and character.
struct IrrepTable {
  std::vector<Irrep> irreps;

  int size() const { return static_cast<int>(irreps.size()); }
  const Irrep& operator[](int i) const { return irreps[i]; }
  // Accepts a label, an alias or a decimal index. Throws UnknownIrrep.
  int find(const std::string& name) const;
  // Index of the table irrep equivalent to pi, or -1.
  int classify(const Corepresentation& pi) const;
};

IrrepTable build_irrep_table(const HopfAlgebra& A, const GramPair& gram,
                             std::uint64_t seed = 1);

}  // namespace cqg
