#pragma once

#include "cqg/algebra.hpp"
#include "cqg/report.hpp"

namespace cqg {

struct HaarFunctional {
  LinearFunctional h;
  // product(j,k) = h(a_j a_k); h(xy) = x^T product y.
  CMatrix product;
  Report certificates;

  cplx operator()(const Element& x) const { return h(x); }
  cplx of_product(const Element& x, const Element& y) const;
};

// Wraps an arbitrary covector as a functional without certifying it.
HaarFunctional make_functional(const HopfAlgebra& A, const CVector& covector);

// Solves the two invariance equations plus normalization as one linear system.
// Throws NoHaar, NonUniqueHaar or PositivityFailure.
HaarFunctional solve_haar(const HopfAlgebra& A, double tol = 1e-9);

Report verify_haar_lemmas(const HopfAlgebra& A, const HaarFunctional& h, double tol = 1e-10);

// gramR(j,k) = h(a_j* a_k); gramL(j,k) = h(a_k (S²(a_j))*). Both are
// antilinear in the first slot: (x,y)^X = x^H gram y.
struct GramPair {
  CMatrix gramR;
  CMatrix gramL;
  Report certificates;

  const CMatrix& operator[](Side s) const { return s == Side::R ? gramR : gramL; }
};

GramPair gram_matrices(const HopfAlgebra& A, const HaarFunctional& h);

cplx inner_product(const CMatrix& gram, const Element& x, const Element& y);

}  // namespace cqg
