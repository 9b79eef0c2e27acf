#include "cqg/haar.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/linalg.hpp"

namespace cqg {

cplx HaarFunctional::of_product(const Element& x, const Element& y) const {
  return (x.coeffs.transpose() * product * y.coeffs)(0);
}

HaarFunctional make_functional(const HopfAlgebra& A, const CVector& covector) {
  if (covector.size() != A.dim())
    throw Error(ErrorKind::DimensionMismatch, "functional length differs from algebra dimension");
  HaarFunctional f;
  f.h.covector = covector;
  const int n = A.dim();
  f.product = CMatrix::Zero(n, n);
  for (int l = 0; l < n; ++l)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f.product(j, k) += A.m(j, k, l) * covector(l);
  return f;
}

HaarFunctional solve_haar(const HopfAlgebra& A, double tol) {
  const int n = A.dim();
  const CVector& u = A.data().unit;
  // Rows (l,k): (h⊗id)Δ(a_l) = h(a_l) 1; rows (l,j): (id⊗h)Δ(a_l) = h(a_l) 1.
  CMatrix H = CMatrix::Zero(2 * n * n, n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k) {
      const int r1 = l * n + k, r2 = n * n + l * n + k;
      for (int j = 0; j < n; ++j) {
        H(r1, j) += A.mu(l, j, k);
        H(r2, j) += A.mu(l, k, j);
      }
      H(r1, l) -= u(k);
      H(r2, l) -= u(k);
    }
  const CMatrix N = linalg::nullspace(H, 1e-9);
  if (N.cols() == 0) throw Error(ErrorKind::NoHaar, "invariance equations have only the zero solution");
  if (N.cols() > 1)
    throw Error(ErrorKind::NonUniqueHaar,
                "invariant functionals form a space of dimension " + std::to_string(N.cols()));
  const cplx norm = (u.transpose() * N.col(0))(0);
  if (std::abs(norm) < 1e-12) throw Error(ErrorKind::NoHaar, "invariant functional vanishes on 1");
  HaarFunctional f = make_functional(A, N.col(0) / norm);

  const double etol = effective_tolerance(A, tol);
  Report& c = f.certificates;
  c.title = "Haar functional certificates";
  c.add("normalization", std::abs(f(A.one()) - cplx(1.0)), etol);
  c.add("invariance", linalg::max_abs(CVector(H * f.h.covector)), etol);
  double star_real = 0, s_inv = 0;
  for (int j = 0; j < n; ++j) {
    const Element e = A.basis(j);
    star_real = std::max(star_real, std::abs(f(A.star(e)) - std::conj(f(e))));
    s_inv = std::max(s_inv, std::abs(f(A.antipode(e)) - f(e)));
  }
  c.add("star reality", star_real, etol);
  c.add("antipode invariance", s_inv, etol);

  const GramPair g = gram_matrices(A, f);
  const auto pd = linalg::certify_pd(g.gramR);
  c.add_flag("positivity", pd.positive_definite);
  c.notes["right_gram_min_eigenvalue"] = std::to_string(pd.min_eigenvalue);
  if (!pd.positive_definite)
    throw Error(ErrorKind::PositivityFailure,
                "right Gram matrix has min eigenvalue " + std::to_string(pd.min_eigenvalue));
  return f;
}

Report verify_haar_lemmas(const HopfAlgebra& A, const HaarFunctional& h, double tol) {
  const int n = A.dim();
  const double etol = effective_tolerance(A, tol);
  const CMatrix& hp = h.product;
  const CMatrix& S = A.antipode_matrix();
  const CVector& hv = h.h.covector;
  double antipode_right = 0, antipode_left = 0, fact_r = 0, fact_l = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Σ h(a b_(1)) S(b_(2)) = Σ h(a_(1) b) a_(2)
      CVector lhs = CVector::Zero(n), rhs = CVector::Zero(n);
      // Σ h(b_(2) a) S(b_(1)) = Σ h(b a_(2)) a_(1)
      CVector lhs2 = CVector::Zero(n), rhs2 = CVector::Zero(n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const cplx mk = A.mu(k, p, q), mj = A.mu(j, p, q);
          if (mk != cplx(0.0)) {
            lhs += mk * hp(j, p) * S.col(q);
            lhs2 += mk * hp(q, j) * S.col(p);
          }
          if (mj != cplx(0.0)) {
            rhs(q) += mj * hp(p, k);
            rhs2(p) += mj * hp(k, q);
          }
        }
      antipode_right = std::max(antipode_right, linalg::max_abs(CVector(lhs - rhs)));
      antipode_left = std::max(antipode_left, linalg::max_abs(CVector(lhs2 - rhs2)));
    }
    cplx r = 0, l = 0;
    const CVector hS = S.transpose() * hv;  // hS(p) = h(S(a_p))
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        r += A.mu(j, p, q) * hv(p) * hv(q);
        l += A.mu(j, p, q) * hv(q) * hS(p);
      }
    fact_r = std::max(fact_r, std::abs(r - hv(j)));
    fact_l = std::max(fact_l, std::abs(l - hv(j)));
  }
  Report rep;
  rep.title = "Haar lemmas";
  rep.add("antipode transfer, right", antipode_right, etol);
  rep.add("antipode transfer, left", antipode_left, etol);
  rep.add("factorization through right coaction", fact_r, etol);
  rep.add("factorization through left coaction", fact_l, etol);
  return rep;
}

GramPair gram_matrices(const HopfAlgebra& A, const HaarFunctional& h) {
  const int n = A.dim();
  GramPair g;
  g.gramR = CMatrix::Zero(n, n);
  g.gramL = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const Element ej = A.basis(j);
    const Element sj = A.star(ej);
    const Element s2j = A.star(A.apply(UnaryMap::SSquared, ej));
    for (int k = 0; k < n; ++k) {
      const Element ek = A.basis(k);
      g.gramR(j, k) = h.of_product(sj, ek);
      g.gramL(j, k) = h.of_product(ek, s2j);
    }
  }
  g.certificates.title = "Gram certificates";
  for (Side s : {Side::R, Side::L}) {
    const auto pd = linalg::certify_pd(g[s]);
    const std::string tag = std::string(" ") + to_string(s);
    g.certificates.add("hermitian" + tag, pd.hermiticity_residual, 1e-12 * std::max(1.0, pd.max_eigenvalue));
    g.certificates.add_flag("positive definite" + tag, pd.positive_definite);
    if (!pd.positive_definite)
      throw Error(ErrorKind::PositivityFailure,
                  std::string("Gram matrix ") + to_string(s) + " is not positive definite");
  }
  return g;
}

cplx inner_product(const CMatrix& gram, const Element& x, const Element& y) {
  return (x.coeffs.adjoint() * gram * y.coeffs)(0);
}

}  // namespace cqg
