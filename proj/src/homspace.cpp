#include "cqg/homspace.hpp"

#include <algorithm>
#include <set>

#include "cqg/linalg.hpp"

namespace cqg {

namespace {

// Orthogonal projector onto the span of the rows of M, acting on column vectors.
CMatrix row_span_projector(const CMatrix& M) {
  Eigen::JacobiSVD<CMatrix> svd(M.transpose(), Eigen::ComputeThinU);
  const Eigen::Index r = linalg::rank(M.transpose());
  const CMatrix U = svd.matrixU().leftCols(r);
  return U * U.adjoint();
}

CMatrix left_inverse(const CMatrix& E) {
  return (E.adjoint() * E).ldlt().solve(E.adjoint());
}

}  // namespace

const char* to_string(CoidealSide s) { return s == CoidealSide::Right ? "right" : "left"; }

CVector CoidealSubalgebra::coordinates(const Element& x) const {
  return embed().colPivHouseholderQr().solve(x.coeffs);
}

Element CoidealSubalgebra::element(const CVector& coords) const { return {embed() * coords}; }

Report verify_coideal(const HopfAlgebra& A, const CMatrix& basis_matrix, CoidealSide side,
                      double tol) {
  const int n = A.dim();
  if (basis_matrix.cols() != n || basis_matrix.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch, "basis matrix must be b×n with b > 0");
  const double etol = effective_tolerance(A, tol);
  const CMatrix P = row_span_projector(basis_matrix);
  const CMatrix Comp = CMatrix::Identity(n, n) - P;
  auto outside = [&](const CVector& v) { return linalg::max_abs(CVector(Comp * v)); };
  const int b = static_cast<int>(basis_matrix.rows());
  std::vector<Element> rows;
  for (int i = 0; i < b; ++i) rows.push_back({basis_matrix.row(i).transpose()});
  double mult = 0, star = 0, coideal = 0, s2 = 0;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) mult = std::max(mult, outside(A.multiply(rows[i], rows[j]).coeffs));
    star = std::max(star, outside(A.star(rows[i]).coeffs));
    const CMatrix c = A.coproduct(rows[i]).coeffs;
    const CMatrix off = side == CoidealSide::Right ? CMatrix(Comp * c) : CMatrix(Comp * c.transpose());
    coideal = std::max(coideal, linalg::max_abs(off));
    s2 = std::max(s2, outside(A.antipode_squared_matrix() * rows[i].coeffs));
  }
  Report rep;
  rep.title = std::string("coideal subalgebra, ") + to_string(side);
  rep.add("closed under multiplication", mult, etol);
  rep.add("closed under star", star, etol);
  rep.add("contains the unit", outside(A.one().coeffs), etol);
  rep.add(std::string(to_string(side)) + " coideal condition", coideal, etol);
  if (side == CoidealSide::Left) {
    rep.add("S squared invariance", s2, etol);
  } else {
    rep.notes["S squared invariance, residual"] = std::to_string(s2);
    if (s2 > etol) rep.notes["warning"] = "right coideal is not S squared invariant";
  }
  return rep;
}

CoidealSubalgebra make_coideal_subalgebra(const HopfAlgebra& A, const CMatrix& basis_matrix,
                                          CoidealSide side, double tol) {
  CoidealSubalgebra B;
  B.parent_label = A.label();
  B.side = side;
  B.basis_matrix = basis_matrix;
  B.verification = verify_coideal(A, basis_matrix, side, tol);
  const Eigen::Index r = linalg::rank(basis_matrix);
  if (r == basis_matrix.rows()) {
    B.basis = basis_matrix;
  } else {
    Eigen::JacobiSVD<CMatrix> svd(basis_matrix, Eigen::ComputeFullV);
    CMatrix rows = svd.matrixV().leftCols(r).adjoint();
    for (Eigen::Index i = 0; i < r; ++i) {
      CVector v = rows.row(i).transpose();
      linalg::fix_phase(v);
      rows.row(i) = v.transpose();
    }
    B.basis = rows;
    B.verification.notes["internal basis"] = "orthonormal basis of the dependent rows";
  }
  auto ok = [&](const std::string& name) {
    const Check* c = B.verification.find(name);
    return c != nullptr && c->pass;
  };
  B.subalgebra = ok("closed under multiplication");
  B.star_closed = ok("closed under star");
  B.contains_unit = ok("contains the unit");
  B.coideal = ok(std::string(to_string(side)) + " coideal condition");
  if (side == CoidealSide::Left) {
    B.s2_invariant = ok("S squared invariance");
  } else {
    B.s2_invariant = B.verification.notes.count("warning") == 0;
  }
  return B;
}

CoidealSubalgebra build_coset_subalgebra(const HopfAlgebra& function_algebra, const GroupTable& G,
                                         const std::vector<int>& H, CoidealSide side) {
  const int g = G.order;
  if (function_algebra.dim() != g)
    throw Error(ErrorKind::DimensionMismatch, "function algebra does not match the group");
  std::set<int> members;
  for (int x : H) {
    if (x < 0 || x >= g) throw Error(ErrorKind::NotASubgroup, "element index out of range");
    members.insert(x);
  }
  if (!members.count(0)) throw Error(ErrorKind::NotASubgroup, "subset does not contain the identity");
  for (int x : members)
    for (int y : members)
      if (!members.count(G.mul(x, y)))
        throw Error(ErrorKind::NotASubgroup, "subset is not closed under multiplication");
  std::vector<int> coset_of(g, -1);
  int count = 0;
  for (int x = 0; x < g; ++x) {
    if (coset_of[x] >= 0) continue;
    for (int h : members) coset_of[side == CoidealSide::Left ? G.mul(x, h) : G.mul(h, x)] = count;
    ++count;
  }
  CMatrix M = CMatrix::Zero(count, g);
  for (int x = 0; x < g; ++x) M(coset_of[x], x) = 1.0;
  CoidealSubalgebra B = make_coideal_subalgebra(function_algebra, M, side);
  if (!B.verification.passed())
    throw Error(ErrorKind::CoidealMismatch, "coset functions failed verification");
  return B;
}

RegularCarrier coideal_carrier(const CoidealSubalgebra& B, Side side) {
  const CoidealSide needed = side == Side::R ? CoidealSide::Right : CoidealSide::Left;
  if (B.side != needed)
    throw Error(ErrorKind::CoidealMismatch, std::string("side ") + to_string(side) + " needs a " +
                                                to_string(needed) + " coideal");
  if (!B.coideal || !B.subalgebra || !B.contains_unit)
    throw Error(ErrorKind::CoidealMismatch, "subspace is not a verified coideal subalgebra");
  if (side == Side::L && !B.s2_invariant)
    throw Error(ErrorKind::CoidealMismatch, "left coideal is not S squared invariant");
  RegularCarrier c;
  c.side = side;
  c.embed = B.embed();
  c.project = left_inverse(c.embed);
  return c;
}

CMatrix restricted_coaction(const HopfAlgebra& A, const CoidealSubalgebra& B, Side side,
                            const CVector& coords) {
  return carrier_coaction(A, coideal_carrier(B, side), coords);
}

Report restricted_coaction_axioms(const HopfAlgebra& A, const HaarFunctional& h,
                                  const CoidealSubalgebra& B, Side side, double tol) {
  const RegularCarrier c = coideal_carrier(B, side);
  const int n = A.dim(), b = c.dim();
  const double etol = effective_tolerance(A, tol);
  std::vector<CMatrix> K(b);
  for (int i = 0; i < b; ++i) K[i] = carrier_coaction(A, c, CVector::Unit(b, i));
  const CVector one = c.project * A.one().coeffs;
  CVector hB(b);
  for (int i = 0; i < b; ++i) hB(i) = h.h(Element{c.embed.col(i)});
  double coassoc = 0, counit = 0, inv1 = 0, inv2 = 0, leg = 0;
  for (int i = 0; i < b; ++i) {
    leg = std::max(leg, linalg::max_abs(CMatrix(c.embed * K[i] -
                                                 regular_coaction(A, side, Element{c.embed.col(i)}).coeffs)));
    for (int t = 0; t < n; ++t) {
      CMatrix lhs = CMatrix::Zero(b, n), rhs = CMatrix::Zero(b, n);
      for (int p = 0; p < b; ++p) lhs += K[i](p, t) * K[p];
      for (int m = 0; m < n; ++m)
        for (int q = 0; q < n; ++q) rhs.col(q) += K[i].col(m) * A.mu(m, q, t);
      coassoc = std::max(coassoc, linalg::max_abs(CMatrix(lhs - rhs)));
    }
    counit = std::max(counit, linalg::max_abs(CVector(K[i] * A.data().counit - CVector::Unit(b, i))));
    inv1 = std::max(inv1, linalg::max_abs(CVector(K[i] * h.h.covector - hB(i) * one)));
    inv2 = std::max(inv2, linalg::max_abs(CVector(K[i].transpose() * hB - hB(i) * A.one().coeffs)));
  }
  Report rep;
  rep.title = std::string("restricted coaction ") + to_string(side);
  rep.add("first leg stays in the subalgebra", leg, etol);
  rep.add("coaction coassociative", coassoc, etol);
  rep.add("coaction counital", counit, etol);
  rep.add("Haar invariance, second leg", inv1, etol);
  rep.add("Haar invariance, first leg", inv2, etol);
  return rep;
}

CMatrix restricted_gram(const CoidealSubalgebra& B, Side side, const GramPair& gram) {
  if (side == Side::L && !B.s2_invariant)
    throw Error(ErrorKind::CoidealMismatch, "left inner product needs S squared invariance");
  const CMatrix E = B.embed();
  CMatrix G = E.adjoint() * gram[side] * E;
  const linalg::PdCertificate cert = linalg::certify_pd(G);
  if (!cert.positive_definite)
    throw Error(ErrorKind::PositivityFailure,
                "restricted Gram matrix has minimum eigenvalue " + std::to_string(cert.min_eigenvalue));
  return G;
}

RestrictedBasisFunctions solve_restricted_basis_functions(const HopfAlgebra& A,
                                                          const CoidealSubalgebra& B, Side side,
                                                          const Corepresentation& pi, double tol) {
  const RegularCarrier c = coideal_carrier(B, side);
  RestrictedBasisFunctions out;
  out.solutions = solve_basis_functions(A, c, pi);
  const double etol = effective_tolerance(A, tol);
  for (int row = 0; row < pi.d; ++row) {
    BasisFunctionSet set;
    try {
      set = canonical_basis_functions(A, pi, side, row);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotUnitary) throw;
      continue;
    }
    double outside = 0;
    for (const Element& f : set.functions)
      outside = std::max(outside, linalg::max_abs(CVector(c.embed * (c.project * f.coeffs) - f.coeffs)));
    if (outside <= etol) out.canonical.push_back(std::move(set));
  }
  return out;
}

}  // namespace cqg
