#include "cqg/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cqg/linalg.hpp"

namespace cqg {

namespace {

struct RuleParts {
  bool inverse;   // second leg uses S^{-1}
  bool swapped;   // second legs multiplied in reverse order
};

RuleParts rule_parts(OperatorKind kind, CoactionRule rule) {
  switch (rule) {
    case CoactionRule::SwapOnly:
      return {false, true};
    case CoactionRule::InverseOnly:
      return {true, false};
    case CoactionRule::Standard:
      break;
  }
  const bool t = kind == OperatorKind::Twisted;
  return {t, t};
}

const CMatrix& second_leg_map(const HopfAlgebra& A, const RuleParts& parts) {
  return parts.inverse ? A.antipode_inverse_matrix() : A.antipode_matrix();
}

bool is_full(const HopfAlgebra& A, const RegularCarrier& c) {
  return c.dim() == A.dim() &&
         linalg::max_abs(CMatrix(c.embed - CMatrix::Identity(A.dim(), A.dim()))) == 0.0;
}

double diff(const CMatrix& a, const CMatrix& b) { return linalg::max_abs(CMatrix(a - b)); }

OperatorCoaction expected_coaction(const std::vector<CMatrix>& ops, const Corepresentation& pi,
                                   int j) {
  OperatorCoaction out;
  const int n = pi.algebra_dim();
  out.terms.assign(n, CMatrix::Zero(ops[0].rows(), ops[0].cols()));
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < pi.d; ++k)
      if (pi.layers[m](k, j) != cplx(0.0)) out.terms[m] += pi.layers[m](k, j) * ops[k];
  return out;
}

void require_family_shape(const std::vector<CMatrix>& ops, const Corepresentation& pi, int b) {
  if (static_cast<int>(ops.size()) != pi.d)
    throw Error(ErrorKind::DimensionMismatch, "family size differs from corep dimension");
  for (const CMatrix& Q : ops)
    if (Q.rows() != b || Q.cols() != b)
      throw Error(ErrorKind::DimensionMismatch, "operator does not act on the carrier");
}

}  // namespace

std::string variant_name(OperatorKind kind, Side side) {
  return std::string(to_string(kind)) + "-" + to_string(side);
}

OperatorCoactionMap::OperatorCoactionMap(const HopfAlgebra& A, const RegularCarrier& carrier,
                                         OperatorKind kind, CoactionRule rule)
    : n_(A.dim()), b_(carrier.dim()), kind_(kind), side_(carrier.side) {
  const RuleParts parts = rule_parts(kind, rule);
  const CMatrix& Smap = second_leg_map(A, parts);
  K_.resize(b_);
  for (int p = 0; p < b_; ++p) K_[p] = carrier_coaction(A, carrier, CVector::Unit(b_, p));
  G_.resize(static_cast<std::size_t>(b_) * n_);
  for (int w = 0; w < n_; ++w) {
    const Element sw{Smap.col(w)};
    // Product of a_v with the antipode image of a_w, as a matrix acting on a_v.
    const CMatrix Mw = parts.swapped ? A.left_mult_matrix(sw) : A.right_mult_matrix(sw);
    for (int p = 0; p < b_; ++p) G_[p * n_ + w] = K_[p] * Mw.transpose();
  }
  const int bb = b_ * b_;
  W_ = CMatrix::Zero(static_cast<Eigen::Index>(n_) * bb, bb);
  for (int y = 0; y < b_; ++y)
    for (int x = 0; x < b_; ++x) {
      CMatrix E = CMatrix::Zero(b_, b_);
      E(x, y) = 1.0;
      const OperatorCoaction c = apply(E);
      for (int m = 0; m < n_; ++m)
        W_.block(static_cast<Eigen::Index>(m) * bb, x + y * b_, bb, 1) =
            Eigen::Map<const CVector>(c.terms[m].data(), bb);
    }
}

OperatorCoaction OperatorCoactionMap::apply(const CMatrix& Q) const {
  OperatorCoaction out;
  out.terms.assign(n_, CMatrix::Zero(b_, b_));
  for (int k = 0; k < b_; ++k) {
    const CMatrix QK = Q * K_[k];
    CMatrix res = CMatrix::Zero(b_, n_);
    for (int p = 0; p < b_; ++p)
      for (int w = 0; w < n_; ++w)
        if (QK(p, w) != cplx(0.0)) res += QK(p, w) * G_[p * n_ + w];
    for (int m = 0; m < n_; ++m) out.terms[m].col(k) = res.col(m);
  }
  return out;
}

OperatorCoaction coaction_on_operator(const HopfAlgebra& A, const RegularCarrier& carrier,
                                      const CMatrix& Q, OperatorKind kind, CoactionRule rule) {
  const int n = A.dim(), b = carrier.dim();
  const RuleParts parts = rule_parts(kind, rule);
  const CMatrix& Smap = second_leg_map(A, parts);
  std::vector<CMatrix> T(n);
  for (int i = 0; i < n; ++i) T[i] = regular_coaction(A, carrier.side, A.basis(i)).coeffs;
  const CMatrix Qa = carrier.embed * Q * carrier.project;
  OperatorCoaction out;
  out.terms.assign(n, CMatrix::Zero(b, b));
  for (int k = 0; k < b; ++k) {
    const CMatrix t = regular_coaction(A, carrier.side, Element{carrier.embed.col(k)}).coeffs;
    // Q on the first leg, the antipode (or its inverse) on the second.
    const CMatrix c2 = Qa * t * Smap.transpose();
    CMatrix res = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int w = 0; w < n; ++w) {
        if (c2(i, w) == cplx(0.0)) continue;
        for (int u = 0; u < n; ++u) {
          const Element prod = parts.swapped ? A.multiply(A.basis(w), A.basis(u))
                                             : A.multiply(A.basis(u), A.basis(w));
          res += c2(i, w) * T[i].col(u) * prod.coeffs.transpose();
        }
      }
    const CMatrix proj = carrier.project * res;
    for (int m = 0; m < n; ++m) out.terms[m].col(k) = proj.col(m);
  }
  return out;
}

OperatorCoaction coaction_on_operator_structure_constants(const HopfAlgebra& A, const CMatrix& Q,
                                                          OperatorKind kind, Side side) {
  const int n = A.dim();
  if (Q.rows() != n || Q.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "structure-constant route needs an operator on A");
  const bool twisted = kind == OperatorKind::Twisted;
  // sinv(w,v): S^{-1}(a_w) = Σ_v sinv(w,v) a_v.
  const CMatrix sinv = twisted ? CMatrix(A.antipode_inverse_matrix().transpose()) : CMatrix();
  auto at4 = [n](int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; };
  auto at3 = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  // B1(i,k,x) = Σ_ℓ Q(i,ℓ) μ(k,ℓ,x) for R, Σ_ℓ Q(i,ℓ) μ(k,x,ℓ) for L.
  std::vector<cplx> B1(n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x) {
        cplx acc = 0;
        for (int l = 0; l < n; ++l)
          acc += Q(i, l) * (side == Side::R ? A.mu(k, l, x) : A.mu(k, x, l));
        B1[at3(i, k, x)] = acc;
      }
  OperatorCoaction out;
  out.terms.assign(n, CMatrix::Zero(n, n));
  if (side == Side::R) {
    // B2(i,k,v) = Σ_w B1(i,k,w) s(w,v) or sinv(w,v).
    std::vector<cplx> B2(n * n * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int v = 0; v < n; ++v) {
          cplx acc = 0;
          for (int w = 0; w < n; ++w) acc += B1[at3(i, k, w)] * (twisted ? sinv(w, v) : A.s(w, v));
          B2[at3(i, k, v)] = acc;
        }
    // B3(j,k,u,v) = Σ_i μ(i,j,u) B2(i,k,v).
    std::vector<cplx> B3(n * n * n * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int u = 0; u < n; ++u) {
          const cplx c = A.mu(i, j, u);
          if (c == cplx(0.0)) continue;
          for (int k = 0; k < n; ++k)
            for (int v = 0; v < n; ++v) B3[at4(j, k, u, v)] += c * B2[at3(i, k, v)];
        }
    for (int m = 0; m < n; ++m)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const cplx c = twisted ? A.m(v, u, m) : A.m(u, v, m);
          if (c == cplx(0.0)) continue;
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.terms[m](j, k) += c * B3[at4(j, k, u, v)];
        }
    return out;
  }
  // Side L. B3(j,k,u,x) = Σ_i μ(i,u,j) B1(i,k,x).
  std::vector<cplx> B3(n * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int u = 0; u < n; ++u)
      for (int j = 0; j < n; ++j) {
        const cplx c = A.mu(i, u, j);
        if (c == cplx(0.0)) continue;
        for (int k = 0; k < n; ++k)
          for (int x = 0; x < n; ++x) B3[at4(j, k, u, x)] += c * B1[at3(i, k, x)];
      }
  if (!twisted) {
    // Σ m(w,u,v) s(v,m) s(x,w) B3(j,k,u,x).
    std::vector<cplx> B4(n * n * n, 0.0);  // (j,k,v)
    for (int x = 0; x < n; ++x)
      for (int w = 0; w < n; ++w) {
        const cplx sxw = A.s(x, w);
        if (sxw == cplx(0.0)) continue;
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            const cplx c = sxw * A.m(w, u, v);
            if (c == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k) B4[at3(j, k, v)] += c * B3[at4(j, k, u, x)];
          }
      }
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        const cplx c = A.s(v, m);
        if (c == cplx(0.0)) continue;
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) out.terms[m](j, k) += c * B4[at3(j, k, v)];
      }
    return out;
  }
  // Twisted: Σ m(x,v,m) s(u,v) B3(j,k,u,x).
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const cplx suv = A.s(u, v);
      if (suv == cplx(0.0)) continue;
      for (int x = 0; x < n; ++x)
        for (int m = 0; m < n; ++m) {
          const cplx c = suv * A.m(x, v, m);
          if (c == cplx(0.0)) continue;
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.terms[m](j, k) += c * B3[at4(j, k, u, x)];
        }
    }
  return out;
}

double coaction_difference(const OperatorCoaction& a, const OperatorCoaction& b) {
  if (a.terms.size() != b.terms.size())
    throw Error(ErrorKind::DimensionMismatch, "coactions have different lengths");
  double r = 0;
  for (std::size_t m = 0; m < a.terms.size(); ++m) r = std::max(r, diff(a.terms[m], b.terms[m]));
  return r;
}

double defining_condition_residual(const HopfAlgebra& A, const RegularCarrier& carrier,
                                   const std::vector<CMatrix>& ops, const Corepresentation& pi,
                                   OperatorKind kind, CoactionRule rule) {
  require_family_shape(ops, pi, carrier.dim());
  double r = 0;
  for (int j = 0; j < pi.d; ++j)
    r = std::max(r, coaction_difference(coaction_on_operator(A, carrier, ops[j], kind, rule),
                                        expected_coaction(ops, pi, j)));
  return r;
}

Report check_family(const HopfAlgebra& A, const RegularCarrier& carrier,
                    const TensorOperatorFamily& fam, const Corepresentation& pi, double tol) {
  if (fam.side != carrier.side)
    throw Error(ErrorKind::DimensionMismatch, "family side differs from carrier side");
  require_family_shape(fam.ops, pi, carrier.dim());
  const double etol = effective_tolerance(A, tol);
  Report rep;
  rep.title = "tensor operator family " + variant_name(fam.kind, fam.side) + " for " + pi.label;
  rep.add("defining condition", defining_condition_residual(A, carrier, fam.ops, pi, fam.kind),
          etol);
  const OperatorCoactionMap map(A, carrier, fam.kind);
  double lin = 0, sc = 0;
  const bool full = is_full(A, carrier);
  for (int j = 0; j < pi.d; ++j) {
    const OperatorCoaction expected = expected_coaction(fam.ops, pi, j);
    lin = std::max(lin, coaction_difference(map.apply(fam.ops[j]), expected));
    if (full)
      sc = std::max(sc, coaction_difference(coaction_on_operator_structure_constants(
                                                A, fam.ops[j], fam.kind, fam.side),
                                            expected));
  }
  rep.add("coaction form, linearised map", lin, etol);
  if (full) rep.add("coaction form, structure constants", sc, etol);
  rep.notes["operator space"] = "all linear operators on the carrier";
  return rep;
}

TensorOperatorFamily identity_family(const RegularCarrier& carrier, const std::string& label) {
  TensorOperatorFamily fam;
  fam.side = carrier.side;
  fam.corep_label = label;
  fam.ops.push_back(CMatrix::Identity(carrier.dim(), carrier.dim()));
  return fam;
}

TensorOperatorFamily multiplication_family(const HopfAlgebra& A, const RegularCarrier& carrier,
                                           const BasisFunctionSet& psi, const Corepresentation& pi,
                                           OperatorKind kind) {
  if (psi.side != carrier.side)
    throw Error(ErrorKind::DimensionMismatch, "basis-function set side differs from carrier side");
  // Left multiplication for ordinary-R and twisted-L, right multiplication otherwise.
  const bool left = (kind == OperatorKind::Ordinary) == (carrier.side == Side::R);
  TensorOperatorFamily fam;
  fam.kind = kind;
  fam.side = carrier.side;
  fam.corep_label = pi.label;
  for (const Element& f : psi.functions) fam.ops.push_back(carrier_multiplication(A, carrier, f, left));
  fam.residual = defining_condition_residual(A, carrier, fam.ops, pi, kind);
  return fam;
}

std::vector<TensorOperatorFamily> solve_family_space(const HopfAlgebra& A,
                                                     const RegularCarrier& carrier,
                                                     const Corepresentation& pi,
                                                     OperatorKind kind) {
  const OperatorCoactionMap map(A, carrier, kind);
  const int n = A.dim(), b = carrier.dim(), d = pi.d, bb = b * b;
  CMatrix sys = CMatrix::Zero(static_cast<Eigen::Index>(d) * n * bb, static_cast<Eigen::Index>(d) * bb);
  const CMatrix I = CMatrix::Identity(bb, bb);
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < n; ++m) {
      const Eigen::Index row = (static_cast<Eigen::Index>(j) * n + m) * bb;
      sys.block(row, static_cast<Eigen::Index>(j) * bb, bb, bb) +=
          map.matrix().middleRows(static_cast<Eigen::Index>(m) * bb, bb);
      for (int k = 0; k < d; ++k)
        if (pi.layers[m](k, j) != cplx(0.0))
          sys.block(row, static_cast<Eigen::Index>(k) * bb, bb, bb) -= pi.layers[m](k, j) * I;
    }
  CMatrix N = linalg::nullspace(sys);
  linalg::fix_column_phases(N);
  std::vector<TensorOperatorFamily> out;
  for (Eigen::Index c = 0; c < N.cols(); ++c) {
    TensorOperatorFamily fam;
    fam.kind = kind;
    fam.side = carrier.side;
    fam.corep_label = pi.label;
    for (int k = 0; k < d; ++k)
      fam.ops.push_back(Eigen::Map<const CMatrix>(N.col(c).data() + static_cast<Eigen::Index>(k) * bb, b, b));
    fam.residual = defining_condition_residual(A, carrier, fam.ops, pi, kind);
    out.push_back(std::move(fam));
  }
  return out;
}

double family_span_residual(const std::vector<TensorOperatorFamily>& space,
                            const TensorOperatorFamily& fam) {
  auto flatten = [](const TensorOperatorFamily& f) {
    Eigen::Index len = 0;
    for (const CMatrix& Q : f.ops) len += Q.size();
    CVector v(len);
    Eigen::Index at = 0;
    for (const CMatrix& Q : f.ops) {
      v.segment(at, Q.size()) = Eigen::Map<const CVector>(Q.data(), Q.size());
      at += Q.size();
    }
    return v;
  };
  const CVector target = flatten(fam);
  if (space.empty()) return target.norm();
  CMatrix S(target.size(), static_cast<Eigen::Index>(space.size()));
  for (std::size_t c = 0; c < space.size(); ++c) {
    const CVector v = flatten(space[c]);
    if (v.size() != target.size())
      throw Error(ErrorKind::DimensionMismatch, "family shapes differ");
    S.col(static_cast<Eigen::Index>(c)) = v;
  }
  const CVector coef = S.colPivHouseholderQr().solve(target);
  return (S * coef - target).norm();
}

Report apply_family_to_basis_functions(const HopfAlgebra& A, const RegularCarrier& carrier,
                                       const TensorOperatorFamily& fam, const Corepresentation& q,
                                       const BasisFunctionSet& phi, const Corepresentation& p,
                                       double tol) {
  if (fam.size() != q.d || phi.size() != p.d)
    throw Error(ErrorKind::DimensionMismatch, "family or basis set does not match its corep");
  if (fam.side != carrier.side || phi.side != carrier.side)
    throw Error(ErrorKind::DimensionMismatch, "family, basis set and carrier use different sides");
  const double etol = effective_tolerance(A, tol);
  const int dq = q.d, dp = p.d;
  double membership = 0;
  for (const Element& f : phi.functions)
    membership = std::max(
        membership, linalg::max_abs(CVector(carrier.embed * (carrier.project * f.coeffs) - f.coeffs)));
  std::vector<std::vector<CVector>> img(dq, std::vector<CVector>(dp));
  for (int t = 0; t < dq; ++t)
    for (int s = 0; s < dp; ++s)
      img[t][s] = carrier.embed * (fam.ops[t] * (carrier.project * phi.functions[s].coeffs));
  double r = 0;
  for (int k = 0; k < dq; ++k)
    for (int j = 0; j < dp; ++j) {
      const CMatrix lhs = regular_coaction(A, carrier.side, Element{img[k][j]}).coeffs;
      CMatrix rhs = CMatrix::Zero(A.dim(), A.dim());
      for (int t = 0; t < dq; ++t)
        for (int s = 0; s < dp; ++s) {
          const Element a = q.entry(t, k), c = p.entry(s, j);
          const Element coef = fam.kind == OperatorKind::Ordinary ? A.multiply(a, c) : A.multiply(c, a);
          rhs += img[t][s] * coef.coeffs.transpose();
        }
      r = std::max(r, diff(lhs, rhs));
    }
  Report rep;
  rep.title = "family on basis functions, " + variant_name(fam.kind, fam.side);
  rep.add("basis functions lie in the carrier", membership, etol);
  rep.add("coaction of operator images", r, etol);
  return rep;
}

std::vector<CoupledFamily> couple_families(const TensorOperatorFamily& famP,
                                           const TensorOperatorFamily& famQ, const CGSystem& cg,
                                           const IrrepTable& table) {
  if (famP.kind != famQ.kind || famP.side != famQ.side)
    throw Error(ErrorKind::DimensionMismatch, "families must share kind and side");
  const bool ordinary = famP.kind == OperatorKind::Ordinary;
  const int dp = famP.size(), dq = famQ.size();
  if ((ordinary && (cg.dp != dp || cg.dq != dq)) || (!ordinary && (cg.dp != dq || cg.dq != dp)))
    throw Error(ErrorKind::DimensionMismatch, "CG system order does not match the families");
  std::vector<CMatrix> X(static_cast<std::size_t>(dp) * dq);
  for (int j = 0; j < dp; ++j)
    for (int k = 0; k < dq; ++k) X[ordinary ? cg.row(j, k) : cg.row(k, j)] = famP.ops[j] * famQ.ops[k];
  std::vector<CoupledFamily> out;
  for (int r = 0; r < static_cast<int>(cg.multiplicity.size()); ++r)
    for (int a = 0; a < cg.multiplicity[r]; ++a) {
      CoupledFamily cf;
      cf.r = r;
      cf.alpha = a;
      cf.family.kind = famP.kind;
      cf.family.side = famP.side;
      cf.family.corep_label = table[r].label;
      for (int l = 0; l < cg.irrep_dim[r]; ++l) {
        CMatrix Y = CMatrix::Zero(X[0].rows(), X[0].cols());
        for (std::size_t row = 0; row < X.size(); ++row) {
          const cplx c = cg.C(static_cast<Eigen::Index>(row), cg.column(r, a, l));
          if (c != cplx(0.0)) Y += c * X[row];
        }
        cf.family.ops.push_back(std::move(Y));
      }
      out.push_back(std::move(cf));
    }
  return out;
}

Report operator_coaction_properties(const HopfAlgebra& A, const RegularCarrier& carrier,
                                    std::uint64_t seed, int samples, double tol) {
  const int n = A.dim(), b = carrier.dim();
  const double etol = effective_tolerance(A, tol);
  std::mt19937_64 rng(seed);
  Report rep;
  rep.title = std::string("operator coactions on carrier ") + to_string(carrier.side);
  for (OperatorKind kind : {OperatorKind::Ordinary, OperatorKind::Twisted}) {
    const OperatorCoactionMap map(A, carrier, kind);
    const std::string tag = variant_name(kind, carrier.side) + ": ";
    double own = 0, other = 0, coassoc = 0, counit = 0, routes = 0;
    for (int sample = 0; sample < samples; ++sample) {
      const CMatrix Q = linalg::random_complex(b, b, rng);
      const CMatrix Q2 = linalg::random_complex(b, b, rng);
      const OperatorCoaction c1 = map.apply(Q), c2 = map.apply(Q2), c12 = map.apply(Q * Q2);
      routes = std::max(routes, coaction_difference(c1, coaction_on_operator(A, carrier, Q, kind)));
      // Product rule: own multiplies second legs in the kind's order, other in the opposite one.
      OperatorCoaction same, reversed;
      same.terms.assign(n, CMatrix::Zero(b, b));
      reversed.terms = same.terms;
      for (int m = 0; m < n; ++m)
        for (int m2 = 0; m2 < n; ++m2) {
          const CMatrix P = c1.terms[m] * c2.terms[m2];
          for (int l = 0; l < n; ++l) {
            if (A.m(m, m2, l) != cplx(0.0)) same.terms[l] += A.m(m, m2, l) * P;
            if (A.m(m2, m, l) != cplx(0.0)) reversed.terms[l] += A.m(m2, m, l) * P;
          }
        }
      const bool ord = kind == OperatorKind::Ordinary;
      own = std::max(own, coaction_difference(c12, ord ? same : reversed));
      other = std::max(other, coaction_difference(c12, ord ? reversed : same));
      // (Q^{(m2)})^{(m1)} = Σ_m μ(m,m1,m2) Q^{(m)}.
      for (int m2 = 0; m2 < n; ++m2) {
        const OperatorCoaction inner = map.apply(c1.terms[m2]);
        for (int m1 = 0; m1 < n; ++m1) {
          CMatrix rhs = CMatrix::Zero(b, b);
          for (int m = 0; m < n; ++m)
            if (A.mu(m, m1, m2) != cplx(0.0)) rhs += A.mu(m, m1, m2) * c1.terms[m];
          coassoc = std::max(coassoc, diff(inner.terms[m1], rhs));
        }
      }
      CMatrix back = CMatrix::Zero(b, b);
      for (int m = 0; m < n; ++m) back += A.data().counit(m) * c1.terms[m];
      counit = std::max(counit, diff(back, Q));
    }
    OperatorCoaction id_expected;
    id_expected.terms.assign(n, CMatrix::Zero(b, b));
    for (int m = 0; m < n; ++m) id_expected.terms[m] = A.data().unit(m) * CMatrix::Identity(b, b);
    rep.add(tag + "composite and linearised map agree", routes, etol);
    rep.add(tag + "product rule", own, etol);
    rep.add(tag + "coaction coassociative", coassoc, etol);
    rep.add(tag + "coaction counital", counit, etol);
    rep.add(tag + "identity maps to identity tensor unit",
            coaction_difference(map.apply(CMatrix::Identity(b, b)), id_expected), etol);
    rep.notes[tag + "product rule with the opposite order, residual"] = std::to_string(other);
  }
  return rep;
}

Report excluded_rule_diagnostics(const HopfAlgebra& A, Side side) {
  const RegularCarrier full = RegularCarrier::full(A, side);
  const int n = A.dim();
  OperatorCoaction id_expected;
  id_expected.terms.assign(n, CMatrix::Zero(n, n));
  for (int m = 0; m < n; ++m) id_expected.terms[m] = A.data().unit(m) * CMatrix::Identity(n, n);
  Report rep;
  rep.title = std::string("excluded coaction rules, side ") + to_string(side);
  const CMatrix I = CMatrix::Identity(n, n);
  rep.notes["identity residual, M with sigma and S"] = std::to_string(coaction_difference(
      coaction_on_operator(A, full, I, OperatorKind::Ordinary, CoactionRule::SwapOnly), id_expected));
  rep.notes["identity residual, M and S inverse"] = std::to_string(coaction_difference(
      coaction_on_operator(A, full, I, OperatorKind::Ordinary, CoactionRule::InverseOnly),
      id_expected));
  return rep;
}

}  // namespace cqg
