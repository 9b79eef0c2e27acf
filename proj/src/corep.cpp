#include "cqg/corep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "cqg/linalg.hpp"

namespace cqg {

Element Corepresentation::entry(int j, int k) const {
  CVector c(algebra_dim());
  for (int l = 0; l < algebra_dim(); ++l) c(l) = layers[l](j, k);
  return {c};
}

CMatrix Corepresentation::evaluate(const CVector& f) const {
  CMatrix out = CMatrix::Zero(d, d);
  for (int l = 0; l < algebra_dim(); ++l) out += f(l) * layers[l];
  return out;
}

Corepresentation Corepresentation::from_entries(const std::vector<std::vector<Element>>& e,
                                                std::string label) {
  Corepresentation pi;
  pi.label = std::move(label);
  pi.d = static_cast<int>(e.size());
  if (pi.d == 0) throw Error(ErrorKind::DimensionMismatch, "empty corepresentation");
  const int n = static_cast<int>(e[0][0].size());
  pi.layers.assign(n, CMatrix::Zero(pi.d, pi.d));
  for (int j = 0; j < pi.d; ++j) {
    if (static_cast<int>(e[j].size()) != pi.d)
      throw Error(ErrorKind::DimensionMismatch, "corepresentation matrix is not square");
    for (int k = 0; k < pi.d; ++k)
      for (int l = 0; l < n; ++l) pi.layers[l](j, k) = e[j][k].coeffs(l);
  }
  return pi;
}

namespace {

std::vector<std::vector<Element>> entries(const Corepresentation& pi) {
  std::vector<std::vector<Element>> e(pi.d, std::vector<Element>(pi.d));
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k) e[j][k] = pi.entry(j, k);
  return e;
}

double diff(const CVector& a, const CVector& b) { return linalg::max_abs(CVector(a - b)); }
double diff(const CMatrix& a, const CMatrix& b) { return linalg::max_abs(CMatrix(a - b)); }

void check_same_algebra(const HopfAlgebra& A, const Corepresentation& pi) {
  if (pi.algebra_dim() != A.dim())
    throw Error(ErrorKind::DimensionMismatch, "corepresentation is over a different algebra");
}

bool layers_equal(const Corepresentation& a, const Corepresentation& b, double tol) {
  if (a.d != b.d || a.algebra_dim() != b.algebra_dim()) return false;
  for (int l = 0; l < a.algebra_dim(); ++l)
    if (diff(a.layers[l], b.layers[l]) > tol) return false;
  return true;
}

}  // namespace

Corepresentation trivial_corep(const HopfAlgebra& A) {
  Corepresentation pi;
  pi.label = "trivial";
  pi.d = 1;
  for (int l = 0; l < A.dim(); ++l) pi.layers.push_back(CMatrix::Constant(1, 1, A.data().unit(l)));
  return pi;
}

Corepresentation regular_corep(const HopfAlgebra& A, Side side) {
  const int n = A.dim();
  Corepresentation pi;
  pi.label = std::string("regular ") + to_string(side);
  pi.d = n;
  pi.layers.assign(n, CMatrix::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        if (side == Side::R) {
          pi.layers[l](k, j) = A.mu(j, k, l);
        } else {
          cplx v = 0;
          for (int p = 0; p < n; ++p) v += A.mu(j, p, k) * A.s(p, l);
          pi.layers[l](k, j) = v;
        }
      }
  return pi;
}

Corepresentation direct_sum(const Corepresentation& a, const Corepresentation& b) {
  if (a.algebra_dim() != b.algebra_dim())
    throw Error(ErrorKind::DimensionMismatch, "direct sum over different algebras");
  Corepresentation s;
  s.label = a.label + "+" + b.label;
  s.d = a.d + b.d;
  for (int l = 0; l < a.algebra_dim(); ++l) {
    CMatrix M = CMatrix::Zero(s.d, s.d);
    M.topLeftCorner(a.d, a.d) = a.layers[l];
    M.bottomRightCorner(b.d, b.d) = b.layers[l];
    s.layers.push_back(M);
  }
  return s;
}

Corepresentation change_basis(const Corepresentation& pi, const CMatrix& P) {
  const CMatrix Pinv = P.inverse();
  Corepresentation out;
  out.label = pi.label;
  out.d = static_cast<int>(P.cols());
  for (const auto& L : pi.layers) out.layers.push_back(Pinv * L * P);
  return out;
}

Report verify_corep(const HopfAlgebra& A, const Corepresentation& pi, double tol) {
  check_same_algebra(A, pi);
  const auto e = entries(pi);
  double coprod = 0;
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k) {
      CMatrix rhs = CMatrix::Zero(A.dim(), A.dim());
      for (int l = 0; l < pi.d; ++l) rhs += A.tensor(e[j][l], e[l][k]).coeffs;
      coprod = std::max(coprod, diff(A.coproduct(e[j][k]).coeffs, rhs));
    }
  const double counit = diff(pi.evaluate(A.data().counit), CMatrix(CMatrix::Identity(pi.d, pi.d)));
  Report rep;
  rep.title = "corepresentation";
  const double etol = effective_tolerance(A, tol);
  rep.add("coproduct of coefficients", coprod, etol);
  rep.add("counit of coefficients", counit, etol);
  return rep;
}

Report check_unitary(const HopfAlgebra& A, const Corepresentation& pi, double tol) {
  check_same_algebra(A, pi);
  const auto e = entries(pi);
  std::vector<std::vector<Element>> st(pi.d, std::vector<Element>(pi.d));
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k) st[j][k] = A.star(e[j][k]);
  double anti = 0, cols = 0, rows = 0;
  const Element one = A.one();
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k) {
      anti = std::max(anti, diff(A.antipode(e[j][k]).coeffs, st[k][j].coeffs));
      Element c = A.zero(), r = A.zero();
      for (int l = 0; l < pi.d; ++l) {
        c += A.multiply(st[l][j], e[l][k]);
        r += A.multiply(e[j][l], st[k][l]);
      }
      if (j == k) {
        c -= one;
        r -= one;
      }
      cols = std::max(cols, linalg::max_abs(c.coeffs));
      rows = std::max(rows, linalg::max_abs(r.coeffs));
    }
  Report rep;
  rep.title = "unitarity";
  const double etol = effective_tolerance(A, tol);
  rep.add("antipode is adjoint", anti, etol);
  rep.add("columns orthonormal", cols, etol);
  rep.add("rows orthonormal", rows, etol);
  return rep;
}

double unitarity_residual(const HopfAlgebra& A, const Corepresentation& pi, const CMatrix& G) {
  check_same_algebra(A, pi);
  const auto e = entries(pi);
  double r = 0;
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k) {
      Element acc = -G(j, k) * A.one();
      for (int l = 0; l < pi.d; ++l) {
        const Element sl = A.star(e[l][j]);
        for (int m = 0; m < pi.d; ++m)
          if (G(l, m) != cplx(0.0)) acc += G(l, m) * A.multiply(sl, e[m][k]);
      }
      r = std::max(r, linalg::max_abs(acc.coeffs));
    }
  return r;
}

std::vector<CMatrix> morphism_space(const Corepresentation& V, const Corepresentation& W) {
  if (V.algebra_dim() != W.algebra_dim())
    throw Error(ErrorKind::DimensionMismatch, "corepresentations over different algebras");
  const int dv = V.d, dw = W.d, n = V.algebra_dim();
  const CMatrix Iv = CMatrix::Identity(dv, dv), Iw = CMatrix::Identity(dw, dw);
  CMatrix sys(n * dv * dw, dv * dw);
  for (int l = 0; l < n; ++l)
    sys.middleRows(l * dv * dw, dv * dw) =
        linalg::kron(V.layers[l].transpose(), Iw) - linalg::kron(Iv, W.layers[l]);
  const CMatrix N = linalg::nullspace(sys);
  std::vector<CMatrix> out;
  for (Eigen::Index c = 0; c < N.cols(); ++c)
    out.push_back(Eigen::Map<const CMatrix>(N.col(c).data(), dw, dv));
  return out;
}

bool is_irreducible(const Corepresentation& pi) { return morphism_space(pi, pi).size() == 1; }

bool equivalent(const Corepresentation& V, const Corepresentation& W) {
  if (V.d != W.d) return false;
  const auto basis = morphism_space(V, W);
  if (basis.empty()) return false;
  // A generic combination of the basis is invertible iff some member is.
  std::mt19937_64 rng(7);
  CMatrix phi = CMatrix::Zero(W.d, V.d);
  const CMatrix c = linalg::random_complex(static_cast<Eigen::Index>(basis.size()), 1, rng);
  for (std::size_t i = 0; i < basis.size(); ++i) phi += c(static_cast<Eigen::Index>(i)) * basis[i];
  return linalg::rank(phi) == V.d;
}

Corepresentation doubly_contragredient(const HopfAlgebra& A, const Corepresentation& pi) {
  check_same_algebra(A, pi);
  const CMatrix& S2 = A.antipode_squared_matrix();
  Corepresentation out;
  out.label = pi.label + "‡";
  out.d = pi.d;
  out.layers.assign(A.dim(), CMatrix::Zero(pi.d, pi.d));
  for (int l = 0; l < A.dim(); ++l)
    for (int t = 0; t < A.dim(); ++t)
      if (S2(t, l) != cplx(0.0)) out.layers[t] += S2(t, l) * pi.layers[l];
  return out;
}

Corepresentation conjugate_corep(const HopfAlgebra& A, const Corepresentation& pi) {
  check_same_algebra(A, pi);
  const CMatrix& st = A.data().star;
  Corepresentation out;
  out.label = pi.label + "*";
  out.d = pi.d;
  out.layers.assign(A.dim(), CMatrix::Zero(pi.d, pi.d));
  for (int l = 0; l < A.dim(); ++l)
    for (int t = 0; t < A.dim(); ++t)
      if (st(l, t) != cplx(0.0)) out.layers[t] += st(l, t) * pi.layers[l].conjugate();
  return out;
}

FMatrix compute_F(const HopfAlgebra& A, const Corepresentation& pi) {
  check_same_algebra(A, pi);
  const Corepresentation dd = doubly_contragredient(A, pi);
  const int d = pi.d, n = A.dim();
  const CMatrix I = CMatrix::Identity(d, d);
  CMatrix sys(n * d * d, d * d);
  for (int l = 0; l < n; ++l)
    sys.middleRows(l * d * d, d * d) =
        linalg::kron(pi.layers[l].transpose(), I) - linalg::kron(I, dd.layers[l]);
  const CMatrix N = linalg::nullspace(sys);
  if (N.cols() == 0) throw Error(ErrorKind::NoF, "no nonzero solution of F pi = pi'' F");
  if (N.cols() > 1)
    throw Error(ErrorKind::NoF, "F solution space has dimension " + std::to_string(N.cols()) +
                                    "; input is not irreducible");
  CMatrix F = Eigen::Map<const CMatrix>(N.col(0).data(), d, d);
  FMatrix out;
  const cplx tr = F.trace();
  if (std::abs(tr) > 1e-12 * F.norm()) {
    CMatrix H = F * (std::conj(tr) / std::abs(tr));
    const auto pd = linalg::certify_pd(H, 1e-10);
    if (pd.hermiticity_residual <= 1e-9 * H.norm() && pd.positive_definite) {
      out.F = 0.5 * (H + H.adjoint());
      out.F *= static_cast<double>(d) / out.F.trace().real();
      out.normalization = "hermitian positive definite, trace equal to dimension";
    }
  }
  if (out.normalization.empty()) {
    F /= F.norm();
    if (std::abs(tr) > 0) F *= std::conj(tr) / std::abs(tr);
    out.F = F;
    out.normalization = "unit Frobenius norm";
  }
  const double fscale = out.F.norm();
  if (std::abs(out.F.trace()) <= 1e-12 * fscale)
    throw Error(ErrorKind::TraceZero, "trace of F vanishes");
  Eigen::FullPivLU<CMatrix> lu(out.F);
  if (!lu.isInvertible()) throw Error(ErrorKind::NoF, "F is singular");
  const CMatrix Finv = lu.inverse();
  if (std::abs(Finv.trace()) <= 1e-12 * Finv.norm())
    throw Error(ErrorKind::TraceZero, "trace of F inverse vanishes");
  double res = 0;
  for (int l = 0; l < n; ++l)
    res = std::max(res, diff(CMatrix(out.F * pi.layers[l]), CMatrix(dd.layers[l] * out.F)));
  out.residual = res;
  return out;
}

Report verify_orthogonality(const HopfAlgebra& A, const HaarFunctional& h,
                            const Corepresentation& p, const Corepresentation& q, double tol) {
  check_same_algebra(A, p);
  check_same_algebra(A, q);
  Report rep;
  rep.title = "Schur orthogonality";
  const bool same = layers_equal(p, q, 1e-12);
  if (!same && equivalent(p, q)) {
    rep.notes["skipped"] = "equivalent but not identical corepresentations";
    return rep;
  }
  CMatrix F, Finv;
  if (same) {
    F = p.F ? *p.F : compute_F(A, p).F;
    Finv = F.inverse();
  }
  const auto ep = entries(p), eq = entries(q);
  std::vector<std::vector<Element>> sp(p.d, std::vector<Element>(p.d)),
      sq(q.d, std::vector<Element>(q.d));
  for (int j = 0; j < p.d; ++j)
    for (int k = 0; k < p.d; ++k) sp[j][k] = A.antipode(ep[j][k]);
  for (int j = 0; j < q.d; ++j)
    for (int k = 0; k < q.d; ++k) sq[j][k] = A.antipode(eq[j][k]);
  double r1 = 0, r2 = 0;
  for (int j = 0; j < p.d; ++j)
    for (int k = 0; k < p.d; ++k)
      for (int m = 0; m < q.d; ++m)
        for (int n = 0; n < q.d; ++n) {
          const cplx v1 = h.of_product(ep[j][k], sq[m][n]);
          const cplx v2 = h.of_product(sp[j][k], eq[m][n]);
          cplx x1 = 0, x2 = 0;
          if (same && j == n) {
            x1 = F(m, k) / F.trace();
            x2 = Finv(m, k) / Finv.trace();
          }
          r1 = std::max(r1, std::abs(v1 - x1));
          r2 = std::max(r2, std::abs(v2 - x2));
        }
  rep.notes["relation"] = same ? "same corepresentation" : "inequivalent";
  rep.add("h(pi S(pi'))", r1, tol);
  rep.add("h(S(pi) pi')", r2, tol);
  return rep;
}

Corepresentation certify(const HopfAlgebra& A, Corepresentation pi, double tol) {
  pi.verified = verify_corep(A, pi, tol).passed() ? Flag::Yes : Flag::No;
  pi.unitary = check_unitary(A, pi, tol).passed() ? Flag::Yes : Flag::No;
  pi.irreducible = is_irreducible(pi) ? Flag::Yes : Flag::No;
  return pi;
}

std::vector<ComoduleBlock> decompose_comodule(const ComoduleCoaction& c, const CMatrix& gram,
                                              std::uint64_t seed) {
  const int d = c.d, n = c.algebra_dim();
  if (gram.rows() != d || gram.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "Gram matrix does not match carrier dimension");
  const CMatrix B = linalg::inverse_sqrt_basis(gram);
  const Corepresentation u = change_basis(c, B);
  std::mt19937_64 rng(seed);

  std::vector<ComoduleBlock> out;
  std::vector<CMatrix> pending{CMatrix::Identity(d, d)};
  while (!pending.empty()) {
    const CMatrix U = pending.back();
    pending.pop_back();
    const int k = static_cast<int>(U.cols());
    Corepresentation sub;
    sub.label = c.label;
    sub.d = k;
    for (int l = 0; l < n; ++l) sub.layers.push_back(U.adjoint() * u.layers[l] * U);
    const auto comm = morphism_space(sub, sub);
    if (comm.size() <= 1) {
      sub.irreducible = Flag::Yes;
      out.push_back({B * U, sub});
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < 20 && !split; ++attempt) {
      const CMatrix coef = linalg::random_complex(static_cast<Eigen::Index>(comm.size()), 1, rng);
      CMatrix X = CMatrix::Zero(k, k);
      for (std::size_t i = 0; i < comm.size(); ++i) X += coef(static_cast<Eigen::Index>(i)) * comm[i];
      const CMatrix H = X + X.adjoint();
      Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
      const auto clusters = linalg::cluster_eigenvalues(es.eigenvalues(), 1e-8);
      if (clusters.size() < 2) continue;
      split = true;
      for (const auto& cl : clusters) {
        CMatrix V(k, static_cast<Eigen::Index>(cl.size()));
        for (std::size_t i = 0; i < cl.size(); ++i)
          V.col(static_cast<Eigen::Index>(i)) = es.eigenvectors().col(cl[i]);
        pending.push_back(U * V);
      }
    }
    if (!split)
      throw Error(ErrorKind::DecompositionStall,
                  "commutant of dimension " + std::to_string(comm.size()) + " did not split");
  }
  std::stable_sort(out.begin(), out.end(), [](const ComoduleBlock& a, const ComoduleBlock& b) {
    return a.irrep.d < b.irrep.d;
  });
  return out;
}

CMatrix invariant_gram(const HopfAlgebra& A, const HaarFunctional& h, const Corepresentation& pi) {
  check_same_algebra(A, pi);
  const auto e = entries(pi);
  CMatrix G = CMatrix::Zero(pi.d, pi.d);
  for (int j = 0; j < pi.d; ++j)
    for (int k = 0; k < pi.d; ++k)
      for (int l = 0; l < pi.d; ++l) G(j, k) += h.of_product(A.star(e[l][j]), e[l][k]);
  return G;
}

Unitarized unitarize(const HopfAlgebra& A, const Corepresentation& pi, const CMatrix& gram) {
  check_same_algebra(A, pi);
  const auto pd = linalg::certify_pd(gram);
  if (!pd.positive_definite)
    throw Error(ErrorKind::PositivityFailure, "inner product for unitarization is not positive definite");
  Unitarized u;
  u.change = linalg::inverse_sqrt_basis(gram);
  u.pi = change_basis(pi, u.change);
  u.pi.unitary = check_unitary(A, u.pi).passed() ? Flag::Yes : Flag::No;
  return u;
}

int IrrepTable::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (irreps[i].label == name) return i;
    for (const auto& a : irreps[i].aliases)
      if (a == name) return i;
  }
  if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) {
    const int i = std::stoi(name);
    if (i >= 0 && i < size()) return i;
  }
  throw Error(ErrorKind::UnknownIrrep, "no irreducible corepresentation named " + name);
}

int IrrepTable::classify(const Corepresentation& pi) const {
  for (int i = 0; i < size(); ++i)
    if (irreps[i].dim() == pi.d && equivalent(irreps[i].pi, pi)) return i;
  return -1;
}

namespace {

std::vector<long long> fingerprint(const Element& chi) {
  std::vector<long long> f;
  for (Eigen::Index i = 0; i < chi.size(); ++i) {
    f.push_back(std::llround(chi.coeffs(i).real() * 1e8));
    f.push_back(std::llround(chi.coeffs(i).imag() * 1e8));
  }
  return f;
}

}  // namespace

IrrepTable build_irrep_table(const HopfAlgebra& A, const GramPair& gram,
                             std::uint64_t seed) {
  const auto blocks = decompose_comodule(regular_corep(A, Side::R), gram.gramR, seed);
  std::vector<Irrep> classes;
  for (const auto& b : blocks) {
    bool found = false;
    for (auto& c : classes)
      if (c.pi.d == b.irrep.d && !morphism_space(c.pi, b.irrep).empty()) {
        ++c.regular_multiplicity;
        found = true;
        break;
      }
    if (!found) {
      Irrep ir;
      ir.pi = b.irrep;
      ir.regular_multiplicity = 1;
      classes.push_back(ir);
    }
  }
  const Element one = A.one();
  for (auto& c : classes) {
    c.character = A.zero();
    for (int j = 0; j < c.pi.d; ++j) c.character += c.pi.entry(j, j);
  }
  auto is_trivial = [&](const Irrep& c) {
    return c.pi.d == 1 && linalg::max_abs(CVector(c.character.coeffs - one.coeffs)) < 1e-8;
  };
  std::stable_sort(classes.begin(), classes.end(), [&](const Irrep& a, const Irrep& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.pi.d != b.pi.d) return a.pi.d < b.pi.d;
    return fingerprint(a.character) > fingerprint(b.character);
  });

  IrrepTable t;
  t.irreps = std::move(classes);
  int self_conj_1d = 0, big = 0;
  for (int i = 0; i < t.size(); ++i) {
    Irrep& ir = t.irreps[i];
    const FMatrix f = compute_F(A, ir.pi);
    ir.F = f.F;
    ir.Finv = f.F.inverse();
    ir.pi.F = f.F;
    ir.pi.F_normalization = f.normalization;
    ir.pi = certify(A, ir.pi);
    ir.label = is_trivial(ir) ? "trivial" : "irrep" + std::to_string(i);
    ir.pi.label = ir.label;
    const Element chibar = A.star(ir.character);
    for (int j = 0; j < t.size(); ++j)
      if (linalg::max_abs(CVector(t.irreps[j].character.coeffs - chibar.coeffs)) < 1e-8)
        ir.conjugate = j;
    if (ir.pi.d == 1) {
      const CVector& c = ir.character.coeffs;
      Eigen::Index at = 0;
      const double mx = c.cwiseAbs().maxCoeff(&at);
      if (std::abs(mx - 1.0) < 1e-9 && std::abs(c.cwiseAbs().sum() - 1.0) < 1e-9 &&
          std::abs(c(at) - cplx(1.0)) < 1e-9)
        ir.aliases.push_back(A.basis_label(static_cast<int>(at)));
    }
  }
  for (int i = 1; i < t.size(); ++i) {
    if (t.irreps[i].dim() == 1 && t.irreps[i].conjugate == i) ++self_conj_1d;
    if (t.irreps[i].dim() >= 2) ++big;
  }
  for (int i = 1; i < t.size(); ++i) {
    Irrep& ir = t.irreps[i];
    if (self_conj_1d == 1 && ir.dim() == 1 && ir.conjugate == i) ir.aliases.push_back("sign");
    if (big == 1 && ir.dim() >= 2) ir.aliases.push_back("std");
  }
  return t;
}

}  // namespace cqg
