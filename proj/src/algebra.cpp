#include "cqg/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/linalg.hpp"

namespace cqg {

Element& Element::operator+=(const Element& o) {
  coeffs += o.coeffs;
  return *this;
}
Element& Element::operator-=(const Element& o) {
  coeffs -= o.coeffs;
  return *this;
}
Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(cplx s, Element a) {
  a.coeffs *= s;
  return a;
}

cplx LinearFunctional::operator()(const Element& x) const {
  if (x.size() != covector.size())
    throw Error(ErrorKind::DimensionMismatch, "functional and element sizes differ");
  return (covector.transpose() * x.coeffs)(0);
}

Tensor3::Tensor3(int d0, int d1, int d2)
    : shape_{d0, d1, d2}, data_(static_cast<std::size_t>(d0) * d1 * d2, cplx(0.0)) {}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

HopfAlgebra::HopfAlgebra(HopfAlgebraData data) : data_(std::move(data)) {
  const int n = data_.dim;
  auto bad = [](const std::string& what) { throw Error(ErrorKind::DimensionMismatch, what); };
  if (n <= 0) bad("dimension must be positive");
  for (int a = 0; a < 3; ++a) {
    if (data_.mult.extent(a) != n) bad("mult tensor shape");
    if (data_.comult.extent(a) != n) bad("comult tensor shape");
  }
  if (data_.antipode.rows() != n || data_.antipode.cols() != n) bad("antipode shape");
  if (data_.star.rows() != n || data_.star.cols() != n) bad("star shape");
  if (data_.counit.size() != n) bad("counit length");
  if (data_.unit.size() != n) bad("unit length");
  if (!data_.basis_labels.empty() && static_cast<int>(data_.basis_labels.size()) != n)
    bad("basis label count");

  mult_mat_ = CMatrix::Zero(n, n * n);
  comult_mat_ = CMatrix::Zero(n * n, n);
  left_.assign(n, CMatrix::Zero(n, n));
  right_.assign(n, CMatrix::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const cplx v = data_.mult(j, k, l);
        mult_mat_(l, j * n + k) = v;
        left_[j](l, k) = v;
        right_[k](l, j) = v;
        comult_mat_(j * n + k, l) = data_.comult(l, j, k);
      }

  S_ = data_.antipode.transpose();
  S2_ = S_ * S_;
  Eigen::FullPivLU<CMatrix> lu(data_.antipode);
  s_invertible_ = lu.rank() == n;
  const CMatrix ST = data_.star.transpose();
  Sinv_ = ST * S_.conjugate() * ST.conjugate();
  Sinv2_ = Sinv_ * Sinv_;

  scale_ = std::max({data_.mult.max_abs(), data_.comult.max_abs(), linalg::max_abs(data_.antipode),
                     linalg::max_abs(data_.star), linalg::max_abs(data_.counit),
                     linalg::max_abs(data_.unit)});
}

std::string HopfAlgebra::basis_label(int j) const {
  if (!data_.basis_labels.empty()) return data_.basis_labels[j];
  return "a" + std::to_string(j);
}

void HopfAlgebra::check_size(const Element& x) const {
  if (x.size() != data_.dim)
    throw Error(ErrorKind::DimensionMismatch, "element does not belong to " + data_.label);
}

Element HopfAlgebra::basis(int j) const { return {CVector::Unit(data_.dim, j)}; }
Element HopfAlgebra::one() const { return {data_.unit}; }
Element HopfAlgebra::zero() const { return {CVector::Zero(data_.dim)}; }

Element HopfAlgebra::multiply(const Element& x, const Element& y) const {
  check_size(x);
  check_size(y);
  return {left_mult_matrix(x) * y.coeffs};
}

TensorElement HopfAlgebra::coproduct(const Element& x) const {
  check_size(x);
  return {linalg::unvec_rows(comult_mat_ * x.coeffs, data_.dim, data_.dim)};
}

const CMatrix& HopfAlgebra::antipode_inverse_matrix() const {
  if (!s_invertible_) throw Error(ErrorKind::InvalidSpec, "antipode matrix is singular");
  return Sinv_;
}

const CMatrix& HopfAlgebra::antipode_inverse_squared_matrix() const {
  if (!s_invertible_) throw Error(ErrorKind::InvalidSpec, "antipode matrix is singular");
  return Sinv2_;
}

Element HopfAlgebra::apply(UnaryMap kind, const Element& x) const {
  check_size(x);
  switch (kind) {
    case UnaryMap::S: return {S_ * x.coeffs};
    case UnaryMap::SInverse: return {antipode_inverse_matrix() * x.coeffs};
    case UnaryMap::SSquared: return {S2_ * x.coeffs};
    case UnaryMap::Star: return {data_.star.transpose() * x.coeffs.conjugate()};
  }
  return x;
}

cplx HopfAlgebra::counit_of(const Element& x) const {
  check_size(x);
  return (data_.counit.transpose() * x.coeffs)(0);
}

CMatrix HopfAlgebra::left_mult_matrix(const Element& x) const {
  CMatrix L = CMatrix::Zero(data_.dim, data_.dim);
  for (int j = 0; j < data_.dim; ++j)
    if (x.coeffs(j) != cplx(0.0)) L += x.coeffs(j) * left_[j];
  return L;
}

CMatrix HopfAlgebra::right_mult_matrix(const Element& y) const {
  CMatrix R = CMatrix::Zero(data_.dim, data_.dim);
  for (int k = 0; k < data_.dim; ++k)
    if (y.coeffs(k) != cplx(0.0)) R += y.coeffs(k) * right_[k];
  return R;
}

TensorElement HopfAlgebra::tensor(const Element& a, const Element& b) const {
  return {a.coeffs * b.coeffs.transpose()};
}

TensorElement HopfAlgebra::multiply(const TensorElement& x, const TensorElement& y) const {
  const int n = data_.dim;
  CMatrix out = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (x.coeffs(j, k) != cplx(0.0))
        out += x.coeffs(j, k) * (left_[j] * y.coeffs * left_[k].transpose());
  return {out};
}

Element HopfAlgebra::multiply_legs(const TensorElement& t) const {
  return {mult_mat_ * linalg::vec_rows(t.coeffs)};
}

TensorElement HopfAlgebra::swap(const TensorElement& t) const { return {t.coeffs.transpose()}; }

TensorElement HopfAlgebra::apply_legs(const CMatrix& f, const CMatrix& g,
                                      const TensorElement& t) const {
  return {f * t.coeffs * g.transpose()};
}

TensorElement HopfAlgebra::star(const TensorElement& t) const {
  const CMatrix ST = data_.star.transpose();
  return {ST * t.coeffs.conjugate() * data_.star};
}

double effective_tolerance(const HopfAlgebra& A, double tol) {
  return tol * std::max(1.0, A.scale());
}

namespace {

double diff(const CVector& a, const CVector& b) { return linalg::max_abs(CVector(a - b)); }
double diff(const CMatrix& a, const CMatrix& b) { return linalg::max_abs(CMatrix(a - b)); }

}  // namespace

Report verify_hopf_axioms(const HopfAlgebra& A, double tol) {
  const int n = A.dim();
  const double etol = effective_tolerance(A, tol);
  Report rep;
  rep.title = "Hopf algebra axioms";
  rep.notes["tolerance_policy"] = "absolute tolerance scaled by max(1, largest structure constant)";

  double assoc = 0, coassoc = 0, bialg = 0, counit_mult = 0, counit_laws = 0;
  double unit_values = 0, unit_laws = 0, coproduct_unit = 0, anti_mult = 0, anti_comult = 0;
  double antipode_law = 0, counit_antipode = 0;

  std::vector<Element> e(n);
  std::vector<TensorElement> d(n);
  for (int j = 0; j < n; ++j) {
    e[j] = A.basis(j);
    d[j] = A.coproduct(e[j]);
  }
  const Element one = A.one();
  const CVector& eps = A.data().counit;

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Element jk = A.multiply(e[j], e[k]);
      for (int l = 0; l < n; ++l)
        assoc = std::max(assoc, diff(A.multiply(jk, e[l]).coeffs,
                                     A.multiply(e[j], A.multiply(e[k], e[l])).coeffs));
      bialg = std::max(bialg, diff(A.coproduct(jk).coeffs, A.multiply(d[j], d[k]).coeffs));
      counit_mult = std::max(counit_mult, std::abs(A.counit_of(jk) - eps(j) * eps(k)));
      anti_mult = std::max(anti_mult, diff(A.antipode(jk).coeffs,
                                           A.multiply(A.antipode(e[k]), A.antipode(e[j])).coeffs));
    }

  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t) {
          cplx lhs = 0, rhs = 0;
          for (int p = 0; p < n; ++p) {
            lhs += A.mu(l, p, t) * A.mu(p, j, k);
            rhs += A.mu(l, j, p) * A.mu(p, k, t);
          }
          coassoc = std::max(coassoc, std::abs(lhs - rhs));
        }
    const CMatrix& c = d[l].coeffs;
    counit_laws = std::max(counit_laws, diff(CVector(c.transpose() * eps), e[l].coeffs));
    counit_laws = std::max(counit_laws, diff(CVector(c * eps), e[l].coeffs));
    unit_laws = std::max(unit_laws, diff(A.multiply(one, e[l]).coeffs, e[l].coeffs));
    unit_laws = std::max(unit_laws, diff(A.multiply(e[l], one).coeffs, e[l].coeffs));
    const CMatrix& S = A.antipode_matrix();
    const TensorElement dS = A.coproduct(A.antipode(e[l]));
    const TensorElement sw = A.apply_legs(S, S, A.swap(d[l]));
    anti_comult = std::max(anti_comult, diff(dS.coeffs, sw.coeffs));
    const CMatrix I = CMatrix::Identity(n, n);
    const CVector target = eps(l) * one.coeffs;
    antipode_law = std::max(antipode_law,
                            diff(A.multiply_legs(A.apply_legs(S, I, d[l])).coeffs, target));
    antipode_law = std::max(antipode_law,
                            diff(A.multiply_legs(A.apply_legs(I, S, d[l])).coeffs, target));
    counit_antipode = std::max(counit_antipode, std::abs(A.counit_of(A.antipode(e[l])) - eps(l)));
  }
  unit_values = std::max(diff(A.antipode(one).coeffs, one.coeffs),
                         std::abs(A.counit_of(one) - cplx(1.0)));
  coproduct_unit = diff(A.coproduct(one).coeffs, A.tensor(one, one).coeffs);

  rep.add("associativity", assoc, etol);
  rep.add("coassociativity", coassoc, etol);
  rep.add("coproduct multiplicative", bialg, etol);
  rep.add("counit multiplicative", counit_mult, etol);
  rep.add("counit laws", counit_laws, etol);
  rep.add("antipode and counit of unit", unit_values, etol);
  rep.add("unit laws", unit_laws, etol);
  rep.add("coproduct of unit", coproduct_unit, etol);
  rep.add("antipode antimultiplicative", anti_mult, etol);
  rep.add("antipode anticomultiplicative", anti_comult, etol);
  rep.add("antipode law", antipode_law, etol);
  rep.add("counit after antipode", counit_antipode, etol);
  return rep;
}

Report verify_star_axioms(const HopfAlgebra& A, double tol) {
  const int n = A.dim();
  const double etol = effective_tolerance(A, tol);
  Report rep;
  rep.title = "star axioms";
  const CMatrix& st = A.data().star;

  double antilinear = 0, involution = 0, anti_mult = 0, comult = 0, counit = 0, s_star = 0,
         unit = 0;
  involution = diff(CMatrix(st.conjugate() * st), CMatrix(CMatrix::Identity(n, n)));
  const cplx z(0.3, -1.7);
  for (int j = 0; j < n; ++j) {
    const Element ej = A.basis(j);
    const Element sj = A.star(ej);
    antilinear = std::max(antilinear, diff(A.star(z * ej).coeffs, (std::conj(z) * sj).coeffs));
    for (int k = 0; k < n; ++k) {
      const Element ek = A.basis(k);
      anti_mult = std::max(anti_mult, diff(A.star(A.multiply(ej, ek)).coeffs,
                                           A.multiply(A.star(ek), sj).coeffs));
    }
    comult = std::max(comult, diff(A.coproduct(sj).coeffs, A.star(A.coproduct(ej)).coeffs));
    counit = std::max(counit, std::abs(A.counit_of(sj) - std::conj(A.counit_of(ej))));
    const Element back = A.star(A.antipode(A.star(A.antipode(ej))));
    s_star = std::max(s_star, diff(back.coeffs, ej.coeffs));
  }
  unit = diff(A.star(A.one()).coeffs, A.one().coeffs);

  rep.add("star antilinear", antilinear, etol);
  rep.add("star involutive", involution, etol);
  rep.add("star antimultiplicative", anti_mult, etol);
  rep.add("star commutes with coproduct", comult, etol);
  rep.add("counit of star", counit, etol);
  rep.add("S star S star is identity", s_star, etol);
  rep.add("star of unit", unit, etol);
  return rep;
}

DualAlgebra build_dual(const HopfAlgebra& A) {
  const int n = A.dim();
  HopfAlgebraData d;
  d.label = A.label() + "'";
  d.dim = n;
  d.mult = Tensor3(n);
  d.comult = Tensor3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        d.mult(i, j, l) = A.mu(l, i, j);
        d.comult(l, i, j) = A.m(i, j, l);
      }
  d.antipode = A.data().antipode.transpose();
  d.counit = A.data().unit;
  d.unit = A.data().counit;
  const CMatrix& s = A.data().antipode;
  const CMatrix& st = A.data().star;
  // <x*, a> = conj <x, S(a)*>
  d.star = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      cplx v = 0;
      for (int w = 0; w < n; ++w) v += s(k, w) * std::conj(st(w, j));
      d.star(j, k) = v;
    }
  for (int j = 0; j < n; ++j) d.basis_labels.push_back(A.basis_label(j) + "'");
  return DualAlgebra(std::move(d));
}

Report dual_pairing_check(const HopfAlgebra& A, const DualAlgebra& D, double tol) {
  const int n = A.dim();
  Report rep;
  rep.title = "dual pairing";
  if (D.dim() != n) throw Error(ErrorKind::DimensionMismatch, "dual has a different dimension");
  double prod = 0, coprod = 0, anti = 0, unit = 0, star = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        prod = std::max(prod, std::abs(D.m(i, j, l) - A.mu(l, i, j)));
        coprod = std::max(coprod, std::abs(D.mu(l, i, j) - A.m(i, j, l)));
      }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      anti = std::max(anti, std::abs(D.s(j, k) - A.s(k, j)));
      // <(a^j)*, a_k> against conj <a^j, S(a_k)*>
      const Element sk = A.star(A.antipode(A.basis(k)));
      star = std::max(star, std::abs(D.data().star(j, k) - std::conj(sk.coeffs(j))));
    }
    unit = std::max(unit, std::abs(D.data().unit(j) - A.data().counit(j)));
    unit = std::max(unit, std::abs(D.data().counit(j) - A.data().unit(j)));
  }
  rep.add("product pairs with coproduct", prod, tol);
  rep.add("coproduct pairs with product", coprod, tol);
  rep.add("antipode pairs with antipode", anti, tol);
  rep.add("unit pairs with counit", unit, tol);
  rep.add("star pairs with antipode-star", star, tol);
  return rep;
}

}  // namespace cqg
