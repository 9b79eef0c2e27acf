#pragma once

#include <array>
#include <string>
#include <vector>

#include "cqg/report.hpp"
#include "cqg/types.hpp"

namespace cqg {

// Element of A in the basis a_1..a_n.
struct Element {
  CVector coeffs;

  Eigen::Index size() const { return coeffs.size(); }
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
};
Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(cplx s, Element a);

// Σ c(j,k) a_j ⊗ a_k.
struct TensorElement {
  CMatrix coeffs;
};

struct LinearFunctional {
  CVector covector;
  cplx operator()(const Element& x) const;
};

// Dense rank-3 complex tensor.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2);
  explicit Tensor3(int n) : Tensor3(n, n, n) {}

  cplx& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  cplx operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  int extent(int axis) const { return shape_[axis]; }
  double max_abs() const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * shape_[1] + j) * shape_[2] + k;
  }
  std::array<int, 3> shape_{0, 0, 0};
  std::vector<cplx> data_;
};

enum class UnaryMap { S, SInverse, SSquared, Star };

// Raw structure constants. mult(j,k,l): a_j a_k = Σ_l mult(j,k,l) a_l;
// comult(l,j,k): Δ(a_l) = Σ comult(l,j,k) a_j⊗a_k; antipode(j,k): S(a_j) = Σ_k antipode(j,k) a_k;
// star is antilinear: (Σ x_j a_j)* = Σ conj(x_j) star(j,k) a_k.
struct HopfAlgebraData {
  std::string label;
  int dim = 0;
  Tensor3 mult;
  Tensor3 comult;
  CMatrix antipode;
  CVector counit;
  CVector unit;
  CMatrix star;
  std::vector<std::string> basis_labels;
};

class HopfAlgebra {
 public:
  // Checks shapes only; the axioms are verified on demand.
  explicit HopfAlgebra(HopfAlgebraData data);

  const HopfAlgebraData& data() const { return data_; }
  int dim() const { return data_.dim; }
  const std::string& label() const { return data_.label; }
  std::string basis_label(int j) const;

  cplx m(int j, int k, int l) const { return data_.mult(j, k, l); }
  cplx mu(int l, int j, int k) const { return data_.comult(l, j, k); }
  cplx s(int j, int k) const { return data_.antipode(j, k); }

  Element basis(int j) const;
  Element one() const;
  Element zero() const;

  Element multiply(const Element& x, const Element& y) const;
  TensorElement coproduct(const Element& x) const;
  Element apply(UnaryMap kind, const Element& x) const;
  Element antipode(const Element& x) const { return apply(UnaryMap::S, x); }
  Element star(const Element& x) const { return apply(UnaryMap::Star, x); }
  cplx counit_of(const Element& x) const;

  // Matrices of linear maps on coefficient vectors: T(x) = matrix * x.
  const CMatrix& antipode_matrix() const { return S_; }
  const CMatrix& antipode_inverse_matrix() const;
  const CMatrix& antipode_squared_matrix() const { return S2_; }
  const CMatrix& antipode_inverse_squared_matrix() const;
  bool antipode_invertible() const { return s_invertible_; }
  // y ↦ a_j y and x ↦ x a_k.
  const CMatrix& left_mult_basis(int j) const { return left_[j]; }
  const CMatrix& right_mult_basis(int k) const { return right_[k]; }
  CMatrix left_mult_matrix(const Element& x) const;
  CMatrix right_mult_matrix(const Element& y) const;
  // Row l, column j*n+k holds mult(j,k,l).
  const CMatrix& mult_matrix() const { return mult_mat_; }
  // Row j*n+k, column l holds comult(l,j,k).
  const CMatrix& comult_matrix() const { return comult_mat_; }

  TensorElement tensor(const Element& a, const Element& b) const;
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  Element multiply_legs(const TensorElement& t) const;
  TensorElement swap(const TensorElement& t) const;
  // (f⊗g)(t) for linear maps given as matrices.
  TensorElement apply_legs(const CMatrix& f, const CMatrix& g, const TensorElement& t) const;
  TensorElement star(const TensorElement& t) const;

  // Largest structure-constant modulus; verification tolerances scale with it.
  double scale() const { return scale_; }

 private:
  void check_size(const Element& x) const;

  HopfAlgebraData data_;
  CMatrix mult_mat_;
  CMatrix comult_mat_;
  std::vector<CMatrix> left_;
  std::vector<CMatrix> right_;
  CMatrix S_, S2_, Sinv_, Sinv2_;
  bool s_invertible_ = false;
  double scale_ = 1.0;
};

using DualAlgebra = HopfAlgebra;

// tol scaled by max(1, largest structure-constant modulus).
double effective_tolerance(const HopfAlgebra& A, double tol);

Report verify_hopf_axioms(const HopfAlgebra& A, double tol = 1e-9);
Report verify_star_axioms(const HopfAlgebra& A, double tol = 1e-9);

// Structure constants of A′ in the dual basis a^j.
DualAlgebra build_dual(const HopfAlgebra& A);

// Pairing identities between A and a candidate dual: product vs coproduct,
// coproduct vs product, antipode vs antipode, unit vs counit.
Report dual_pairing_check(const HopfAlgebra& A, const DualAlgebra& dual, double tol = 1e-12);

}  // namespace cqg
