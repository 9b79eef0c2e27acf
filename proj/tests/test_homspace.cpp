#include <doctest.h>

#include <set>

#include "cqg/homspace.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cqg;

namespace {

const std::vector<int> kH = {0, 1};  // {e, (12)}

Side side_for(CoidealSide cs) { return cs == CoidealSide::Right ? Side::R : Side::L; }

// Cosets xH (left) or Hx (right) as sets, in order of first appearance.
std::vector<std::set<int>> cosets(const std::vector<int>& H, bool left) {
  std::vector<std::set<int>> out;
  std::set<int> seen;
  for (int x = 0; x < 6; ++x) {
    if (seen.count(x)) continue;
    std::set<int> c;
    for (int h : H) c.insert(left ? oracle::s3_mul(x, h) : oracle::s3_mul(h, x));
    seen.insert(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("coset subalgebras of C(S3) have one basis function per coset") {
  const auto& f = fixtures::get("C(S3)");
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const auto B = build_coset_subalgebra(f.A, f.group, kH, cs);
    CHECK(B.dim() == 3);
    CHECK(B.verification.passed());
    CHECK(B.subalgebra);
    CHECK(B.star_closed);
    CHECK(B.contains_unit);
    CHECK(B.coideal);
    CHECK(B.s2_invariant);
    const auto expected = cosets(kH, cs == CoidealSide::Left);
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < 6; ++x)
        CHECK(std::abs(B.basis(i, x) - cplx(expected[i].count(x) ? 1.0 : 0.0)) < 1e-15);
    CHECK(build_coset_subalgebra(f.A, f.group, {0}, cs).dim() == 6);
    CHECK(build_coset_subalgebra(f.A, f.group, {0, 1, 2, 3, 4, 5}, cs).dim() == 1);
  }
}

TEST_CASE("non-subgroups are rejected") {
  const auto& f = fixtures::get("C(S3)");
  for (const std::vector<int>& bad : {std::vector<int>{0, 4}, std::vector<int>{1}, std::vector<int>{0, 9}}) {
    try {
      build_coset_subalgebra(f.A, f.group, bad, CoidealSide::Left);
      FAIL("expected NotASubgroup");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotASubgroup);
    }
  }
}

TEST_CASE("coideal verification separates good and bad candidates") {
  const auto& f = fixtures::get("C(S3)");
  CMatrix delta = CMatrix::Zero(1, 6);
  delta(0, 3) = 1.0;
  CHECK_FALSE(verify_coideal(f.A, delta, CoidealSide::Right).passed());
  CHECK_FALSE(verify_coideal(f.A, delta, CoidealSide::Left).passed());
  const CMatrix unit = f.A.one().coeffs.transpose();
  CHECK(verify_coideal(f.A, unit, CoidealSide::Right).passed());
  CHECK(verify_coideal(f.A, unit, CoidealSide::Left).passed());
}

TEST_CASE("dependent rows are replaced by an orthonormal basis") {
  const auto& f = fixtures::get("C(S3)");
  CMatrix rows = CMatrix::Zero(2, 6);
  rows.row(0) = f.A.one().coeffs.transpose();
  rows.row(1) = 2.0 * rows.row(0);
  const auto B = make_coideal_subalgebra(f.A, rows, CoidealSide::Left);
  CHECK(B.dim() == 1);
  CHECK(B.verification.notes.count("internal basis") == 1);
  CHECK(std::abs(B.basis.row(0).norm() - 1.0) < 1e-14);
}

TEST_CASE("restricted coactions satisfy the comodule axioms") {
  const auto& f = fixtures::get("C(S3)");
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const auto B = build_coset_subalgebra(f.A, f.group, kH, cs);
    CHECK(restricted_coaction_axioms(f.A, f.h, B, side_for(cs)).passed());
  }
}

TEST_CASE("restricted left coaction permutes cosets") {
  // π^L(1_{c_i H}) = Σ_y 1_{y c_i H} ⊗ δ_y.
  const auto& f = fixtures::get("C(S3)");
  const auto B = build_coset_subalgebra(f.A, f.group, kH, CoidealSide::Left);
  const auto cs = cosets(kH, true);
  for (int i = 0; i < 3; ++i) {
    const CMatrix K = restricted_coaction(f.A, B, Side::L, CVector::Unit(3, i));
    const int rep = *cs[i].begin();
    for (int y = 0; y < 6; ++y) {
      const int image = oracle::s3_mul(y, rep);
      for (int j = 0; j < 3; ++j)
        CHECK(std::abs(K(j, y) - cplx(cs[j].count(image) ? 1.0 : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("restricted Gram matrix is diagonal with entries |H|/|G|") {
  const auto& f = fixtures::get("C(S3)");
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const auto B = build_coset_subalgebra(f.A, f.group, kH, cs);
    const CMatrix G = restricted_gram(B, side_for(cs), f.gram);
    CHECK((G - CMatrix::Identity(3, 3) / 3.0).norm() < 1e-14);
  }
}

TEST_CASE("restricted basis-function dimensions match Frobenius reciprocity") {
  const auto& f = fixtures::get("C(S3)");
  for (const std::vector<int>& H :
       {std::vector<int>{0, 1}, std::vector<int>{0, 4, 5}, std::vector<int>{0}}) {
    for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
      const auto B = build_coset_subalgebra(f.A, f.group, H, cs);
      for (int p = 0; p < 3; ++p) {
        CAPTURE(p);
        const auto rb = solve_restricted_basis_functions(f.A, B, side_for(cs), f.table[p].pi);
        CHECK(static_cast<int>(rb.solutions.size()) == oracle::coset_multiplicity(p, H));
        for (const auto& set : rb.solutions)
          CHECK(check_basis_functions(f.A, set, f.table[p].pi) < 1e-10);
      }
    }
  }
  const auto B = build_coset_subalgebra(f.A, f.group, kH, CoidealSide::Left);
  std::vector<int> dims;
  for (int p = 0; p < 3; ++p)
    dims.push_back(static_cast<int>(
        solve_restricted_basis_functions(f.A, B, Side::L, f.table[p].pi).solutions.size()));
  CHECK(dims == std::vector<int>{1, 0, 1});
}

TEST_CASE("a side mismatch between coideal and coaction is rejected") {
  const auto& f = fixtures::get("C(S3)");
  const auto left = build_coset_subalgebra(f.A, f.group, kH, CoidealSide::Left);
  const auto right = build_coset_subalgebra(f.A, f.group, kH, CoidealSide::Right);
  CHECK_THROWS_AS(coideal_carrier(left, Side::R), Error);
  CHECK_THROWS_AS(coideal_carrier(right, Side::L), Error);
  try {
    coideal_carrier(left, Side::R);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoidealMismatch);
  }
}

TEST_CASE("restricted families, couplings and Wigner-Eckart factorisation") {
  const auto& f = fixtures::get("C(S3)");
  const auto& t = f.table;
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const Side s = side_for(cs);
    const auto B = build_coset_subalgebra(f.A, f.group, kH, cs);
    const RegularCarrier car = coideal_carrier(B, s);
    const CMatrix G = restricted_gram(B, s, f.gram);
    for (OperatorKind kind : {OperatorKind::Ordinary, OperatorKind::Twisted}) {
      TensorOperatorFamily id = identity_family(car, "trivial");
      id.kind = kind;
      id.side = s;
      CHECK(check_family(f.A, car, id, t[0].pi).passed());
      for (int q = 0; q < 3; ++q) {
        const auto rq = solve_restricted_basis_functions(f.A, B, s, t[q].pi);
        if (rq.solutions.empty()) continue;
        const auto fq = multiplication_family(f.A, car, rq.solutions[0], t[q].pi, kind);
        CHECK(check_family(f.A, car, fq, t[q].pi).passed());
        for (int p = 0; p < 3; ++p) {
          const auto rp = solve_restricted_basis_functions(f.A, B, s, t[p].pi);
          if (rp.solutions.empty()) continue;
          const auto fp = multiplication_family(f.A, car, rp.solutions[0], t[p].pi, kind);
          const CGSystem couple = kind == OperatorKind::Ordinary ? solve_cg(f.A, f.h, t, p, q)
                                                                 : solve_cg(f.A, f.h, t, q, p);
          for (const auto& cf : couple_families(fp, fq, couple, t))
            CHECK(check_family(f.A, car, cf.family, t[cf.r].pi).passed());
          const CGSystem we = kind == OperatorKind::Ordinary ? solve_cg(f.A, f.h, t, q, p)
                                                             : solve_cg(f.A, f.h, t, p, q);
          for (int r = 0; r < 3; ++r) {
            const auto rr = solve_restricted_basis_functions(f.A, B, s, t[r].pi);
            if (rr.solutions.empty()) continue;
            const WEReport rep = verify_wigner_eckart(car, G, t, r, rr.solutions[0], q, fq, p,
                                                      rp.solutions[0], we);
            CHECK(rep.report.passed());
            CHECK(rep.residual <= 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("taking B = A reproduces the unrestricted results") {
  const auto& f = fixtures::get("C(S3)");
  const auto& t = f.table;
  const CMatrix I = CMatrix::Identity(6, 6);
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const Side s = side_for(cs);
    const auto B = make_coideal_subalgebra(f.A, I, cs);
    REQUIRE(B.verification.passed());
    const RegularCarrier car = coideal_carrier(B, s);
    const RegularCarrier full = RegularCarrier::full(f.A, s);
    CHECK((restricted_gram(B, s, f.gram) - f.gram[s]).norm() <= 1e-12);
    for (int i = 0; i < 6; ++i)
      CHECK((restricted_coaction(f.A, B, s, CVector::Unit(6, i)) -
             regular_coaction(f.A, s, f.A.basis(i)).coeffs)
                .norm() <= 1e-12);
    for (int p = 0; p < 3; ++p) {
      const auto rb = solve_restricted_basis_functions(f.A, B, s, t[p].pi);
      CHECK(rb.solutions.size() == solve_basis_functions(f.A, full, t[p].pi).size());
      CHECK(static_cast<int>(rb.canonical.size()) == t[p].dim());
    }
    for (OperatorKind kind : {OperatorKind::Ordinary, OperatorKind::Twisted}) {
      CHECK(solve_family_space(f.A, car, t[2].pi, kind).size() ==
            solve_family_space(f.A, full, t[2].pi, kind).size());
      const auto set = canonical_basis_functions(f.A, t[2].pi, s, 0);
      const auto fa = multiplication_family(f.A, car, set, t[2].pi, kind);
      const auto fb = multiplication_family(f.A, full, set, t[2].pi, kind);
      for (int k = 0; k < 2; ++k) CHECK((fa.ops[k] - fb.ops[k]).norm() <= 1e-12);
      const CGSystem cg = solve_cg(f.A, f.h, t, 2, 2);
      const WEReport a = verify_wigner_eckart(car, restricted_gram(B, s, f.gram), t, 2, set, 2, fa,
                                              2, set, cg);
      const WEReport b = verify_wigner_eckart(full, f.gram[s], t, 2, set, 2, fb, 2, set, cg);
      CHECK((a.reduced - b.reduced).norm() <= 1e-12);
    }
  }
}
