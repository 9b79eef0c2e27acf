#include <doctest.h>

#include "cqg/regular.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cqg;

TEST_CASE("both regular coactions are comodule structures with invariant Haar") {
  for (const std::string& name : fixtures::all_builtins()) {
    CAPTURE(name);
    const auto& f = fixtures::get(name);
    for (Side s : {Side::R, Side::L}) CHECK(regular_coaction_axioms(f.A, f.h, s).passed());
  }
}

TEST_CASE("left regular coaction of C(S3) is f ↦ f(y^{-1} x)") {
  // π^L(δ_z) = Σ_{x,y: y^{-1}x = z} δ_x ⊗ δ_y.
  const auto& f = fixtures::get("C(S3)");
  for (int z = 0; z < 6; ++z) {
    const CMatrix c = regular_coaction(f.A, Side::L, f.A.basis(z)).coeffs;
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        const double expected = oracle::s3_mul(oracle::s3_inv(y), x) == z ? 1.0 : 0.0;
        CHECK(std::abs(c(x, y) - expected) < 1e-14);
      }
  }
}

TEST_CASE("canonical basis functions transform correctly on both sides") {
  for (const std::string& name : {"C(S3)", "CS3", "C(Z4)"}) {
    CAPTURE(name);
    const auto& f = fixtures::get(name);
    for (Side s : {Side::R, Side::L})
      for (const Irrep& ir : f.table.irreps)
        for (int row = 0; row < ir.dim(); ++row)
          CHECK(check_basis_functions(f.A, canonical_basis_functions(f.A, ir.pi, s, row), ir.pi) <
                1e-12);
  }
}

TEST_CASE("basis-function solution spaces have dimension d_p on the full algebra") {
  for (const std::string& name : {"C(S3)", "CS3"}) {
    const auto& f = fixtures::get(name);
    for (Side s : {Side::R, Side::L}) {
      const RegularCarrier c = RegularCarrier::full(f.A, s);
      for (const Irrep& ir : f.table.irreps) {
        const auto sols = solve_basis_functions(f.A, c, ir.pi);
        CHECK(static_cast<int>(sols.size()) == ir.dim());
        for (const auto& set : sols) CHECK(check_basis_functions(f.A, set, ir.pi) < 1e-10);
      }
    }
  }
}

TEST_CASE("basis functions are orthogonal with the canonical diagonal value") {
  const auto& f = fixtures::get("C(S3)");
  for (Side s : {Side::R, Side::L})
    for (int p = 0; p < f.table.size(); ++p)
      for (int q = 0; q < f.table.size(); ++q) {
        const auto psi = canonical_basis_functions(f.A, f.table[q].pi, s, 0);
        const auto phi = canonical_basis_functions(f.A, f.table[p].pi, s, 0);
        CHECK(basis_function_orthogonality(f.A, f.gram, psi, f.table[q], phi, f.table[p]).passed());
      }
}

TEST_CASE("projection identities hold on both sides") {
  for (const std::string& name : {"C(S3)", "CS3", "C(Z3)", "CZ3"}) {
    CAPTURE(name);
    const auto& f = fixtures::get(name);
    for (Side s : {Side::R, Side::L}) {
      const Report rep = verify_projection_identities(f.A, f.h, f.table, s, 1e-10);
      CHECK(rep.passed());
      CHECK(rep.max_residual() <= 1e-10);
    }
  }
}

TEST_CASE("Haar functionals of the built-ins are traces") {
  for (const std::string& name : fixtures::all_builtins()) {
    const auto& f = fixtures::get(name);
    CHECK((f.h.product - f.h.product.transpose()).norm() < 1e-14);
  }
}

TEST_CASE("alternative projection ordering coincides with the standard one for a trace") {
  const auto& f = fixtures::get("CS3");
  double worst = 0;
  for (Side s : {Side::R, Side::L})
    for (const Irrep& ir : f.table.irreps) {
      const CMatrix a = projection_operator(f.A, f.h, ir.pi, 0, 0, s, ProjectionOrdering::Standard);
      const CMatrix b =
          projection_operator(f.A, f.h, ir.pi, 0, 0, s, ProjectionOrdering::Alternative);
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
  CHECK(worst < 1e-14);
  CHECK(verify_projection_identities(f.A, f.h, f.table, Side::R, 1e-10,
                                     ProjectionOrdering::Alternative)
            .passed());
}

TEST_CASE("alternative ordering differs from the standard one for a non-tracial functional") {
  // Weight the identity and one transposition: w(ab) ≠ w(ba) on CS3.
  const auto& f = fixtures::get("CS3");
  CVector w = CVector::Zero(6);
  w(0) = 1.0;
  w(4) = 0.5;
  const HaarFunctional skew = make_functional(f.A, w);
  CHECK((skew.product - skew.product.transpose()).norm() > 0.1);
  double worst = 0;
  for (const Irrep& ir : f.table.irreps) {
    const CMatrix a = projection_operator(f.A, skew, ir.pi, 0, 0, Side::R);
    const CMatrix b = projection_operator(f.A, skew, ir.pi, 0, 0, Side::R,
                                          ProjectionOrdering::Alternative);
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  CHECK(worst > 0.1);
}

TEST_CASE("product rules of the regular coactions") {
  const auto& f = fixtures::get("CS3");
  const Report rep = product_coaction_check(f.A);
  CHECK(rep.passed());
  // Without reversal the left rule fails on a noncommutative algebra.
  CHECK(product_rule_residual(f.A, Side::L, false) > 0.1);
  CHECK(product_rule_residual(fixtures::get("C(S3)").A, Side::L, false) < 1e-12);
}

TEST_CASE("dual-basis actions reproduce the coactions") {
  for (const std::string& name : {"C(S3)", "CS3"}) CHECK(dual_action_crosscheck(fixtures::get(name).A).passed());
}
