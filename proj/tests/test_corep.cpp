#include <doctest.h>

#include <algorithm>

#include "cqg/corep.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cqg;

TEST_CASE("right regular comodule of C(S3) splits as trivial + sign + 2 standard") {
  const auto& t = fixtures::get("C(S3)").table;
  REQUIRE(t.size() == 3);
  std::vector<int> dims, mult;
  int sum_sq = 0;
  for (const Irrep& ir : t.irreps) {
    dims.push_back(ir.dim());
    mult.push_back(ir.regular_multiplicity);
    sum_sq += ir.dim() * ir.dim();
  }
  CHECK(dims == std::vector<int>{1, 1, 2});
  CHECK(mult == std::vector<int>{1, 1, 2});
  CHECK(sum_sq == 6);
  CHECK(t.find("trivial") == 0);
  CHECK(t.find("sign") == 1);
  CHECK(t.find("std") == 2);
  CHECK(t.find("2") == 2);
  CHECK_THROWS_AS(t.find("nonexistent"), Error);
}

TEST_CASE("characters of C(S3) irreps match the classical character table") {
  const auto& t = fixtures::get("C(S3)").table;
  for (int i = 0; i < 3; ++i)
    for (int g = 0; g < 6; ++g) {
      CAPTURE(i);
      CAPTURE(g);
      CHECK(std::abs(fixtures::at(t[i].character, g) - cplx(oracle::character(i, g))) < 1e-10);
    }
}

TEST_CASE("group algebra CS3 has six one-dimensional irreps labelled by group elements") {
  const auto& f = fixtures::get("CS3");
  REQUIRE(f.table.size() == 6);
  int sum_sq = 0;
  for (const Irrep& ir : f.table.irreps) {
    CHECK(ir.dim() == 1);
    CHECK(ir.regular_multiplicity == 1);
    sum_sq += ir.dim() * ir.dim();
    REQUIRE(!ir.aliases.empty());
  }
  CHECK(sum_sq == 6);
  // Conjugate of the irrep spanned by g is the one spanned by g^{-1}.
  for (int i = 0; i < 6; ++i) {
    Eigen::Index gi = 0, gj = 0;
    f.table[i].character.coeffs.cwiseAbs().maxCoeff(&gi);
    f.table[f.table[i].conjugate].character.coeffs.cwiseAbs().maxCoeff(&gj);
    CHECK(oracle::s3_inv(static_cast<int>(gi)) == gj);
  }
}

TEST_CASE("table irreps are certified, unitary and irreducible with F = I") {
  for (const std::string& name : fixtures::all_builtins()) {
    CAPTURE(name);
    const auto& f = fixtures::get(name);
    for (const Irrep& ir : f.table.irreps) {
      CHECK(ir.pi.verified == Flag::Yes);
      CHECK(ir.pi.unitary == Flag::Yes);
      CHECK(ir.pi.irreducible == Flag::Yes);
      CHECK((ir.F - CMatrix::Identity(ir.dim(), ir.dim())).norm() < 1e-10);
    }
  }
}

TEST_CASE("Schur orthogonality holds for all irrep pairs") {
  for (const std::string& name : fixtures::all_builtins()) {
    CAPTURE(name);
    const auto& f = fixtures::get(name);
    for (int p = 0; p < f.table.size(); ++p)
      for (int q = 0; q < f.table.size(); ++q)
        CHECK(verify_orthogonality(f.A, f.h, f.table[p].pi, f.table[q].pi, 1e-10).passed());
  }
}

TEST_CASE("orthogonality on C(S3) matches the group-sum oracle") {
  // h(π_jk S(π_mn)) = (1/6) Σ_g π_jk(g) π_mn(g^{-1}) = δ_jn δ_mk / d.
  const auto& f = fixtures::get("C(S3)");
  for (const Irrep& ir : f.table.irreps) {
    const int d = ir.dim();
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) {
            cplx sum = 0;
            for (int g = 0; g < 6; ++g)
              sum += fixtures::at(ir.pi.entry(j, k), g) *
                     fixtures::at(ir.pi.entry(m, n), oracle::s3_inv(g));
            sum /= 6.0;
            const double expected = (j == n && m == k) ? 1.0 / d : 0.0;
            CHECK(std::abs(sum - expected) < 1e-10);
          }
  }
}

TEST_CASE("the standard irrep of C(S3) is equivalent to the oracle matrices") {
  const auto& f = fixtures::get("C(S3)");
  std::vector<std::vector<Element>> entries(2, std::vector<Element>(2, f.A.zero()));
  // Coefficient functions g ↦ Γ(g)_jk of the oracle representation.
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int g = 0; g < 6; ++g) entries[j][k].coeffs(g) = oracle::standard_irrep(g)(j, k);
  const Corepresentation oracle_pi = Corepresentation::from_entries(entries, "oracle");
  CHECK(verify_corep(f.A, oracle_pi).passed());
  CHECK(f.table.classify(oracle_pi) == 2);
}

TEST_CASE("regular comodule, direct sums and basis changes") {
  const auto& f = fixtures::get("C(S3)");
  const Corepresentation reg = regular_corep(f.A, Side::R);
  CHECK(verify_corep(f.A, reg).passed());
  CHECK_FALSE(is_irreducible(reg));
  const Corepresentation sum = direct_sum(f.table[1].pi, f.table[2].pi);
  CHECK(verify_corep(f.A, sum).passed());
  CHECK(sum.d == 3);
  CMatrix P(2, 2);
  P << 1.0, 2.0, 0.0, 1.0;
  const Corepresentation moved = change_basis(f.table[2].pi, P);
  CHECK(verify_corep(f.A, moved).passed());
  CHECK(equivalent(moved, f.table[2].pi));
  CHECK_FALSE(equivalent(f.table[0].pi, f.table[1].pi));
  CHECK(morphism_space(f.table[2].pi, f.table[2].pi).size() == 1);
  CHECK(morphism_space(reg, f.table[2].pi).size() == 2);
}

TEST_CASE("decomposing the left regular comodule gives the same irreps") {
  const auto& f = fixtures::get("C(S3)");
  const auto blocks = decompose_comodule(regular_corep(f.A, Side::L), f.gram.gramL, 7);
  std::vector<int> count(3, 0);
  for (const auto& b : blocks) {
    const int i = f.table.classify(b.irrep);
    REQUIRE(i >= 0);
    ++count[i];
  }
  CHECK(count == std::vector<int>{1, 1, 2});
}

TEST_CASE("unitarize produces a unitary corepresentation") {
  const auto& f = fixtures::get("C(S3)");
  CMatrix P(2, 2);
  P << 2.0, 1.0, 0.0, 1.0;
  const Corepresentation skew = change_basis(f.table[2].pi, P);
  CHECK_FALSE(check_unitary(f.A, skew).passed());
  const Unitarized u = unitarize(f.A, skew, invariant_gram(f.A, f.h, skew));
  CHECK(u.pi.unitary == Flag::Yes);
}
