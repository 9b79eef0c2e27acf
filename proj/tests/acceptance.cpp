// Acceptance run: one PASS/FAIL line per criterion with the measured residuals
// and runtimes. Exit status is nonzero when a criterion fails unexpectedly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cqg/groups.hpp"
#include "cqg/homspace.hpp"
#include "cqg/wigner_eckart.hpp"
#include "oracles.hpp"

using namespace cqg;

namespace {

struct Built {
  GroupTable group;
  HopfAlgebra A;
  HaarFunctional h;
  GramPair gram;
  IrrepTable table;
};

Built build(const std::string& group, bool function) {
  GroupTable g = builtin_group(group);
  HopfAlgebra A = function ? build_function_algebra(g) : build_group_algebra(g);
  HaarFunctional h = solve_haar(A);
  GramPair gram = gram_matrices(A, h);
  IrrepTable table = build_irrep_table(A, gram, 1);
  return {std::move(g), std::move(A), std::move(h), std::move(gram), std::move(table)};
}

struct NamedGroup {
  std::string group;
  bool function;
};

const std::vector<NamedGroup> kSix = {{"Z2", true}, {"Z3", true}, {"Z4", true},
                                      {"S3", true}, {"Z3", false}, {"S3", false}};
const std::vector<NamedGroup> kAll = {{"Z1", true}, {"Z2", true},  {"Z3", true}, {"Z4", true},
                                      {"S3", true}, {"Z3", false}, {"S3", false}};

constexpr OperatorKind kKinds[] = {OperatorKind::Ordinary, OperatorKind::Twisted};
constexpr Side kSides[] = {Side::R, Side::L};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

TensorOperatorFamily mult_family(const Built& b, const RegularCarrier& c, int q, OperatorKind kind) {
  const auto psi = canonical_basis_functions(b.A, b.table[q].pi, c.side, 0);
  return multiplication_family(b.A, c, psi, b.table[q].pi, kind);
}

// 1. Hopf and star axioms.
void axioms(Outcome& o) {
  double worst = 0;
  for (const auto& [g, fn] : kSix) {
    const HopfAlgebra A = fn ? build_function_algebra(builtin_group(g)) : build_group_algebra(builtin_group(g));
    const Report hopf = verify_hopf_axioms(A, 1e-12), star = verify_star_axioms(A, 1e-12);
    worst = std::max({worst, hopf.max_residual(), star.max_residual()});
    o.require(hopf.passed() && star.passed(), A.label());
  }
  o.require(worst <= 1e-12, "residual above 1e-12");
  o.detail << "max residual " << sci(worst) << " (tol 1e-12)";
}

// 2. Haar functional.
void haar(Outcome& o) {
  double weights = 0, invariance = 0, lemmas = 0;
  for (const auto& [g, fn] : kSix) {
    const HopfAlgebra A = fn ? build_function_algebra(builtin_group(g)) : build_group_algebra(builtin_group(g));
    const HaarFunctional h = solve_haar(A);
    const int n = A.dim();
    for (int j = 0; j < n; ++j) {
      const cplx expected = fn ? cplx(1.0 / n) : cplx(j == 0 ? 1.0 : 0.0);
      weights = std::max(weights, std::abs(h.h.covector(j) - expected));
      const CMatrix c = A.coproduct(A.basis(j)).coeffs;
      const CVector target = h.h.covector(j) * A.one().coeffs;
      invariance = std::max({invariance, (c.transpose() * h.h.covector - target).cwiseAbs().maxCoeff(),
                             (c * h.h.covector - target).cwiseAbs().maxCoeff()});
    }
    const Report rep = verify_haar_lemmas(A, h, 1e-10);
    lemmas = std::max(lemmas, rep.max_residual());
    o.require(rep.passed(), A.label() + " lemmas");
  }
  o.require(weights <= 1e-10, "weights");
  o.require(invariance <= 1e-10, "invariance");
  o.detail << "weights " << sci(weights) << ", invariance " << sci(invariance) << ", lemmas "
           << sci(lemmas) << " (tol 1e-10)";
}

// 3. Peter-Weyl decomposition.
void peter_weyl(Outcome& o) {
  const Built f = build("S3", true);
  std::vector<int> dims, mult;
  int sum_sq = 0;
  for (const Irrep& ir : f.table.irreps) {
    dims.push_back(ir.dim());
    mult.push_back(ir.regular_multiplicity);
    sum_sq += ir.dim() * ir.dim();
  }
  o.require(dims == std::vector<int>{1, 1, 2}, "C(S3) dimensions");
  o.require(mult == std::vector<int>{1, 1, 2}, "C(S3) multiplicities");
  o.require(sum_sq == 6, "sum of squares");
  double chars = 0;
  for (int i = 0; i < f.table.size() && i < 3; ++i)
    for (int g = 0; g < 6; ++g)
      chars = std::max(chars, std::abs(f.table[i].character.coeffs(g) - oracle::character(i, g)));
  o.require(chars <= 1e-10, "character table");
  const Built cs = build("S3", false);
  bool all_one = cs.table.size() == 6;
  for (const Irrep& ir : cs.table.irreps) all_one = all_one && ir.dim() == 1;
  o.require(all_one, "CS3 irreps");
  o.detail << "C(S3) dims {1,1,2} mult {1,1,2} sum d^2 = " << sum_sq << ", characters "
           << sci(chars) << "; CS3 " << cs.table.size() << " one-dimensional irreps";
}

// 4. Schur orthogonality.
void orthogonality(Outcome& o) {
  const Built f = build("S3", true);
  double worst = 0, oracle_gap = 0, fdev = 0;
  for (int p = 0; p < f.table.size(); ++p) {
    const Irrep& ir = f.table[p];
    fdev = std::max(fdev, (ir.F - CMatrix::Identity(ir.dim(), ir.dim())).cwiseAbs().maxCoeff());
    for (int q = 0; q < f.table.size(); ++q) {
      const Report rep = verify_orthogonality(f.A, f.h, ir.pi, f.table[q].pi, 1e-10);
      worst = std::max(worst, rep.max_residual());
      o.require(rep.passed(), "irreps " + std::to_string(p) + "," + std::to_string(q));
    }
    const int d = ir.dim();
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m)
          for (int n = 0; n < d; ++n) {
            cplx sum = 0;
            for (int g = 0; g < 6; ++g)
              sum += ir.pi.entry(j, k).coeffs(g) * ir.pi.entry(m, n).coeffs(oracle::s3_inv(g));
            const double expected = (j == n && m == k) ? 1.0 / d : 0.0;
            oracle_gap = std::max(oracle_gap, std::abs(sum / 6.0 - expected));
          }
  }
  o.require(fdev <= 1e-10, "F = I");
  o.require(oracle_gap <= 1e-10, "group-sum oracle");
  o.detail << "residual " << sci(worst) << ", group-sum oracle " << sci(oracle_gap) << ", |F - I| "
           << sci(fdev) << " (tol 1e-10)";
}

// 5. Projection operators with the alternative ordering as negative control.
void projections(Outcome& o) {
  double worst = 0;
  for (bool fn : {true, false}) {
    const Built f = build("S3", fn);
    for (Side s : kSides) {
      const Report rep = verify_projection_identities(f.A, f.h, f.table, s, 1e-10);
      worst = std::max(worst, rep.max_residual());
      o.require(rep.passed(), f.A.label() + " side " + to_string(s));
    }
  }
  const Built cs = build("S3", false);
  double alternative = 0;
  for (Side s : kSides)
    alternative = std::max(alternative, verify_projection_identities(cs.A, cs.h, cs.table, s, 1e-10,
                                                                     ProjectionOrdering::Alternative)
                                            .max_residual());
  o.require(alternative > 0.1, "alternative ordering does not fail on CS3 (Haar functional is a trace)");
  o.detail << "standard ordering " << sci(worst) << " (tol 1e-10); alternative ordering on CS3 "
           << sci(alternative) << " (needs > 0.1)";
}

// 6. Clebsch-Gordan systems.
void clebsch_gordan(Outcome& o) {
  const Built f = build("S3", true);
  double block = 0, triple = 0;
  bool fusion = true;
  for (int p = 0; p < f.table.size(); ++p)
    for (int q = 0; q < f.table.size(); ++q) {
      const CGSystem pq = solve_cg(f.A, f.h, f.table, p, q);
      const CGSystem qp = solve_cg(f.A, f.h, f.table, q, p);
      block = std::max(block, cg_block_residual(f.A, f.table, pq));
      for (int r = 0; r < f.table.size(); ++r) {
        fusion = fusion && pq.multiplicity[r] == oracle::fusion(p, q, r);
        triple = std::max(triple, verify_triple_haar(f.A, f.h, f.table, pq, qp, r, 1e-9).max_residual());
      }
    }
  const CGSystem ss = solve_cg(f.A, f.h, f.table, 2, 2);
  o.require(block <= 1e-9, "block residual");
  o.require(triple <= 1e-9, "triple Haar");
  o.require(fusion, "fusion rules");
  o.require(ss.multiplicity == std::vector<int>{1, 1, 1}, "standard x standard");
  o.detail << "block " << sci(block) << ", triple Haar " << sci(triple)
           << " (tol 1e-9); std x std = trivial + sign + std";
}

// 7. Tensor operators.
void tensor_operators(Outcome& o) {
  // Oracle count first, from operators on C(S3) alone.
  const int oracle_dim = oracle::family_space_dimension_standard();
  double identity = 0, mult = 0;
  for (const auto& [g, fn] : kAll) {
    const Built f = build(g, fn);
    for (Side s : kSides) {
      const RegularCarrier c = RegularCarrier::full(f.A, s);
      for (OperatorKind k : kKinds) {
        TensorOperatorFamily id = identity_family(c, "trivial");
        id.kind = k;
        const Report ri = check_family(f.A, c, id, f.table[0].pi, 1e-10);
        identity = std::max(identity, ri.max_residual());
        o.require(ri.passed(), "identity " + f.A.label());
        for (int q = 0; q < f.table.size(); ++q) {
          const Report rm = check_family(f.A, c, mult_family(f, c, q, k), f.table[q].pi, 1e-10);
          mult = std::max(mult, rm.max_residual());
          o.require(rm.passed(), "multiplication " + f.A.label());
        }
      }
    }
  }
  const Built cs = build("S3", false);
  const RegularCarrier c = RegularCarrier::full(cs.A, Side::R);
  double witness = 0;
  for (int q = 0; q < cs.table.size(); ++q)
    witness = std::max(witness, defining_condition_residual(cs.A, c, mult_family(cs, c, q, OperatorKind::Ordinary).ops,
                                                            cs.table[q].pi, OperatorKind::Twisted));
  o.require(witness > 1e-6, "no distinctness witness");
  const Built f = build("S3", true);
  const int dim = static_cast<int>(
      solve_family_space(f.A, RegularCarrier::full(f.A, Side::R), f.table[2].pi, OperatorKind::Ordinary).size());
  o.require(dim == oracle_dim, "family space dimension");
  o.detail << "identity " << sci(identity) << ", multiplication " << sci(mult)
           << " (tol 1e-10); CS3 ordinary-R under twisted-R " << sci(witness)
           << "; family space " << dim << " (oracle " << oracle_dim << ")";
}

// 8. Wigner-Eckart sweep.
void wigner_eckart(Outcome& o) {
  double worst = 0, zero = 0;
  int count = 0;
  for (bool fn : {true, false}) {
    const Built f = build("S3", fn);
    const auto& t = f.table;
    for (Side s : kSides) {
      const RegularCarrier car = RegularCarrier::full(f.A, s);
      for (OperatorKind kind : kKinds)
        for (int p = 0; p < t.size(); ++p)
          for (int q = 0; q < t.size(); ++q) {
            const CGSystem cg = kind == OperatorKind::Ordinary ? solve_cg(f.A, f.h, t, q, p)
                                                               : solve_cg(f.A, f.h, t, p, q);
            const auto fam = mult_family(f, car, q, kind);
            for (int r = 0; r < t.size(); ++r)
              for (int rp = 0; rp < t[p].dim(); ++rp)
                for (int rr = 0; rr < t[r].dim(); ++rr) {
                  const WEReport rep = verify_wigner_eckart(
                      car, f.gram[s], t, r, canonical_basis_functions(f.A, t[r].pi, s, rr), q, fam,
                      p, canonical_basis_functions(f.A, t[p].pi, s, rp), cg);
                  ++count;
                  worst = std::max(worst, rep.residual);
                  if (rep.multiplicity == 0) zero = std::max(zero, rep.tensor.max_abs());
                }
          }
    }
  }
  const Built cs = build("S3", false);
  const RegularCarrier car = RegularCarrier::full(cs.A, Side::R);
  double swapped = 0;
  for (int p = 0; p < cs.table.size(); ++p)
    for (int q = 0; q < cs.table.size(); ++q) {
      const auto fam = mult_family(cs, car, q, OperatorKind::Ordinary);
      const CGSystem cg = solve_cg(cs.A, cs.h, cs.table, p, q);
      for (int r = 0; r < cs.table.size(); ++r)
        swapped = std::max(
            swapped, verify_wigner_eckart(car, cs.gram.gramR, cs.table, r,
                                          canonical_basis_functions(cs.A, cs.table[r].pi, Side::R, 0), q,
                                          fam, p, canonical_basis_functions(cs.A, cs.table[p].pi, Side::R, 0), cg)
                         .residual);
    }
  o.require(worst <= 1e-9, "factorisation");
  o.require(zero <= 1e-9, "zero tensors");
  o.require(swapped > 1e-3, "swapped CG order");
  o.detail << count << " tuples, factorisation " << sci(worst) << ", zero-multiplicity tensors "
           << sci(zero) << " (tol 1e-9); swapped CG order on CS3 " << sci(swapped) << " (needs > 1e-3)";
}

// 9. Coupled operator families.
void operator_products(Outcome& o) {
  double worst = 0;
  int count = 0;
  for (const auto& [g, fn] : kAll) {
    const Built f = build(g, fn);
    for (Side s : kSides) {
      const RegularCarrier c = RegularCarrier::full(f.A, s);
      for (OperatorKind k : kKinds)
        for (int p = 0; p < f.table.size(); ++p)
          for (int q = 0; q < f.table.size(); ++q) {
            const CGSystem cg = k == OperatorKind::Ordinary ? solve_cg(f.A, f.h, f.table, p, q)
                                                            : solve_cg(f.A, f.h, f.table, q, p);
            for (const auto& cf : couple_families(mult_family(f, c, p, k), mult_family(f, c, q, k), cg, f.table)) {
              const Report rep = check_family(f.A, c, cf.family, f.table[cf.r].pi, 1e-10);
              worst = std::max(worst, rep.max_residual());
              ++count;
              o.require(rep.passed(), f.A.label() + " " + variant_name(k, s));
            }
          }
    }
  }
  o.detail << count << " coupled families, max residual " << sci(worst) << " (tol 1e-10)";
}

// 10. Homogeneous space C(S3)/{e,(12)}.
void homogeneous_space(Outcome& o) {
  const Built f = build("S3", true);
  const auto& t = f.table;
  const std::vector<int> H = {0, 1};
  double we = 0, same = 0;
  for (CoidealSide cs : {CoidealSide::Right, CoidealSide::Left}) {
    const Side s = cs == CoidealSide::Right ? Side::R : Side::L;
    const auto B = build_coset_subalgebra(f.A, f.group, H, cs);
    o.require(B.dim() == 3, "b = 3");
    std::vector<int> dims;
    std::vector<RestrictedBasisFunctions> sols;
    for (int p = 0; p < t.size(); ++p) {
      sols.push_back(solve_restricted_basis_functions(f.A, B, s, t[p].pi));
      dims.push_back(static_cast<int>(sols.back().solutions.size()));
      o.require(dims.back() == oracle::coset_multiplicity(p, H), "Frobenius oracle");
    }
    o.require(dims == std::vector<int>{1, 0, 1}, "dimensions (1,0,1)");
    const RegularCarrier car = coideal_carrier(B, s);
    const CMatrix G = restricted_gram(B, s, f.gram);
    for (OperatorKind kind : kKinds)
      for (int p = 0; p < t.size(); ++p)
        for (int q = 0; q < t.size(); ++q) {
          if (sols[p].solutions.empty() || sols[q].solutions.empty()) continue;
          const auto fam = multiplication_family(f.A, car, sols[q].solutions[0], t[q].pi, kind);
          const CGSystem cg = kind == OperatorKind::Ordinary ? solve_cg(f.A, f.h, t, q, p)
                                                             : solve_cg(f.A, f.h, t, p, q);
          for (int r = 0; r < t.size(); ++r) {
            if (sols[r].solutions.empty()) continue;
            we = std::max(we, verify_wigner_eckart(car, G, t, r, sols[r].solutions[0], q, fam, p,
                                                   sols[p].solutions[0], cg)
                                  .residual);
          }
        }
    // B = A against the unrestricted computations.
    const auto whole = make_coideal_subalgebra(f.A, CMatrix::Identity(6, 6), cs);
    const RegularCarrier wc = coideal_carrier(whole, s);
    const RegularCarrier full = RegularCarrier::full(f.A, s);
    same = std::max(same, (restricted_gram(whole, s, f.gram) - f.gram[s]).cwiseAbs().maxCoeff());
    for (int i = 0; i < 6; ++i)
      same = std::max(same, (restricted_coaction(f.A, whole, s, CVector::Unit(6, i)) -
                             regular_coaction(f.A, s, f.A.basis(i)).coeffs)
                                .cwiseAbs()
                                .maxCoeff());
    for (int p = 0; p < t.size(); ++p)
      o.require(solve_restricted_basis_functions(f.A, whole, s, t[p].pi).solutions.size() ==
                    solve_basis_functions(f.A, full, t[p].pi).size(),
                "B = A solution dimensions");
    for (OperatorKind kind : kKinds) {
      const auto set = canonical_basis_functions(f.A, t[2].pi, s, 0);
      const auto fa = multiplication_family(f.A, wc, set, t[2].pi, kind);
      const auto fb = multiplication_family(f.A, full, set, t[2].pi, kind);
      const CGSystem cg = solve_cg(f.A, f.h, t, 2, 2);
      const auto a = verify_wigner_eckart(wc, restricted_gram(whole, s, f.gram), t, 2, set, 2, fa, 2, set, cg);
      const auto b = verify_wigner_eckart(full, f.gram[s], t, 2, set, 2, fb, 2, set, cg);
      same = std::max(same, (a.reduced - b.reduced).cwiseAbs().maxCoeff());
    }
  }
  o.require(we <= 1e-9, "restricted Wigner-Eckart");
  o.require(same <= 1e-12, "B = A");
  o.detail << "b = 3, dimensions (1,0,1) on both sides, restricted Wigner-Eckart " << sci(we)
           << " (tol 1e-9), B = A deviation " << sci(same) << " (tol 1e-12)";
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 when no runtime bound applies
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Hopf and star axioms", 1.0, axioms},
      {2, "Haar functional", 1.0, haar},
      {3, "Peter-Weyl decomposition", 2.0, peter_weyl},
      {4, "Schur orthogonality", 0.0, orthogonality},
      {5, "projection operators", 0.0, projections},
      {6, "Clebsch-Gordan systems", 0.0, clebsch_gordan},
      {7, "tensor operators", 0.0, tensor_operators},
      {8, "Wigner-Eckart factorisation", 10.0, wigner_eckart},
      {9, "operator products", 0.0, operator_products},
      {10, "homogeneous space", 0.0, homogeneous_space},
  };
  // The alternative-ordering control cannot fail while the Haar functional is
  // a trace, which holds for every finite-dimensional algebra here.
  const std::set<int> known_unattainable = {5};

  int failed = 0, unexpected = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) o.require(false, "runtime budget");
    char budget[32] = "";
    if (c.budget_seconds > 0) std::snprintf(budget, sizeof budget, " (budget %.0f s)", c.budget_seconds);
    std::printf("%s %2d %-28s %s; %.3f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.str().c_str(), secs, budget, o.failures.c_str());
    if (!o.pass) {
      ++failed;
      if (!known_unattainable.count(c.id)) ++unexpected;
    }
  }
  std::printf("%d of %zu criteria pass", static_cast<int>(criteria.size()) - failed, criteria.size());
  if (failed > unexpected) std::printf("; %d known-unattainable failure(s)", failed - unexpected);
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
