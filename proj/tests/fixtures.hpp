#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cqg/cg.hpp"
#include "cqg/groups.hpp"
#include "cqg/haar.hpp"

namespace fixtures {

struct Built {
  cqg::GroupTable group;
  cqg::HopfAlgebra A;
  cqg::HaarFunctional h;
  cqg::GramPair gram;
  cqg::IrrepTable table;
};

// "C(S3)" style names for function algebras, "CS3" for group algebras.
inline const Built& get(const std::string& name) {
  static std::map<std::string, std::unique_ptr<Built>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return *it->second;
  const bool function = name.rfind("C(", 0) == 0;
  const std::string group = function ? name.substr(2, name.size() - 3) : name.substr(1);
  cqg::GroupTable g = cqg::builtin_group(group);
  cqg::HopfAlgebra A = function ? cqg::build_function_algebra(g) : cqg::build_group_algebra(g);
  cqg::HaarFunctional h = cqg::solve_haar(A);
  cqg::GramPair gram = cqg::gram_matrices(A, h);
  cqg::IrrepTable table = cqg::build_irrep_table(A, gram, 1);
  auto b = std::make_unique<Built>(Built{g, std::move(A), std::move(h), std::move(gram), std::move(table)});
  return *cache.emplace(name, std::move(b)).first->second;
}

inline const std::vector<std::string>& all_builtins() {
  static const std::vector<std::string> names = {"C(Z1)", "C(Z2)", "C(Z3)", "C(Z4)",
                                                 "C(S3)", "CZ3",   "CS3"};
  return names;
}

// Value at group element g of a function in the delta basis of C(G).
inline cqg::cplx at(const cqg::Element& f, int g) { return f.coeffs(g); }

}  // namespace fixtures
