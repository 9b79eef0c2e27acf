#pragma once

#include <string>
#include <vector>

#include "cqg/algebra.hpp"

namespace cqg {

// Finite group by multiplication table; table[a][b] is the index of a·b and
// index 0 is the identity.
struct GroupTable {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;
  std::string label(int a) const;
};

// Throws InvalidGroupTable unless the table is a Latin square with identity 0
// and is associative.
void validate_group_table(const GroupTable& g);

// Built-in tables: "Z1", "Z2", "Z3", "Z4", "S3".
GroupTable builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// C(G) in the delta-function basis.
HopfAlgebra build_function_algebra(const GroupTable& g);
// CG in the group-element basis.
HopfAlgebra build_group_algebra(const GroupTable& g);

}  // namespace cqg
