#include "cqg/groups.hpp"

#include <array>
#include <set>

namespace cqg {

int GroupTable::inverse(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == 0) return b;
  throw Error(ErrorKind::InvalidGroupTable, "element has no inverse");
}

std::string GroupTable::label(int a) const {
  if (!labels.empty()) return labels[a];
  return "g" + std::to_string(a);
}

void validate_group_table(const GroupTable& g) {
  auto fail = [](const std::string& w) { throw Error(ErrorKind::InvalidGroupTable, w); };
  if (g.order <= 0) fail("order must be positive");
  if (static_cast<int>(g.table.size()) != g.order) fail("table has wrong number of rows");
  for (const auto& row : g.table)
    if (static_cast<int>(row.size()) != g.order) fail("table has a row of wrong length");
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != g.order) fail("label count");
  for (int a = 0; a < g.order; ++a) {
    std::set<int> row, col;
    for (int b = 0; b < g.order; ++b) {
      const int ab = g.table[a][b], ba = g.table[b][a];
      if (ab < 0 || ab >= g.order || ba < 0 || ba >= g.order) fail("entry out of range");
      row.insert(ab);
      col.insert(ba);
    }
    if (static_cast<int>(row.size()) != g.order || static_cast<int>(col.size()) != g.order)
      fail("not a Latin square");
    if (g.table[0][a] != a || g.table[a][0] != a) fail("index 0 is not the identity");
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) fail("not associative");
}

namespace {

GroupTable cyclic(int n) {
  GroupTable g;
  g.name = "Z" + std::to_string(n);
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.labels.push_back(std::to_string(a));
  }
  return g;
}

// Permutations of {1,2,3}; (p·q)(i) = p(q(i)).
GroupTable symmetric3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                   {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable g;
  g.name = "S3";
  g.order = 6;
  g.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) g.table[a][b] = k;
    }
  return g;
}

}  // namespace

GroupTable builtin_group(const std::string& name) {
  if (name == "Z1") return cyclic(1);
  if (name == "Z2") return cyclic(2);
  if (name == "Z3") return cyclic(3);
  if (name == "Z4") return cyclic(4);
  if (name == "S3") return symmetric3();
  throw Error(ErrorKind::InvalidGroupTable, "unknown built-in group " + name);
}

std::vector<std::string> builtin_group_names() { return {"Z1", "Z2", "Z3", "Z4", "S3"}; }

HopfAlgebra build_function_algebra(const GroupTable& g) {
  validate_group_table(g);
  const int n = g.order;
  HopfAlgebraData d;
  d.label = "C(" + (g.name.empty() ? std::string("G") : g.name) + ")";
  d.dim = n;
  d.mult = Tensor3(n);
  d.comult = Tensor3(n);
  d.antipode = CMatrix::Zero(n, n);
  d.star = CMatrix::Identity(n, n);
  d.counit = CVector::Zero(n);
  d.unit = CVector::Ones(n);
  for (int x = 0; x < n; ++x) {
    d.mult(x, x, x) = 1.0;
    for (int y = 0; y < n; ++y) d.comult(g.mul(x, y), x, y) = 1.0;
    d.antipode(x, g.inverse(x)) = 1.0;
    d.basis_labels.push_back("d" + g.label(x));
  }
  d.counit(0) = 1.0;
  return HopfAlgebra(std::move(d));
}

HopfAlgebra build_group_algebra(const GroupTable& g) {
  validate_group_table(g);
  const int n = g.order;
  HopfAlgebraData d;
  d.label = "C" + (g.name.empty() ? std::string("G") : g.name);
  d.dim = n;
  d.mult = Tensor3(n);
  d.comult = Tensor3(n);
  d.antipode = CMatrix::Zero(n, n);
  d.star = CMatrix::Zero(n, n);
  d.counit = CVector::Ones(n);
  d.unit = CVector::Unit(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) d.mult(x, y, g.mul(x, y)) = 1.0;
    d.comult(x, x, x) = 1.0;
    d.antipode(x, g.inverse(x)) = 1.0;
    d.star(x, g.inverse(x)) = 1.0;
    d.basis_labels.push_back(g.label(x));
  }
  return HopfAlgebra(std::move(d));
}

}  // namespace cqg
