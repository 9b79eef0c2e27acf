#include "cqg/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace cqg::io {

using nlohmann::json;

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::MalformedFile, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json vector_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v(i)));
  return a;
}

CVector vector_from(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedFile, what + " must be an array");
  if (static_cast<int>(j.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, what + " has length " + std::to_string(j.size()));
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = complex_from(j[i]);
  return v;
}

json matrix_json(const CMatrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) rows.push_back(vector_json(M.row(i).transpose()));
  return rows;
}

CMatrix matrix_from(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedFile, what + " must be an array of rows");
  if (static_cast<int>(j.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, what + " has " + std::to_string(j.size()) + " rows");
  CMatrix M(n, n);
  for (int i = 0; i < n; ++i) M.row(i) = vector_from(j[i], n, what + " row").transpose();
  return M;
}

json triples_json(const Tensor3& t) {
  json rows = json::array();
  for (int a = 0; a < t.extent(0); ++a)
    for (int b = 0; b < t.extent(1); ++b)
      for (int c = 0; c < t.extent(2); ++c) {
        const cplx z = t(a, b, c);
        if (z != cplx(0.0)) rows.push_back(json::array({a, b, c, z.real(), z.imag()}));
      }
  return rows;
}

Tensor3 triples_from(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedFile, what + " must be an array");
  Tensor3 t(n);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != 5)
      throw Error(ErrorKind::MalformedFile, what + " entries must be [i, j, k, re, im]");
    int idx[3];
    for (int a = 0; a < 3; ++a) {
      if (!row[a].is_number_integer()) throw Error(ErrorKind::MalformedFile, what + " index is not an integer");
      idx[a] = row[a].get<int>();
      if (idx[a] < 0 || idx[a] >= n)
        throw Error(ErrorKind::DimensionMismatch, what + " index out of range");
    }
    if (!row[3].is_number() || !row[4].is_number())
      throw Error(ErrorKind::MalformedFile, what + " value is not numeric");
    t(idx[0], idx[1], idx[2]) += cplx(row[3].get<double>(), row[4].get<double>());
  }
  return t;
}

void require_schema(const json& j, const char* schema) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedFile, "top level must be an object");
  if (!j.contains("schema") || !j["schema"].is_string())
    throw Error(ErrorKind::SchemaMismatch, "missing schema field");
  if (j["schema"].get<std::string>() != schema)
    throw Error(ErrorKind::SchemaMismatch,
                "expected " + std::string(schema) + ", found " + j["schema"].get<std::string>());
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw Error(ErrorKind::MalformedFile, std::string("missing field ") + name);
  return j[name];
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json algebra_to_json(const HopfAlgebraData& d) {
  json j;
  j["schema"] = kAlgebraSchema;
  j["label"] = d.label;
  j["dim"] = d.dim;
  j["basis_labels"] = d.basis_labels;
  j["mult"] = triples_json(d.mult);
  j["comult"] = triples_json(d.comult);
  j["antipode"] = matrix_json(d.antipode);
  j["star"] = matrix_json(d.star);
  j["counit"] = vector_json(d.counit);
  j["unit"] = vector_json(d.unit);
  return j;
}

HopfAlgebraData algebra_from_json(const json& j) {
  require_schema(j, kAlgebraSchema);
  HopfAlgebraData d;
  if (!field(j, "dim").is_number_integer() || j["dim"].get<int>() <= 0)
    throw Error(ErrorKind::MalformedFile, "dim must be a positive integer");
  d.dim = j["dim"].get<int>();
  d.label = j.value("label", std::string("algebra"));
  if (j.contains("basis_labels")) {
    d.basis_labels = j["basis_labels"].get<std::vector<std::string>>();
    if (static_cast<int>(d.basis_labels.size()) != d.dim)
      throw Error(ErrorKind::DimensionMismatch, "basis_labels length differs from dim");
  }
  d.mult = triples_from(field(j, "mult"), d.dim, "mult");
  d.comult = triples_from(field(j, "comult"), d.dim, "comult");
  d.antipode = matrix_from(field(j, "antipode"), d.dim, "antipode");
  d.star = matrix_from(field(j, "star"), d.dim, "star");
  d.counit = vector_from(field(j, "counit"), d.dim, "counit");
  d.unit = vector_from(field(j, "unit"), d.dim, "unit");
  return d;
}

json group_to_json(const GroupTable& g) {
  json j;
  j["schema"] = kGroupSchema;
  j["name"] = g.name;
  j["order"] = g.order;
  j["table"] = g.table;
  j["labels"] = g.labels;
  return j;
}

GroupTable group_from_json(const json& j) {
  require_schema(j, kGroupSchema);
  GroupTable g;
  g.name = j.value("name", std::string("G"));
  if (!field(j, "order").is_number_integer())
    throw Error(ErrorKind::MalformedFile, "order must be an integer");
  g.order = j["order"].get<int>();
  try {
    g.table = field(j, "table").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedFile, e.what());
  }
  validate_group_table(g);
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != g.order)
    throw Error(ErrorKind::InvalidGroupTable, "labels length differs from order");
  return g;
}

json report_to_json(const RunInfo& info, const std::vector<Report>& sections) {
  json j;
  j["schema"] = kReportSchema;
  j["operation"] = info.operation;
  j["inputs"] = info.inputs;
  j["seed"] = info.seed;
  j["tolerance"] = info.tolerance;
  j["conventions"] = info.conventions;
  json secs = json::array();
  bool all = true;
  for (const Report& r : sections) {
    json s;
    s["title"] = r.title;
    s["passed"] = r.passed();
    json checks = json::array();
    for (const Check& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"residual", number_or_null(c.residual)},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    s["checks"] = checks;
    s["notes"] = r.notes;
    secs.push_back(s);
    all = all && r.passed();
  }
  j["sections"] = secs;
  j["passed"] = all;
  return j;
}

std::vector<Report> reports_from_json(const json& j) {
  require_schema(j, kReportSchema);
  std::vector<Report> out;
  try {
    for (const json& s : field(j, "sections")) {
      Report r;
      r.title = s.at("title").get<std::string>();
      for (const json& c : s.at("checks")) {
        Check ch;
        ch.name = c.at("name").get<std::string>();
        ch.residual = c.at("residual").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                                 : c.at("residual").get<double>();
        ch.tolerance = c.at("tolerance").get<double>();
        ch.pass = c.at("pass").get<bool>();
        r.checks.push_back(ch);
      }
      r.notes = s.at("notes").get<std::map<std::string, std::string>>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedFile, e.what());
  }
  return out;
}

std::string report_to_csv(const std::vector<Report>& sections) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << std::setprecision(17);
  os << "section,check,residual,tolerance,pass\n";
  for (const Report& r : sections)
    for (const Check& c : r.checks)
      os << quote(r.title) << ',' << quote(c.name) << ',' << c.residual << ',' << c.tolerance << ','
         << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedFile, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedFile, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MalformedFile, "cannot write " + path);
  out << text;
}

HopfAlgebraData load_algebra(const std::string& path) { return algebra_from_json(read_json(path)); }

void save_algebra(const std::string& path, const HopfAlgebraData& data) {
  write_text(path, algebra_to_json(data).dump(1) + "\n");
}

GroupTable load_group(const std::string& path) { return group_from_json(read_json(path)); }

void save_group(const std::string& path, const GroupTable& g) {
  write_text(path, group_to_json(g).dump(1) + "\n");
}

}  // namespace cqg::io
