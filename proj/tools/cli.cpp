#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqg/cg.hpp"
#include "cqg/homspace.hpp"
#include "cqg/io.hpp"
#include "cqg/tensor_ops.hpp"
#include "cqg/wigner_eckart.hpp"

namespace cqg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra_path, group_path, builtin, construction = "function";
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  std::string output, format = "json", export_path;
  std::string p, q, r, side = "R", kind = "ordinary";
  std::string subgroup = "0,1", coset = "left";
};

struct Context {
  HopfAlgebra A;
  HaarFunctional h;
  GramPair gram;
  IrrepTable table;
};

std::optional<GroupTable> load_group_input(const Options& o) {
  if (!o.group_path.empty()) return io::load_group(o.group_path);
  if (!o.builtin.empty()) {
    const auto names = builtin_group_names();
    if (std::find(names.begin(), names.end(), o.builtin) == names.end())
      throw UsageError("unknown built-in group " + o.builtin);
    return builtin_group(o.builtin);
  }
  return std::nullopt;
}

HopfAlgebra load_algebra_input(const Options& o) {
  if (!o.algebra_path.empty()) return HopfAlgebra(io::load_algebra(o.algebra_path));
  const std::optional<GroupTable> g = load_group_input(o);
  if (!g) throw UsageError("one of --algebra, --group or --builtin is required");
  return o.construction == "group" ? build_group_algebra(*g) : build_function_algebra(*g);
}

Context make_context(HopfAlgebra A, const Options& o) {
  HaarFunctional h = solve_haar(A, o.tolerance);
  GramPair gram = gram_matrices(A, h);
  IrrepTable table = build_irrep_table(A, gram, o.seed);
  return {std::move(A), std::move(h), std::move(gram), std::move(table)};
}

Side parse_side(const std::string& s) { return s == "L" ? Side::L : Side::R; }
OperatorKind parse_kind(const std::string& s) {
  return s == "twisted" ? OperatorKind::Twisted : OperatorKind::Ordinary;
}

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad subgroup element '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty subgroup");
  return out;
}

std::string fmt(cplx z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

std::vector<int> selected(const IrrepTable& t, const std::string& name) {
  if (!name.empty()) return {t.find(name)};
  std::vector<int> all(t.size());
  for (int i = 0; i < t.size(); ++i) all[i] = i;
  return all;
}

Report irreps_report(const Context& c, double tol) {
  Report rep;
  rep.title = "irreducible corepresentations of " + c.A.label();
  int sum_sq = 0;
  for (int i = 0; i < c.table.size(); ++i) {
    const Irrep& ir = c.table[i];
    sum_sq += ir.dim() * ir.dim();
    const std::string tag = ir.label + ": ";
    rep.merge(verify_corep(c.A, ir.pi, tol), tag);
    rep.merge(check_unitary(c.A, ir.pi, tol), tag);
    rep.merge(verify_orthogonality(c.A, c.h, ir.pi, ir.pi, std::max(tol, 1e-10)), tag);
    std::string aliases;
    for (const std::string& a : ir.aliases) aliases += (aliases.empty() ? "" : ",") + a;
    rep.notes[tag + "dimension"] = std::to_string(ir.dim());
    rep.notes[tag + "aliases"] = aliases;
    rep.notes[tag + "regular multiplicity"] = std::to_string(ir.regular_multiplicity);
    rep.notes[tag + "conjugate"] = ir.conjugate >= 0 ? c.table[ir.conjugate].label : "unresolved";
  }
  rep.add("sum of squared dimensions equals algebra dimension", std::abs(sum_sq - c.A.dim()), 0.0);
  return rep;
}

std::vector<Report> cg_reports(const Context& c, const Options& o) {
  std::vector<Report> out;
  for (int p : selected(c.table, o.p))
    for (int q : selected(c.table, o.q)) {
      const CGSystem pq = solve_cg(c.A, c.h, c.table, p, q);
      const CGSystem qp = solve_cg(c.A, c.h, c.table, q, p);
      Report rep;
      rep.title = "CG " + c.table[p].label + " x " + c.table[q].label;
      rep.add("block diagonalisation", pq.block_residual, o.tolerance);
      for (int r = 0; r < c.table.size(); ++r) {
        rep.merge(verify_triple_haar(c.A, c.h, c.table, pq, qp, r, o.tolerance),
                  c.table[r].label + ": ");
        rep.notes["multiplicity of " + c.table[r].label] = std::to_string(pq.multiplicity[r]);
      }
      out.push_back(std::move(rep));
    }
  return out;
}

std::vector<Report> tensor_ops_reports(const Context& c, const Options& o) {
  const Side side = parse_side(o.side);
  const OperatorKind kind = parse_kind(o.kind);
  const RegularCarrier car = RegularCarrier::full(c.A, side);
  const double ftol = std::min(o.tolerance, 1e-10);
  std::vector<Report> out;
  TensorOperatorFamily id = identity_family(car, c.table[0].label);
  id.kind = kind;
  Report idr = check_family(c.A, car, id, c.table[0].pi, ftol);
  idr.title = "identity operator, " + variant_name(kind, side);
  out.push_back(idr);
  for (int q : selected(c.table, o.q)) {
    const Irrep& ir = c.table[q];
    const TensorOperatorFamily fam =
        multiplication_family(c.A, car, canonical_basis_functions(c.A, ir.pi, side, 0), ir.pi, kind);
    Report rep = check_family(c.A, car, fam, ir.pi, ftol);
    rep.title = "multiplication family for " + ir.label + ", " + variant_name(kind, side);
    const auto space = solve_family_space(c.A, car, ir.pi, kind);
    double worst = 0;
    for (const auto& f : space) worst = std::max(worst, f.residual);
    rep.add("solved families satisfy the defining condition", worst, ftol);
    rep.add("multiplication family lies in the solved space", family_span_residual(space, fam), ftol);
    rep.notes["solution space dimension"] = std::to_string(space.size());
    out.push_back(rep);
  }
  out.push_back(operator_coaction_properties(c.A, car, o.seed, 3, o.tolerance));
  out.push_back(excluded_rule_diagnostics(c.A, side));
  return out;
}

// Every (p,q,r) and row choice for one side and kind, summarised in one report.
Report we_sweep(const Context& c, const RegularCarrier& car, const CMatrix& gram,
                OperatorKind kind, double tol,
                const std::vector<std::vector<BasisFunctionSet>>& sets) {
  Report rep;
  rep.title = "Wigner-Eckart sweep " + variant_name(kind, car.side);
  double worst = 0, zero = 0;
  int count = 0;
  for (int q = 0; q < c.table.size(); ++q) {
    if (sets[q].empty()) continue;
    const TensorOperatorFamily fam = multiplication_family(c.A, car, sets[q][0], c.table[q].pi, kind);
    for (int p = 0; p < c.table.size(); ++p) {
      const CGSystem cg = kind == OperatorKind::Ordinary ? solve_cg(c.A, c.h, c.table, q, p)
                                                          : solve_cg(c.A, c.h, c.table, p, q);
      for (int r = 0; r < c.table.size(); ++r)
        for (const BasisFunctionSet& phi : sets[p])
          for (const BasisFunctionSet& psi : sets[r]) {
            const WEReport we = verify_wigner_eckart(car, gram, c.table, r, psi, q, fam, p, phi, cg, tol);
            worst = std::max(worst, we.residual);
            if (we.multiplicity == 0) zero = std::max(zero, we.tensor.max_abs());
            if (!we.report.passed()) rep.notes["failed: " + we.report.title] = std::to_string(we.residual);
            ++count;
          }
    }
  }
  rep.add("factorisation, worst case", worst, tol);
  rep.add("tensors vanish where multiplicities do", zero, tol);
  rep.notes["tuples checked"] = std::to_string(count);
  return rep;
}

std::vector<std::vector<BasisFunctionSet>> canonical_sets(const Context& c, Side side) {
  std::vector<std::vector<BasisFunctionSet>> sets(c.table.size());
  for (int i = 0; i < c.table.size(); ++i)
    for (int row = 0; row < c.table[i].dim(); ++row)
      sets[i].push_back(canonical_basis_functions(c.A, c.table[i].pi, side, row));
  return sets;
}

std::vector<Report> wigner_eckart_reports(const Context& c, const Options& o) {
  if (o.p.empty() || o.q.empty() || o.r.empty())
    throw UsageError("wigner-eckart needs --p, --q and --r");
  const Side side = parse_side(o.side);
  const OperatorKind kind = parse_kind(o.kind);
  const int p = c.table.find(o.p), q = c.table.find(o.q), r = c.table.find(o.r);
  const RegularCarrier car = RegularCarrier::full(c.A, side);
  const TensorOperatorFamily fam = multiplication_family(
      c.A, car, canonical_basis_functions(c.A, c.table[q].pi, side, 0), c.table[q].pi, kind);
  const CGSystem cg = kind == OperatorKind::Ordinary ? solve_cg(c.A, c.h, c.table, q, p)
                                                      : solve_cg(c.A, c.h, c.table, p, q);
  std::vector<Report> out;
  for (int rp = 0; rp < c.table[p].dim(); ++rp)
    for (int rr = 0; rr < c.table[r].dim(); ++rr) {
      WEReport we = verify_wigner_eckart(car, c.gram[side], c.table, r,
                                         canonical_basis_functions(c.A, c.table[r].pi, side, rr), q,
                                         fam, p, canonical_basis_functions(c.A, c.table[p].pi, side, rp),
                                         cg, o.tolerance);
      we.report.title += " rows " + std::to_string(rr) + "," + std::to_string(rp);
      for (Eigen::Index a = 0; a < we.reduced.size(); ++a)
        we.report.notes["reduced element " + std::to_string(a)] = fmt(we.reduced(a));
      out.push_back(we.report);
    }
  return out;
}

std::vector<Report> homspace_reports(const Context& c, const GroupTable& G, const Options& o) {
  const CoidealSide cs = o.coset == "right" ? CoidealSide::Right : CoidealSide::Left;
  const Side side = cs == CoidealSide::Right ? Side::R : Side::L;
  const CoidealSubalgebra B = build_coset_subalgebra(c.A, G, parse_indices(o.subgroup), cs);
  std::vector<Report> out;
  Report ver = B.verification;
  ver.notes["dimension"] = std::to_string(B.dim());
  out.push_back(ver);
  out.push_back(restricted_coaction_axioms(c.A, c.h, B, side, std::min(o.tolerance, 1e-10)));
  const RegularCarrier car = coideal_carrier(B, side);
  const CMatrix G_B = restricted_gram(B, side, c.gram);
  Report sol;
  sol.title = "restricted basis functions";
  std::vector<std::vector<BasisFunctionSet>> sets(c.table.size());
  for (int i = 0; i < c.table.size(); ++i) {
    const RestrictedBasisFunctions rb = solve_restricted_basis_functions(c.A, B, side, c.table[i].pi);
    double worst = 0;
    for (const auto& s : rb.solutions) worst = std::max(worst, check_basis_functions(c.A, s, c.table[i].pi));
    sol.add(c.table[i].label + ": solutions transform correctly", worst, o.tolerance);
    sol.notes[c.table[i].label + ": solution space dimension"] = std::to_string(rb.solutions.size());
    sol.notes[c.table[i].label + ": canonical sets inside"] = std::to_string(rb.canonical.size());
    sets[i] = rb.solutions;
  }
  out.push_back(sol);
  for (OperatorKind kind : {OperatorKind::Ordinary, OperatorKind::Twisted}) {
    out.push_back(we_sweep(c, car, G_B, kind, o.tolerance, sets));
    Report coup;
    coup.title = "restricted coupled families " + variant_name(kind, side);
    double worst = 0;
    for (int p = 0; p < c.table.size(); ++p)
      for (int q = 0; q < c.table.size(); ++q) {
        if (sets[p].empty() || sets[q].empty()) continue;
        const auto fp = multiplication_family(c.A, car, sets[p][0], c.table[p].pi, kind);
        const auto fq = multiplication_family(c.A, car, sets[q][0], c.table[q].pi, kind);
        const CGSystem cg = kind == OperatorKind::Ordinary ? solve_cg(c.A, c.h, c.table, p, q)
                                                            : solve_cg(c.A, c.h, c.table, q, p);
        for (const CoupledFamily& cf : couple_families(fp, fq, cg, c.table))
          worst = std::max(worst, check_family(c.A, car, cf.family, c.table[cf.r].pi).max_residual());
      }
    coup.add("coupled families satisfy the defining condition", worst, std::min(o.tolerance, 1e-10));
    out.push_back(coup);
  }
  return out;
}

std::vector<Report> demo_reports(const Options& o) {
  std::vector<Report> out;
  const GroupTable S3 = builtin_group("S3");
  for (bool group : {false, true}) {
    const Context c = make_context(group ? build_group_algebra(S3) : build_function_algebra(S3), o);
    const std::string tag = c.A.label() + ": ";
    auto add = [&](Report r) {
      r.title = tag + r.title;
      out.push_back(std::move(r));
    };
    add(verify_hopf_axioms(c.A, o.tolerance));
    add(verify_star_axioms(c.A, o.tolerance));
    add(c.h.certificates);
    add(irreps_report(c, o.tolerance));
    Options all = o;
    all.p.clear();
    all.q.clear();
    for (Report& r : cg_reports(c, all)) add(std::move(r));
    for (Side side : {Side::R, Side::L})
      for (OperatorKind kind : {OperatorKind::Ordinary, OperatorKind::Twisted})
        add(we_sweep(c, RegularCarrier::full(c.A, side), c.gram[side], kind, o.tolerance,
                     canonical_sets(c, side)));
    if (!group) {
      Options hs = o;
      hs.subgroup = "0,1";
      for (const char* coset : {"left", "right"}) {
        hs.coset = coset;
        for (Report& r : homspace_reports(c, S3, hs)) add(std::move(r));
      }
    }
  }
  return out;
}

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedFile:
    case ErrorKind::SchemaMismatch:
    case ErrorKind::UnknownIrrep:
    case ErrorKind::InvalidGroupTable:
    case ErrorKind::InvalidSpec:
    case ErrorKind::NotASubgroup:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compact quantum group toolkit: Haar functional, corepresentations, tensor operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--algebra", o.algebra_path, "Algebra JSON file");
  app.add_option("--group", o.group_path, "Group table JSON file");
  app.add_option("--builtin", o.builtin, "Built-in group table (Z1, Z2, Z3, Z4, S3)");
  app.add_option("--construction", o.construction, "Construction from a group table")
      ->check(CLI::IsMember({"function", "group"}));
  app.add_option("--tolerance", o.tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--output", o.output, "Report file (stdout if omitted)");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--export-algebra", o.export_path, "Write the loaded algebra as JSON");

  auto* validate = app.add_subcommand("validate", "Hopf and star axioms");
  auto* haar = app.add_subcommand("haar", "Haar functional and inner products");
  auto* irreps = app.add_subcommand("irreps", "Irreducible corepresentations");
  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan systems");
  auto* tops = app.add_subcommand("tensor-ops", "Irreducible tensor operators");
  auto* we = app.add_subcommand("wigner-eckart", "Wigner-Eckart factorisation");
  auto* hs = app.add_subcommand("homspace", "Coset coideal subalgebra of C(G)");
  auto* demo = app.add_subcommand("demo", "Full pipeline on the S3 algebras");
  for (auto* sub : {cg, tops, we}) {
    sub->add_option("--p", o.p, "Irrep label, alias or index");
    sub->add_option("--q", o.q, "Irrep label, alias or index");
  }
  we->add_option("--r", o.r, "Irrep label, alias or index");
  for (auto* sub : {tops, we}) {
    sub->add_option("--side", o.side)->check(CLI::IsMember({"R", "L"}));
    sub->add_option("--kind", o.kind)->check(CLI::IsMember({"ordinary", "twisted"}));
  }
  hs->add_option("--subgroup", o.subgroup, "Comma-separated element indices");
  hs->add_option("--coset", o.coset)->check(CLI::IsMember({"left", "right"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    io::RunInfo info;
    info.seed = o.seed;
    info.tolerance = o.tolerance;
    info.conventions = {{"operators", "column convention, carrier coordinates"},
                        {"inner products", "(x,y) = x^H G y"},
                        {"irrep order", "trivial first, then by dimension"}};
    std::vector<Report> sections;
    if (demo->parsed()) {
      info.operation = "demo";
      sections = demo_reports(o);
    } else {
      HopfAlgebra A = load_algebra_input(o);
      if (!o.export_path.empty()) io::save_algebra(o.export_path, A.data());
      info.inputs["algebra"] = A.label();
      if (validate->parsed()) {
        info.operation = "validate";
        sections = {verify_hopf_axioms(A, o.tolerance), verify_star_axioms(A, o.tolerance)};
      } else {
        const Context c = make_context(std::move(A), o);
        if (haar->parsed()) {
          info.operation = "haar";
          Report w;
          w.title = "Haar functional";
          for (int j = 0; j < c.A.dim(); ++j) w.notes["h(" + c.A.basis_label(j) + ")"] = fmt(c.h.h.covector(j));
          sections = {w, c.h.certificates, verify_haar_lemmas(c.A, c.h, std::min(o.tolerance, 1e-10)),
                      c.gram.certificates};
        } else if (irreps->parsed()) {
          info.operation = "irreps";
          sections = {irreps_report(c, o.tolerance)};
        } else if (cg->parsed()) {
          info.operation = "cg";
          sections = cg_reports(c, o);
        } else if (tops->parsed()) {
          info.operation = "tensor-ops";
          sections = tensor_ops_reports(c, o);
        } else if (we->parsed()) {
          info.operation = "wigner-eckart";
          info.inputs["p"] = o.p;
          info.inputs["q"] = o.q;
          info.inputs["r"] = o.r;
          info.inputs["side"] = o.side;
          info.inputs["kind"] = o.kind;
          sections = wigner_eckart_reports(c, o);
        } else if (hs->parsed()) {
          info.operation = "homspace";
          const std::optional<GroupTable> G = load_group_input(o);
          if (!G || o.construction != "function")
            throw UsageError("homspace needs --group or --builtin with the function construction");
          info.inputs["subgroup"] = o.subgroup;
          info.inputs["coset"] = o.coset;
          sections = homspace_reports(c, *G, o);
        }
      }
    }
    const std::string text = o.format == "csv" ? io::report_to_csv(sections)
                                               : io::report_to_json(info, sections).dump(2) + "\n";
    if (o.output.empty())
      out << text;
    else
      io::write_text(o.output, text);
    bool ok = true;
    for (const Report& r : sections) ok = ok && r.passed();
    err << info.operation << ": " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
}

}  // namespace cqg::cli
