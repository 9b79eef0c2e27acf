#include "cqg/report.hpp"

#include <algorithm>
#include <cmath>

#include "cqg/types.hpp"

namespace cqg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NoHaar: return "NoHaar";
    case ErrorKind::NonUniqueHaar: return "NonUniqueHaar";
    case ErrorKind::PositivityFailure: return "PositivityFailure";
    case ErrorKind::NoF: return "NoF";
    case ErrorKind::TraceZero: return "TraceZero";
    case ErrorKind::DecompositionStall: return "DecompositionStall";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::SingularC: return "SingularC";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::CoidealMismatch: return "CoidealMismatch";
    case ErrorKind::InvalidGroupTable: return "InvalidGroupTable";
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::UnknownIrrep: return "UnknownIrrep";
  }
  return "Error";
}

void Report::add(const std::string& name, double residual, double tolerance) {
  checks.push_back({name, residual, tolerance, std::isfinite(residual) && residual <= tolerance});
}

void Report::add_flag(const std::string& name, bool ok) {
  checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = prefix + c.name;
    checks.push_back(copy);
  }
  for (const auto& [k, v] : other.notes) notes[prefix + k] = v;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double Report::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace cqg
