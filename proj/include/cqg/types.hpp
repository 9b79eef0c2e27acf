#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cqg {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Which regular coaction a construction refers to: R is Δ, L is σ∘(S⊗id)∘Δ.
enum class Side { R, L };

enum class OperatorKind { Ordinary, Twisted };

inline const char* to_string(Side s) { return s == Side::R ? "R" : "L"; }
inline const char* to_string(OperatorKind k) {
  return k == OperatorKind::Ordinary ? "ordinary" : "twisted";
}

enum class ErrorKind {
  DimensionMismatch,
  InvalidSpec,
  NoHaar,
  NonUniqueHaar,
  PositivityFailure,
  NoF,
  TraceZero,
  DecompositionStall,
  NotUnitary,
  NonIntegerMultiplicity,
  MultiplicityMismatch,
  SingularC,
  NotASubgroup,
  CoidealMismatch,
  InvalidGroupTable,
  MalformedFile,
  SchemaMismatch,
  UnknownIrrep,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cqg
