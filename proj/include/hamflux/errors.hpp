#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamflux {

enum class ErrorKind {
  ParseError,
  ValidationError,
  DimensionMismatch,
  AntisymmetryViolation,
  JacobiViolation,
  HomViolation,
  BracketViolation,
  NotIdeal,
  NotSubalgebra,
  NotCentral,
  NotAssociative,
  UnsupportedDegree,
  DegreeZero,
  NotCocycle,
  NotAdmissible,
  NotSymplectic,
  NotInImage,
  InvariantViolation,
  ImageNotHamiltonian,
  NotMomentumMap,
  NotPrimitive,
  KernelMismatch,
  NotAutomorphism,
  NotInvertible,
  IntertwiningViolation,
  CocycleInvarianceViolation,
  NotNilpotent,
  ValueOutsideInvariants,
  HypothesisViolation,
  GenerationFailed,
};

inline std::string_view name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::HomViolation: return "HomViolation";
    case ErrorKind::BracketViolation: return "BracketViolation";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ImageNotHamiltonian: return "ImageNotHamiltonian";
    case ErrorKind::NotMomentumMap: return "NotMomentumMap";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::KernelMismatch: return "KernelMismatch";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IntertwiningViolation: return "IntertwiningViolation";
    case ErrorKind::CocycleInvarianceViolation: return "CocycleInvarianceViolation";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::ValueOutsideInvariants: return "ValueOutsideInvariants";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

/// Input-consistency failures (bad documents, broken axioms) versus failures of
/// a mathematical precondition on otherwise valid data. The CLI maps the first
/// to exit code 2 and the second to exit code 3.
inline bool is_validation_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::AntisymmetryViolation:
    case ErrorKind::JacobiViolation:
    case ErrorKind::HomViolation:
    case ErrorKind::BracketViolation:
    case ErrorKind::NotCentral:
    case ErrorKind::NotAssociative:
    case ErrorKind::NotAutomorphism:
    case ErrorKind::NotInvertible:
    case ErrorKind::IntertwiningViolation:
    case ErrorKind::CocycleInvarianceViolation:
    case ErrorKind::NotMomentumMap:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::string path = {})
      : std::runtime_error(compose(kind, detail, path)),
        kind_(kind),
        detail_(std::move(detail)),
        path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  // JSON path of the offending node for document errors, empty otherwise.
  const std::string& path() const noexcept { return path_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& detail,
                             const std::string& path) {
    std::string out(name(kind));
    if (!path.empty()) out += " at " + path;
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::string path_;
};

}  // namespace hamflux
