#pragma once

#include <stdexcept>
#include <string>

namespace stoneworks {

// Failure taxonomy. `contract_error` covers bad inputs (unknown names,
// broken invariants, unmet preconditions); `equivalence_violation` signals
// that a theorem-level assertion failed, i.e. an implementation bug or an
// invalid system slipping past validation.
enum class ErrorKind {
  cycle,
  unknown_element,
  not_a_lattice,
  not_distributive,
  not_a_frame,
  not_disjoint,
  not_t0,
  not_spectral,
  not_an_ideal,
  not_additive,
  invalid_action,
  axiom_violation,
  precondition_unmet,
  parse_error,
  reference_error,
  equivalence_violation,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::cycle: return "CycleError";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_distributive: return "NotDistributive";
    case ErrorKind::not_a_frame: return "NotAFrame";
    case ErrorKind::not_disjoint: return "NotDisjoint";
    case ErrorKind::not_t0: return "NotT0";
    case ErrorKind::not_spectral: return "NotSpectral";
    case ErrorKind::not_an_ideal: return "NotAnIdeal";
    case ErrorKind::not_additive: return "NotAdditive";
    case ErrorKind::invalid_action: return "InvalidAction";
    case ErrorKind::axiom_violation: return "AxiomViolation";
    case ErrorKind::precondition_unmet: return "PreconditionUnmet";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::reference_error: return "ReferenceError";
    case ErrorKind::equivalence_violation: return "EquivalenceViolation";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ContractError : public Error {
 public:
  using Error::Error;
};

// Bug signal: a verified theorem failed on validated input.
class EquivalenceViolation : public Error {
 public:
  explicit EquivalenceViolation(const std::string& what)
      : Error(ErrorKind::equivalence_violation, what) {}
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw ContractError(kind, what);
}

inline void check_equiv(bool ok, const std::string& what) {
  if (!ok) throw EquivalenceViolation(what);
}

}  // namespace stoneworks
