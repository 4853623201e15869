#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Machine-readable failure classes. The CLI maps all of these to exit code 2;
/// property failures (a report with a witness) are exit code 1 instead.
enum class Errc {
  parse_error,
  dim_mismatch,
  size_overflow,
  budget_exceeded,
  hypothesis_not_met,
  unbounded_interval,
  not_defined,
  unknown_fixture,
  theorem_violation,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::dim_mismatch: return "DimMismatch";
    case Errc::size_overflow: return "SizeOverflow";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::hypothesis_not_met: return "HypothesisNotMet";
    case Errc::unbounded_interval: return "UnboundedInterval";
    case Errc::not_defined: return "NotDefined";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::theorem_violation: return "TheoremViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

/// A proved statement failed on concrete data. This cannot happen on a correct
/// implementation, so the payload dumps everything needed for triage.
class TheoremViolation : public Error {
public:
  TheoremViolation(std::string statement, std::string dump)
      : Error(Errc::theorem_violation, statement + "\n" + dump) {}
};

}  // namespace riesz
