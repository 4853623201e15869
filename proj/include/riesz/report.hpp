#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace riesz {

/// Concrete evidence for a failed property: the tag names what was violated,
/// the tuple lists the elements involved (by name, so reports can be checked
/// by eye), and replaying the tuple against the algebra reproduces the
/// violation.
struct Witness {
  std::string tag;
  std::vector<std::string> tuple;
  std::string note;
};

struct PropertyReport {
  std::string property;
  bool holds = false;
  std::optional<Witness> witness;
  std::map<std::string, long long> stats;
  /// Quantifier scope for checks that only cover a bounded region
  /// (group-level properties). Empty for complete checks.
  std::string scope;
};

inline PropertyReport report_holds(std::string property,
                                   std::map<std::string, long long> stats = {}) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = true;
  r.stats = std::move(stats);
  return r;
}

inline PropertyReport report_fails(std::string property, Witness w,
                                   std::map<std::string, long long> stats = {}) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = false;
  r.witness = std::move(w);
  r.stats = std::move(stats);
  return r;
}

}  // namespace riesz
