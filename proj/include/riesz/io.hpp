#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/report.hpp"

namespace riesz {

/// Algebra file format: {"name", "kind", "elements", "zero", "unit",
/// "sums": [[a,b,c], ...]}. Zero sums may be omitted; for the effect kind a
/// triple also defines its commuted form. Conflicting triples are a load
/// error; pairs absent from the completed list are undefined.
RawTable raw_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& e);

/// Parse + validate in one step; throws ParseError when the file is not a
/// valid algebra (validation witnesses are included in the message).
Algebra load_algebra(const std::string& path);
RawTable load_raw(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json report_to_json(const PropertyReport& r);

/// Canonical dump used everywhere a byte-stable report is required.
std::string dump_stable(const nlohmann::json& j);

}  // namespace riesz
