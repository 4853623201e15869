#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "riesz/algebra.hpp"
#include "riesz/pogroup.hpp"

namespace riesz {

/// Built-in inputs, byte-stable when serialized. Group fixtures: example38
/// (Z^2 with the half cone 2a >= b >= 0, unit (2,1)), example39 (the gapped
/// integer cone {0} u {n >= 2}, unit 5), quadrant (Z^2 with the standard
/// cone, unit (1,1)). Algebra fixtures are parametric: chain-<m>,
/// boolean-<k>, hsum-<m1>-<m2>..., chainprod-<m1>-<m2>...
nlohmann::json emit_fixture(const std::string& name);
bool fixture_is_group(const std::string& name);
std::vector<std::string> fixture_examples();

PoGroup fixture_group(const std::string& name);
Algebra fixture_algebra(const std::string& name);

}  // namespace riesz
