#include "riesz/fixtures.hpp"

#include <nlohmann/json.hpp>

#include "riesz/error.hpp"
#include "riesz/io.hpp"

namespace riesz {

namespace {

std::vector<int> parse_params(const std::string& name, size_t prefix_len) {
  std::vector<int> params;
  std::string rest = name.substr(prefix_len);
  size_t start = 0;
  while (start < rest.size()) {
    size_t dash = rest.find('-', start);
    std::string tok = rest.substr(
        start, dash == std::string::npos ? std::string::npos : dash - start);
    try {
      params.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw Error(Errc::unknown_fixture, "bad fixture parameter in " + name);
    }
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  if (params.empty())
    throw Error(Errc::unknown_fixture, "fixture " + name + " needs parameters");
  return params;
}

}  // namespace

bool fixture_is_group(const std::string& name) {
  return name == "example38" || name == "example39" || name == "quadrant";
}

std::vector<std::string> fixture_examples() {
  return {"example38", "example39",  "quadrant",
          "chain-3",   "boolean-2",  "hsum-2-2",
          "chainprod-2-3"};
}

PoGroup fixture_group(const std::string& name) {
  if (name == "example38") {
    ConeSpec cone;
    cone.type = ConeSpec::Type::Polyhedral;
    cone.dim = 2;
    cone.inequalities = {{2, -1}, {0, 1}};  // 2a >= b and b >= 0
    return make_pogroup(std::move(cone), {2, 1});
  }
  if (name == "example39") {
    ConeSpec cone;
    cone.type = ConeSpec::Type::IntegerGaps;
    cone.dim = 1;
    cone.excluded = {1};
    return make_pogroup(std::move(cone), {5});
  }
  if (name == "quadrant") {
    ConeSpec cone;
    cone.type = ConeSpec::Type::Polyhedral;
    cone.dim = 2;
    cone.inequalities = {{1, 0}, {0, 1}};
    return make_pogroup(std::move(cone), {1, 1});
  }
  throw Error(Errc::unknown_fixture, "no group fixture named " + name);
}

Algebra fixture_algebra(const std::string& name) {
  if (name.rfind("chain-", 0) == 0) {
    auto p = parse_params(name, 6);
    if (p.size() != 1)
      throw Error(Errc::unknown_fixture, "chain fixture takes one parameter");
    return build_chain(p[0]);
  }
  if (name.rfind("boolean-", 0) == 0) {
    auto p = parse_params(name, 8);
    if (p.size() != 1 || p[0] < 1 || p[0] > 12)
      throw Error(Errc::unknown_fixture, "boolean fixture takes k in 1..12");
    std::vector<Algebra> factors(p[0], build_chain(1));
    return product(factors);
  }
  if (name.rfind("hsum-", 0) == 0) {
    auto p = parse_params(name, 5);
    std::vector<Algebra> parts;
    for (int m : p) parts.push_back(build_chain(m));
    return horizontal_sum(parts);
  }
  if (name.rfind("chainprod-", 0) == 0) {
    auto p = parse_params(name, 10);
    std::vector<Algebra> factors;
    for (int m : p) factors.push_back(build_chain(m));
    return product(factors);
  }
  throw Error(Errc::unknown_fixture, "no algebra fixture named " + name);
}

nlohmann::json emit_fixture(const std::string& name) {
  if (fixture_is_group(name)) return pogroup_to_json(fixture_group(name));
  auto e = fixture_algebra(name);
  auto j = algebra_to_json(e);
  j["name"] = name;
  return j;
}

}  // namespace riesz
