#include "riesz/io.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "riesz/error.hpp"

namespace riesz {

using nlohmann::json;

RawTable raw_from_json(const json& j) {
  RawTable t;
  try {
    if (!j.is_object()) throw Error(Errc::parse_error, "expected an object");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "effect")
      t.kind = Kind::Effect;
    else if (kind == "pseudo-effect")
      t.kind = Kind::PseudoEffect;
    else
      throw Error(Errc::parse_error, "kind must be effect or pseudo-effect");
    if (j.contains("name")) t.label = j.at("name").get<std::string>();
    t.names = j.at("elements").get<std::vector<std::string>>();
    const int n = t.n();
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) {
      if (!idx.emplace(t.names[i], i).second)
        throw Error(Errc::parse_error, "duplicate element '" + t.names[i] + "'");
    }
    auto look = [&](const std::string& s) {
      auto it = idx.find(s);
      if (it == idx.end())
        throw Error(Errc::parse_error, "unknown element '" + s + "'");
      return it->second;
    };
    t.zero = look(j.at("zero").get<std::string>());
    t.unit = look(j.at("unit").get<std::string>());
    t.plus.assign(size_t(n) * n, -1);
    auto put = [&](int a, int b, int c) {
      int32_t& cell = t.at(a, b);
      if (cell >= 0 && cell != c)
        throw Error(Errc::parse_error,
                    "conflicting sums for " + t.names[a] + "+" + t.names[b]);
      cell = c;
    };
    for (const auto& triple : j.at("sums")) {
      if (!triple.is_array() || triple.size() != 3)
        throw Error(Errc::parse_error, "sum entries must be [a,b,c] triples");
      int a = look(triple[0].get<std::string>());
      int b = look(triple[1].get<std::string>());
      int c = look(triple[2].get<std::string>());
      put(a, b, c);
      if (t.kind == Kind::Effect) put(b, a, c);
    }
    // Zero sums are forced; filling them here keeps fixtures small.
    for (int x = 0; x < n; ++x) {
      put(t.zero, x, x);
      put(x, t.zero, x);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return t;
}

json algebra_to_json(const Algebra& e) {
  json j;
  if (!e.label().empty()) j["name"] = e.label();
  j["kind"] = kind_name(e.kind());
  j["elements"] = e.names();
  j["zero"] = e.name(e.zero());
  j["unit"] = e.name(e.unit());
  json sums = json::array();
  for (int a = 0; a < e.size(); ++a) {
    if (a == e.zero()) continue;
    for (int b = 0; b < e.size(); ++b) {
      if (b == e.zero()) continue;
      if (e.kind() == Kind::Effect && b < a) continue;  // implied by symmetry
      int c = e.plus(a, b);
      if (c >= 0) sums.push_back({e.name(a), e.name(b), e.name(c)});
    }
  }
  j["sums"] = std::move(sums);
  return j;
}

RawTable load_raw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad JSON in '") + path +
                                       "': " + e.what());
  }
  return raw_from_json(j);
}

Algebra load_algebra(const std::string& path) {
  auto res = validate(load_raw(path));
  if (!res.ok()) {
    std::string msg = "'" + path + "' is not a valid algebra:";
    for (const auto& w : res.violations) {
      msg += " [" + w.tag;
      for (const auto& s : w.tuple) msg += " " + s;
      msg += "]";
    }
    throw Error(Errc::parse_error, msg);
  }
  return std::move(*res.algebra);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write '" + path + "'");
  out << dump_stable(j);
}

json witness_to_json(const Witness& w) {
  json j;
  j["tag"] = w.tag;
  j["tuple"] = w.tuple;
  j["note"] = w.note;
  return j;
}

json report_to_json(const PropertyReport& r) {
  json j;
  j["property"] = r.property;
  j["verdict"] = r.holds ? "holds" : "fails";
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  if (!r.scope.empty()) j["scope"] = r.scope;
  return j;
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace riesz
