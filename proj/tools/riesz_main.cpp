#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "riesz/analysis.hpp"
#include "riesz/canonical.hpp"
#include "riesz/decompose.hpp"
#include "riesz/error.hpp"
#include "riesz/fixtures.hpp"
#include "riesz/io.hpp"
#include "riesz/parallel.hpp"
#include "riesz/pogroup.hpp"
#include "riesz/search.hpp"
#include "riesz/states.hpp"

using nlohmann::json;

namespace {

struct Output {
  std::string path;  // empty = stdout
  bool as_json = false;

  void emit(const json& doc, const std::string& human) const {
    std::string text = as_json ? riesz::dump_stable(doc) : human;
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
      std::ofstream out(path);
      out << text;
      if (!text.empty() && text.back() != '\n') out << '\n';
    }
  }
};

std::string human_report(const riesz::PropertyReport& r) {
  std::ostringstream os;
  os << r.property << ": " << (r.holds ? "holds" : "FAILS");
  if (!r.scope.empty()) os << " (" << r.scope << ")";
  if (r.witness) {
    os << "\n  witness [" << r.witness->tag << "]:";
    for (const auto& t : r.witness->tuple) os << " " << t;
    if (!r.witness->note.empty()) os << "\n  " << r.witness->note;
  }
  return os.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

riesz::Kind parse_kind(const std::string& s) {
  if (s == "effect") return riesz::Kind::Effect;
  if (s == "pseudo-effect" || s == "pseudo") return riesz::Kind::PseudoEffect;
  throw riesz::Error(riesz::Errc::parse_error,
                     "kind must be effect or pseudo-effect");
}

int exit_for_reports(const std::vector<riesz::PropertyReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riesz: a finite-model workbench for effect algebras"};
  app.require_subcommand(1);

  Output out;
  int jobs = 0;
  app.add_flag("--json", out.as_json, "emit machine-readable JSON");
  app.add_option("--out", out.path, "write output to a file");
  app.add_option("--jobs", jobs, "cap worker threads (default: all cores)");

  // validate
  std::string file;
  auto* v = app.add_subcommand("validate", "check the axioms of an algebra file");
  v->add_option("file", file)->required();

  // props
  std::string props_checks = "rdp,rip,uarp,lattice,mv,center,chain";
  auto* p = app.add_subcommand("props", "decide structural properties");
  p->add_option("file", file)->required();
  p->add_option("--check", props_checks, "comma-separated property list");

  // decompose
  auto* d = app.add_subcommand("decompose",
                               "chain-product decomposition with verification");
  d->add_option("file", file)->required();

  // states
  bool extremal = false;
  std::string state_file;
  auto* st = app.add_subcommand("states", "exact state space computations");
  st->add_option("file", file)->required();
  st->add_flag("--extremal", extremal, "enumerate extremal states");
  st->add_option("--decompose", state_file,
                 "decompose the state in this file into atomic states");

  // interval
  int multiple = 1;
  std::string emit_path;
  auto* iv = app.add_subcommand("interval",
                                "interval effect algebra of a po-group");
  iv->add_option("group", file)->required();
  iv->add_option("--multiple", multiple, "use [0, n*unit]")->required();
  iv->add_option("--emit", emit_path, "write the algebra file here");

  // group
  std::string group_checks = "strong-unit,generative,uarp,rdp,rip,sumset";
  long long bound = 4;
  int group_multiple = 2;
  int max_summands = 64;
  long long node_limit = 1'000'000;
  auto* gr = app.add_subcommand("group", "bounded-box checks on a po-group");
  gr->add_option("group", file)->required();
  gr->add_option("--check", group_checks, "comma-separated check list");
  gr->add_option("--bound", bound, "box radius for group quantifiers");
  gr->add_option("--multiple", group_multiple, "n for the sumset identity");
  gr->add_option("--max-summands", max_summands, "sss summand budget");
  gr->add_option("--node-limit", node_limit, "sss frontier budget");

  // search
  std::string kind_str = "effect";
  int max_size = 6;
  std::string require_csv, assert_csv, models_path;
  auto* se = app.add_subcommand("search",
                                "enumerate models and check assertions");
  se->add_option("--kind", kind_str, "effect | pseudo-effect");
  se->add_option("--max-size", max_size);
  se->add_option("--require", require_csv, "filters (comma-separated)");
  se->add_option("--assert", assert_csv, "assertions (comma-separated)");
  se->add_option("--models", models_path, "stream filtered models as JSONL");

  // iso
  std::string file2;
  auto* is = app.add_subcommand("iso", "isomorphism test with bijection");
  is->add_option("file1", file)->required();
  is->add_option("file2", file2)->required();

  // census
  auto* ce = app.add_subcommand("census", "isomorphism-class counts as CSV");
  ce->add_option("--kind", kind_str);
  ce->add_option("--max-size", max_size);

  // fixture
  std::string fixture_name;
  auto* fx = app.add_subcommand("fixture", "emit a built-in input file");
  fx->add_option("name", fixture_name)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // Exit codes are the scripting contract: 0 ok, 1 property failed,
    // 2 input error. Help requests keep their zero status.
    return code == 0 ? 0 : 2;
  }
  if (jobs > 0) riesz::set_worker_count(jobs);

  try {
    if (v->parsed()) {
      auto res = riesz::validate(riesz::load_raw(file));
      json doc;
      doc["valid"] = res.ok();
      json viol = json::array();
      std::ostringstream human;
      if (res.ok()) {
        doc["elements"] = res.algebra->size();
        human << "valid " << riesz::kind_name(res.algebra->kind())
              << " algebra with " << res.algebra->size() << " elements";
      } else {
        human << "INVALID:";
        for (const auto& w : res.violations) {
          viol.push_back(riesz::witness_to_json(w));
          human << "\n  [" << w.tag << "]";
          for (const auto& t : w.tuple) human << " " << t;
          human << ": " << w.note;
        }
      }
      doc["violations"] = std::move(viol);
      out.emit(doc, human.str());
      return res.ok() ? 0 : 1;
    }

    if (p->parsed()) {
      auto e = riesz::load_algebra(file);
      std::vector<riesz::PropertyReport> reports;
      json docs = json::array();
      std::ostringstream human;
      for (const auto& name : split_csv(props_checks)) {
        if (name == "center") {
          auto c = riesz::center(e);
          auto rep = c.boolean_check;
          json j = riesz::report_to_json(rep);
          json els = json::array();
          for (int x : c.elements) els.push_back(e.name(x));
          j["elements"] = std::move(els);
          docs.push_back(std::move(j));
          human << "center: " << c.elements.size()
                << " central elements, Boolean algebra verified\n";
          reports.push_back(rep);
          continue;
        }
        auto rep = riesz::check_named_property(e, name);
        docs.push_back(riesz::report_to_json(rep));
        human << human_report(rep) << "\n";
        reports.push_back(rep);
      }
      out.emit(docs, human.str());
      return exit_for_reports(reports);
    }

    if (d->parsed()) {
      auto e = riesz::load_algebra(file);
      auto dec = riesz::chain_decomposition(e);
      json doc = riesz::decomposition_to_json(e, dec);
      std::ostringstream human;
      human << "decomposes onto a product of " << dec.blocks.size()
            << " chains; lengths:";
      for (int l : dec.chain_lengths()) human << " " << l;
      out.emit(doc, human.str());
      return 0;
    }

    if (st->parsed()) {
      auto e = riesz::load_algebra(file);
      if (!state_file.empty()) {
        std::ifstream in(state_file);
        if (!in)
          throw riesz::Error(riesz::Errc::parse_error,
                             "cannot open '" + state_file + "'");
        json js;
        in >> js;
        auto s = riesz::state_from_json(e, js);
        auto dec = riesz::chain_decomposition(e);
        auto lambda = riesz::decompose_state(e, dec, s);
        json doc;
        json lj = json::object();
        std::ostringstream human;
        human << "convex coefficients:";
        for (size_t i = 0; i < lambda.size(); ++i) {
          lj[e.name(dec.blocks[i].atom)] = lambda[i].str();
          human << " " << e.name(dec.blocks[i].atom) << "="
                << lambda[i].str();
        }
        doc["lambda"] = std::move(lj);
        doc["verified"] = true;
        out.emit(doc, human.str());
        return 0;
      }
      auto poly = riesz::state_polytope(e);
      json doc = riesz::polytope_to_json(e, poly);
      std::ostringstream human;
      if (poly.stateless) {
        human << "stateless algebra (empty state polytope)";
      } else {
        human << "state polytope of dimension " << poly.dim << " with "
              << poly.geometry.vertices.size() << " extremal states";
      }
      if (extremal) {
        auto ext = riesz::extremal_states(e);
        json ej = json::array();
        for (const auto& s : ext) ej.push_back(riesz::state_to_json(e, s));
        doc["extremal"] = std::move(ej);
        for (const auto& s : ext) {
          human << "\n ";
          for (int x = 0; x < e.size(); ++x)
            human << " " << e.name(x) << "=" << s.values[x].str();
        }
      }
      out.emit(doc, human.str());
      return 0;
    }

    if (iv->parsed()) {
      auto g = riesz::load_pogroup(file);
      auto e = riesz::interval_effect_algebra(g, multiple);
      json doc = riesz::algebra_to_json(e);
      if (!emit_path.empty()) riesz::save_json(doc, emit_path);
      std::ostringstream human;
      human << "interval algebra with " << e.size() << " elements:";
      for (const auto& n : e.names()) human << " " << n;
      out.emit(doc, human.str());
      return 0;
    }

    if (gr->parsed()) {
      auto g = riesz::load_pogroup(file);
      riesz::SssOptions sss{max_summands, node_limit};
      std::vector<riesz::PropertyReport> reports;
      for (const auto& name : split_csv(group_checks)) {
        if (name == "strong-unit")
          reports.push_back(riesz::is_strong_unit(g, bound));
        else if (name == "generative")
          reports.push_back(riesz::is_generative_unit(g, bound, sss));
        else if (name == "uarp")
          reports.push_back(riesz::group_uarp_check(g, bound));
        else if (name == "rdp")
          reports.push_back(riesz::group_rdp_check(g, bound));
        else if (name == "rip")
          reports.push_back(riesz::group_rip_check(g, bound));
        else if (name == "sumset")
          reports.push_back(riesz::check_sumset_identity(g, group_multiple));
        else if (name == "atoms-consistency")
          reports.push_back(riesz::interval_atoms_consistency(g));
        else
          throw riesz::Error(riesz::Errc::parse_error,
                             "unknown group check '" + name + "'");
      }
      json docs = json::array();
      std::ostringstream human;
      for (const auto& r : reports) {
        docs.push_back(riesz::report_to_json(r));
        human << human_report(r) << "\n";
      }
      out.emit(docs, human.str());
      return exit_for_reports(reports);
    }

    if (se->parsed()) {
      riesz::SearchSpec spec;
      spec.kind = parse_kind(kind_str);
      spec.max_size = max_size;
      spec.require = split_csv(require_csv);
      spec.assert_props = split_csv(assert_csv);
      auto outcome = riesz::regression(spec);
      if (!models_path.empty()) {
        std::ofstream ms(models_path);
        for (int n = 2; n <= spec.max_size; ++n)
          for (const auto& m : riesz::enumerate_algebras(spec.kind, n)) {
            bool keep = true;
            for (const auto& req : spec.require)
              keep = keep && riesz::check_named_property(m, req).holds;
            if (keep) ms << riesz::algebra_to_json(m).dump() << "\n";
          }
      }
      json doc = riesz::outcome_to_json(outcome);
      std::ostringstream human;
      long long failures = 0;
      for (const auto& s : outcome.sizes) {
        human << "size " << s.size << ": " << s.models << " models, "
              << s.filtered << " filtered, " << s.failures << " failures\n";
        failures += s.failures;
      }
      out.emit(doc, human.str());
      return failures == 0 ? 0 : 1;
    }

    if (is->parsed()) {
      auto e = riesz::load_algebra(file);
      auto f = riesz::load_algebra(file2);
      auto sigma = riesz::is_isomorphic(e, f);
      json doc;
      doc["isomorphic"] = sigma.has_value();
      std::ostringstream human;
      if (sigma) {
        json bij = json::array();
        human << "isomorphic:";
        for (int x = 0; x < e.size(); ++x) {
          bij.push_back({e.name(x), f.name((*sigma)[x])});
          human << " " << e.name(x) << "->" << f.name((*sigma)[x]);
        }
        doc["bijection"] = std::move(bij);
      } else {
        human << "not isomorphic";
      }
      out.emit(doc, human.str());
      return sigma ? 0 : 1;
    }

    if (ce->parsed()) {
      auto counts = riesz::census(parse_kind(kind_str), max_size);
      std::ostringstream csv;
      csv << "size,count\n";
      for (auto [n, c] : counts) csv << n << "," << c << "\n";
      json doc;
      for (auto [n, c] : counts) doc[std::to_string(n)] = c;
      out.emit(doc, csv.str());
      return 0;
    }

    if (fx->parsed()) {
      json doc = riesz::emit_fixture(fixture_name);
      out.emit(doc, riesz::dump_stable(doc));
      return 0;
    }
  } catch (const riesz::Error& e) {
    json err;
    err["error"] = riesz::errc_name(e.code());
    err["message"] = e.what();
    std::cerr << riesz::dump_stable(err);
    return 2;
  } catch (const std::exception& e) {
    json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << riesz::dump_stable(err);
    return 2;
  }
  return 2;
}
