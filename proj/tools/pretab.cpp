// Copyright 2026 The pretab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pretab command-line front-end.
//
// Exit codes: 0 valid / unifiable / success, 1 refuted / not unifiable /
// failing corpus entry, 2 budget or cap exceeded, 3 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "pretab/charmodel.hpp"
#include "pretab/corpus.hpp"
#include "pretab/decision.hpp"
#include "pretab/finitary.hpp"
#include "pretab/formula.hpp"
#include "pretab/kripke.hpp"
#include "pretab/logic.hpp"
#include "pretab/projective.hpp"
#include "pretab/unify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pretab;

enum Exit { kOk = 0, kNegative = 1, kBudget = 2, kInput = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::string>& known_keys() {
  static const std::map<std::string, std::string> kKeys = {
      {"logic", "pm1..pm5"},
      {"bound", "largest frame parameter tried by membership"},
      {"budget", "membership work budget"},
      {"generality_depth", "modal depth of generality witnesses"},
      {"generality_nodes", "node count of generality witnesses"},
      {"max_disjuncts", "normal form disjunct cap"},
      {"max_carrier", "largest disjunct model carrier"},
      {"max_subsets", "carrier subsets examined"},
      {"max_models", "disjunct models kept"},
      {"carrier_checks", "extension problems in the maximal carrier search"},
      {"format", "human | json"},
      {"dump_countermodel", "path for the countermodel of check"},
  };
  return kKeys;
}

using Settings = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

void put(Settings& into, const std::string& key, const std::string& value, const std::string& where) {
  if (!known_keys().count(key)) throw InputError("unknown key '" + key + "' in " + where);
  into[key] = value;
}

Settings read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  Settings out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(n) + ": expected key = value");
    }
    put(out, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), path);
  }
  return out;
}

struct RunConfig {
  std::optional<Logic> logic;
  MemberOptions member;
  GeneralityOptions generality;
  FinitaryOptions finitary;
  std::string format = "human";
  std::string dump_countermodel;
};

std::uint64_t positive(const Settings& s, const std::string& key, std::uint64_t fallback) {
  const auto it = s.find(key);
  if (it == s.end()) return fallback;
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    v = std::stoull(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size() || v < 1 || it->second[0] == '-') {
    throw InputError(key + " must be an integer >= 1, got '" + it->second + "'");
  }
  return v;
}

RunConfig make_config(const Settings& s) {
  RunConfig c;
  if (auto it = s.find("logic"); it != s.end()) {
    try {
      c.logic = parse_logic(it->second);
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (s.count("bound")) c.member.bound = static_cast<int>(positive(s, "bound", 1));
  c.member.budget = positive(s, "budget", c.member.budget);
  c.generality.member = c.member;
  c.generality.pool_depth =
      static_cast<int>(positive(s, "generality_depth", c.generality.pool_depth));
  c.generality.pool_nodes =
      static_cast<int>(positive(s, "generality_nodes", c.generality.pool_nodes));
  c.finitary.member = c.member;
  c.finitary.generality = c.generality;
  c.finitary.rnf.max_disjuncts = positive(s, "max_disjuncts", c.finitary.rnf.max_disjuncts);
  c.finitary.sm.max_carrier = positive(s, "max_carrier", c.finitary.sm.max_carrier);
  c.finitary.sm.max_subsets = positive(s, "max_subsets", c.finitary.sm.max_subsets);
  c.finitary.sm.max_models = positive(s, "max_models", c.finitary.sm.max_models);
  c.finitary.max_carrier_checks = positive(s, "carrier_checks", c.finitary.max_carrier_checks);
  if (auto it = s.find("format"); it != s.end()) {
    if (it->second != "human" && it->second != "json") {
      throw InputError("format must be human or json");
    }
    c.format = it->second;
  }
  if (auto it = s.find("dump_countermodel"); it != s.end()) c.dump_countermodel = it->second;
  return c;
}

Logic require_logic(const RunConfig& c) {
  if (!c.logic) throw InputError("--logic is required");
  return *c.logic;
}

Formula parse_input(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
}

json substitution_json(const Substitution& s) {
  json out = json::object();
  for (const auto& [var, image] : s.bindings()) out[var] = image.str();
  return out;
}

Substitution substitution_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object {\"var\": \"formula\"}");
  Substitution s;
  for (const auto& [var, image] : j.items()) {
    if (!image.is_string()) throw InputError(where + ": image of " + var + " is not a string");
    s.set(var, parse_input(image.get<std::string>()));
  }
  return s;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_check(const RunConfig& c, const std::string& text) {
  const Logic logic = require_logic(c);
  const Formula phi = parse_input(text);
  const auto v = member(logic, phi, c.member);
  if (v.refuted() && v.countermodel && !c.dump_countermodel.empty()) {
    std::ofstream out(c.dump_countermodel);
    if (!out) throw InputError("cannot write " + c.dump_countermodel);
    write_model(out, *v.countermodel);
  }
  if (c.format == "json") {
    json j = {{"logic", to_string(logic)}, {"formula", phi.str()}, {"verdict", to_string(v.kind)},
              {"bound", v.bound_used}};
    if (v.refuted()) {
      j["frame_param"] = v.frame_param;
      j["world"] = v.world;
    }
    print(j);
  } else {
    std::cout << to_string(v.kind);
    if (v.refuted()) std::cout << " on m=" << v.frame_param << " at world " << v.world;
    std::cout << '\n';
  }
  if (v.valid()) return kOk;
  return v.refuted() ? kNegative : kBudget;
}

int not_unifiable() {
  print(json{{"unifiable", false}, {"unifiers", json::array()}});
  return kNegative;
}

int cmd_unify(const RunConfig& c, const std::string& text, const std::string& mode) {
  const Logic logic = require_logic(c);
  const Formula phi = parse_input(text);
  const auto sweep = ground_unifiers(logic, phi, c.member);
  if (sweep.unifiers.empty()) {
    if (!sweep.undecided.empty()) throw BudgetExceededError("ground sweep left cases undecided");
    return not_unifiable();
  }
  json j = {{"unifiable", true}};
  if (mode == "ground") {
    json list = json::array();
    for (const auto& gu : sweep.unifiers) list.push_back(substitution_json(gu));
    j["unifiers"] = list;
    j["type"] = {{"kind", "ground"}, {"cardinality", sweep.unifiers.size()}};
    print(j);
    return kOk;
  }
  const bool has_mgu = logic == Logic::PM1 || logic == Logic::PM4 || logic == Logic::PM5;
  if (mode == "projective" && !has_mgu) {
    throw InputError("projective mode needs pm1, pm4 or pm5");
  }
  if (has_mgu) {
    const auto r = projective_unifier(logic, phi, c.member);
    j["unifiers"] = json::array({substitution_json(r.unifier)});
    j["type"] = {{"kind", "mgu"}, {"cardinality", 1}};
    j["certified"] = r.certified;
    j["construction"] = r.construction;
    if (mode == "projective") {
      json checks = json::array();
      for (const auto& ch : r.checks) {
        checks.push_back({{"var", ch.var}, {"verdict", to_string(ch.verdict)}});
      }
      j["checks"] = checks;
      if (!r.note.empty()) j["note"] = r.note;
    }
    print(j);
    return r.certified ? kOk : kBudget;
  }
  const auto cs = complete_set(phi, logic, c.finitary);
  json list = json::array();
  for (const auto& u : cs.unifiers) list.push_back(substitution_json(u));
  j["unifiers"] = list;
  j["type"] = {{"kind", "complete-set"}, {"cardinality", cs.unifiers.size()}};
  print(j);
  return kOk;
}

int cmd_rnf(const RunConfig& c, const std::string& text) {
  const auto r = to_rnf(parse_input(text), c.finitary.rnf);
  if (c.format == "json") {
    json fresh = json::object();
    for (const auto& [sub, name] : r.fresh_var_map) fresh[name] = sub.str();
    json disjuncts = json::array();
    for (std::size_t j = 0; j < r.disjuncts.size(); ++j) {
      disjuncts.push_back(r.disjunct_formula(j).str());
    }
    print(json{{"vars", r.vars}, {"fresh", fresh}, {"disjuncts", disjuncts}});
    return kOk;
  }
  for (const auto& [sub, name] : r.fresh_var_map) std::cout << name << " := " << sub << '\n';
  std::cout << r.as_formula() << '\n';
  return kOk;
}

int cmd_complete_set(const RunConfig& c, const std::string& text) {
  const Logic logic = require_logic(c);
  const auto cs = complete_set(parse_input(text), logic, c.finitary);
  json list = json::array();
  for (const auto& u : cs.unifiers) list.push_back(substitution_json(u));
  print(json{{"logic", to_string(logic)},
             {"unifiable", !cs.unifiers.empty()},
             {"unifiers", list},
             {"disjuncts", cs.disjuncts},
             {"models", cs.models},
             {"carriers", cs.carriers},
             {"certified", cs.certified},
             {"truncated", cs.truncated},
             {"log", cs.log}});
  return cs.unifiers.empty() ? kNegative : kOk;
}

int cmd_charmodel(int n, int layers, const std::string& dump) {
  const CharModel cm = build_char_model(n, layers);
  if (dump.empty()) {
    write_char_model(std::cout, cm);
    return kOk;
  }
  std::ofstream out(dump);
  if (!out) throw InputError("cannot write " + dump);
  write_char_model(out, cm);
  std::cout << cm.size() << " points written to " << dump << '\n';
  return kOk;
}

int cmd_corpus(const RunConfig& c, const std::string& suite) {
  CorpusOptions o;
  o.member = c.member;
  o.generality = c.generality;
  o.finitary = c.finitary;
  std::vector<CorpusEntry> entries;
  try {
    entries = run_corpus(suite, o);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  write_corpus_report(std::cout, entries);
  for (const auto& e : entries) {
    if (!e.pass) return kNegative;
  }
  return kOk;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_compare(const RunConfig& c, const std::string& general_path,
                const std::string& specific_path) {
  const Logic logic = require_logic(c);
  const Substitution general = substitution_from_json(read_json(general_path), general_path);
  const Substitution specific = substitution_from_json(read_json(specific_path), specific_path);
  std::set<std::string> domain;
  for (const auto& [v, f] : general.bindings()) domain.insert(v);
  for (const auto& [v, f] : specific.bindings()) domain.insert(v);
  const auto v = more_general(logic, general, specific, domain, c.generality);
  json j = {{"more_general", v.more_general()},
            {"verdict", v.more_general() ? "MoreGeneral" : "NotWithinBudget"}};
  if (v.witness) j["witness"] = substitution_json(*v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  print(j);
  return v.more_general() ? kOk : kNegative;
}

int run(int argc, char** argv) {
  CLI::App app{"Unification and membership for the pretabular logics PM1 to PM5 over S4"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");
  app.footer(
      "Exit codes: 0 valid/unifiable/ok, 1 refuted/not unifiable/corpus failure,\n"
      "2 budget or cap exceeded, 3 invalid input.\n"
      "Settings: flags override the --config file, which overrides PRETAB_BOUND,\n"
      "which overrides built-in defaults. Config keys (key = value per line):\n"
      "  logic bound budget generality_depth generality_nodes max_disjuncts\n"
      "  max_carrier max_subsets max_models carrier_checks format dump_countermodel");

  std::string config_path;
  Settings flags;
  auto flag = [&](CLI::App* on, const std::string& name, const std::string& key,
                  const std::string& help) {
    on->add_option_function<std::string>(
        name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
  };
  app.add_option("--config", config_path, "Flat key = value settings file");
  flag(&app, "--bound", "bound", "Largest frame parameter (overrides PRETAB_BOUND)");
  flag(&app, "--budget", "budget", "Membership work budget");
  flag(&app, "--format", "format", "human | json");

  std::string formula, mode = "best", suite, general_path, specific_path, dump;
  int n = 1, layers = 2;

  auto* check = app.add_subcommand("check", "Membership of a formula in a logic");
  flag(check, "--logic", "logic", "pm1..pm5");
  flag(check, "--dump-countermodel", "dump_countermodel", "Write the countermodel here");
  check->add_option("formula", formula, "Formula")->required();

  auto* unify = app.add_subcommand("unify", "Unifiers as JSON");
  flag(unify, "--logic", "logic", "pm1..pm5");
  unify->add_option("--mode", mode, "ground | best | projective")
      ->check(CLI::IsMember({"ground", "best", "projective"}));
  flag(unify, "--generality-depth", "generality_depth", "Witness modal depth");
  flag(unify, "--generality-nodes", "generality_nodes", "Witness node count");
  unify->add_option("formula", formula, "Formula")->required();

  auto* rnf = app.add_subcommand("rnf", "Reduced normal form");
  rnf->add_option("formula", formula, "Formula")->required();

  std::vector<std::string> caps;
  auto* complete = app.add_subcommand("complete-set", "Complete unifier set for pm2 or pm3");
  flag(complete, "--logic", "logic", "pm2 | pm3");
  complete->add_option("--caps", caps, "key=value caps, e.g. max_carrier=8 max_subsets=1000");
  complete->add_option("formula", formula, "Formula")->required();

  auto* charmodel = app.add_subcommand("charmodel", "Characteristic model T_n^layers");
  charmodel->add_option("--n", n, "Variables")->check(CLI::Range(1, 8));
  charmodel->add_option("--layers", layers, "Layers")->check(CLI::Range(2, 3));
  charmodel->add_option("--dump", dump, "Output path (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "Built-in example and property corpus");
  corpus->add_option("--suite", suite, "One suite; all when omitted");

  auto* compare = app.add_subcommand("compare", "Whether one substitution is more general");
  flag(compare, "--logic", "logic", "pm1..pm5");
  flag(compare, "--generality-depth", "generality_depth", "Witness modal depth");
  flag(compare, "--generality-nodes", "generality_nodes", "Witness node count");
  compare->add_option("general", general_path, "JSON substitution file")->required();
  compare->add_option("specific", specific_path, "JSON substitution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    Settings s;
    if (const char* env = std::getenv("PRETAB_BOUND")) put(s, "bound", env, "PRETAB_BOUND");
    if (!config_path.empty()) {
      for (const auto& [k, v] : read_config(config_path)) s[k] = v;
    }
    for (const auto& kv : caps) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--caps expects key=value, got " + kv);
      put(flags, kv.substr(0, eq), kv.substr(eq + 1), "--caps");
    }
    for (const auto& [k, v] : flags) s[k] = v;
    const RunConfig c = make_config(s);

    if (*check) return cmd_check(c, formula);
    if (*unify) return cmd_unify(c, formula, mode);
    if (*rnf) return cmd_rnf(c, formula);
    if (*complete) return cmd_complete_set(c, formula);
    if (*charmodel) return cmd_charmodel(n, layers, dump);
    if (*corpus) return cmd_corpus(c, suite);
    if (*compare) return cmd_compare(c, general_path, specific_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const NotUnifiableError&) {
    return not_unifiable();
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CharModelTooLarge& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
