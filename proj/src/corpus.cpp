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

#include "pretab/corpus.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

#include "pretab/charmodel.hpp"
#include "pretab/projective.hpp"

namespace pretab {

namespace {

Formula grow(std::mt19937_64& rng, const RandomFormulaOptions& o, int modal, int height) {
  std::uniform_int_distribution<int> leaf(0, static_cast<int>(o.vars.size()) - 1);
  if (height <= 0) return Formula::var(o.vars[leaf(rng)]);
  const int kinds = modal > 0 ? 8 : 6;
  std::uniform_int_distribution<int> pick(0, kinds - 1);
  auto sub = [&](int m) { return grow(rng, o, m, height - 1); };
  switch (pick(rng)) {
    case 0:
    case 1: return Formula::var(o.vars[leaf(rng)]);
    case 2: return Formula::neg(sub(modal));
    case 3: return Formula::conj(sub(modal), sub(modal));
    case 4: return Formula::disj(sub(modal), sub(modal));
    case 5: return Formula::implies(sub(modal), sub(modal));
    case 6: return Formula::box(sub(modal - 1));
    default: return Formula::diamond(sub(modal - 1));
  }
}

Substitution constants(std::initializer_list<std::pair<const char*, bool>> items) {
  Substitution s;
  for (const auto& [v, b] : items) s.set(v, Formula::constant(b));
  return s;
}

std::string verdict_text(const MembershipVerdict& v) {
  std::string out = to_string(v.kind);
  if (v.refuted()) out += " at m=" + std::to_string(v.frame_param);
  return out;
}

class Runner {
 public:
  explicit Runner(const CorpusOptions& options) : o_(options) {}

  std::vector<CorpusEntry> run(const std::string& suite) {
    if (suite == "axioms") axioms_suite();
    if (suite == "theorems") theorems_suite();
    if (suite == "separations") separations_suite();
    if (suite == "ground") ground_suite();
    if (suite == "negative") negative_suite();
    if (suite == "projective") projective_suite();
    if (suite == "finitary") finitary_suite();
    if (suite == "charmodel") charmodel_suite();
    return std::move(out_);
  }

 private:
  void add(const std::string& suite, const std::string& name, bool pass, std::string detail) {
    out_.push_back({suite, name, pass, std::move(detail)});
  }

  // Exceptions become failing entries rather than aborting the run.
  void guarded(const std::string& suite, const std::string& name,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(suite, name, false, std::string("error: ") + e.what());
    }
  }

  void axioms_suite() {
    for (Logic logic : kAllLogics) {
      const std::string name = to_string(logic) + " axioms on m<=" + std::to_string(o_.max_frame);
      guarded("axioms", name, [&] {
        int checks = 0;
        std::string failed;
        for (int m = 1; m <= o_.max_frame; ++m) {
          const Frame frame = make_frame(logic, m);
          for (const auto& ax : axioms(logic)) {
            ++checks;
            const auto r = valid_on_frame(frame, parse(ax.text));
            if (r.status != FrameCheck::Status::Valid && failed.empty()) {
              failed = ax.name + " at m=" + std::to_string(m);
            }
          }
        }
        add("axioms", name, failed.empty(),
            failed.empty() ? std::to_string(checks) + " frame checks valid" : "fails: " + failed);
      });
    }
  }

  void expect_member(const std::string& suite, Logic logic, const std::string& label,
                     const Formula& phi, bool valid) {
    const std::string name = label + " in " + to_string(logic);
    guarded(suite, name, [&] {
      const auto v = member(logic, phi, o_.member);
      add(suite, (valid ? "" : "not ") + name, valid ? v.valid() : v.refuted(), verdict_text(v));
    });
  }

  void theorems_suite() {
    expect_member("theorems", Logic::PM4, "L", schema::lemmon(), true);
    expect_member("theorems", Logic::PM1, "L", schema::lemmon(), true);
    expect_member("theorems", Logic::PM1, "M", schema::mckinsey(), true);
    expect_member("theorems", Logic::PM4, "M", schema::mckinsey(), true);
    expect_member("theorems", Logic::PM3, "M", schema::mckinsey(), true);
    expect_member("theorems", Logic::PM5, "5", schema::five(), true);
    expect_member("theorems", Logic::PM2, "Grz", schema::grz(), true);
  }

  void separations_suite() {
    guarded("separations", "[]x | []~x refuted in PM2 on the least V_m", [&] {
      const auto v = member(Logic::PM2, parse("[]x | []~x"), o_.member);
      add("separations", "[]x | []~x refuted in PM2 on the least V_m",
          v.refuted() && v.frame_param == 1, verdict_text(v));
    });
    guarded("separations", "L refuted in PM3 with incomparable b, c", [&] {
      const Formula l = schema::lemmon();
      const auto v = member(Logic::PM3, l, o_.member);
      // Root d below b (~x1, x2) and c (x1, ~x2), both below the top a (x1, x2).
      FrameModel model{make_frame(Logic::PM3, 2), {}};
      model.valuation["x1"] = WorldSet::of(4, {2, 3});
      model.valuation["x2"] = WorldSet::of(4, {1, 3});
      const bool root_fails = !eval(model, 0, l);
      const bool others_hold = eval(model, 1, l) && eval(model, 2, l) && eval(model, 3, l);
      const bool incomparable = !model.frame.related(1, 2) && !model.frame.related(2, 1);
      add("separations", "L refuted in PM3 with incomparable b, c",
          v.refuted() && root_fails && others_hold && incomparable,
          verdict_text(v) + "; the two-branch model fails only at the root");
    });
    guarded("separations", "Grz refuted in PM5 on X_2", [&] {
      const auto v = member(Logic::PM5, schema::grz(), o_.member);
      add("separations", "Grz refuted in PM5 on X_2", v.refuted() && v.frame_param == 2,
          verdict_text(v));
    });
  }

  void ground_suite() {
    guarded("ground", "[]x | []~x in PM2 has x -> false", [&] {
      const auto s = ground_unifiers(Logic::PM2, parse("[]x | []~x"), o_.member);
      const bool found = std::find(s.unifiers.begin(), s.unifiers.end(),
                                   constants({{"x", false}})) != s.unifiers.end();
      add("ground", "[]x | []~x in PM2 has x -> false", found,
          std::to_string(s.unifiers.size()) + " ground unifiers");
    });
    guarded("ground", "L in PM3 has x1, x2 -> true", [&] {
      const auto s = ground_unifiers(Logic::PM3, schema::lemmon(), o_.member);
      const bool found =
          std::find(s.unifiers.begin(), s.unifiers.end(),
                    constants({{"x1", true}, {"x2", true}})) != s.unifiers.end();
      add("ground", "L in PM3 has x1, x2 -> true", found,
          std::to_string(s.unifiers.size()) + " ground unifiers");
    });
    guarded("ground", "contradictions have no ground unifier", [&] {
      int nonempty = 0;
      const auto corpus = contradiction_corpus();
      for (const auto& phi : corpus) {
        for (Logic logic : kAllLogics) {
          nonempty += !ground_unifiers(logic, phi, o_.member).unifiers.empty();
        }
      }
      add("ground", "contradictions have no ground unifier", nonempty == 0,
          std::to_string(corpus.size()) + " formulas x 5 logics, " + std::to_string(nonempty) +
              " with a unifier");
    });
  }

  // Ground unifiers are not projective, and the complete set has at least
  // two members, none more general than another.
  void negative_case(Logic logic, const std::string& label, const Formula& phi) {
    const std::string name = label + " has no mgu in " + to_string(logic);
    guarded("negative", name, [&] {
      const auto sweep = ground_unifiers(logic, phi, o_.member);
      bool projective = false;
      for (const auto& gu : sweep.unifiers) {
        projective |= projective_check(logic, gu, phi, o_.member).certified;
      }
      const auto cs = complete_set(phi, logic, o_.finitary);
      bool comparable = false;
      for (std::size_t i = 0; i < cs.unifiers.size(); ++i) {
        for (std::size_t j = 0; j < cs.unifiers.size(); ++j) {
          if (i != j) {
            comparable |= more_general(logic, cs.unifiers[i], cs.unifiers[j], phi.vars(),
                                       o_.generality)
                              .more_general();
          }
        }
      }
      add("negative", name, !projective && cs.unifiers.size() >= 2 && !comparable,
          std::to_string(cs.unifiers.size()) + " incomparable maximal unifiers; no ground "
          "unifier is projective");
    });
  }

  void negative_suite() {
    negative_case(Logic::PM2, "[]x | []~x", parse("[]x | []~x"));
    negative_case(Logic::PM3, "L", schema::lemmon());
    guarded("negative", "identity does not unify []x | []~x in PM2", [&] {
      const auto r = projective_check(Logic::PM2, Substitution{}, parse("[]x | []~x"), o_.member);
      add("negative", "identity does not unify []x | []~x in PM2", !r.unifies && !r.certified,
          r.unifies ? "unifies" : "not a unifier");
    });
  }

  void projective_case(Logic logic, const std::string& text, const std::string& construction) {
    const std::string name = text + " in " + to_string(logic);
    guarded("projective", name, [&] {
      const auto r = projective_unifier(logic, parse(text), o_.member);
      add("projective", name, r.certified && (construction.empty() || r.construction == construction),
          r.construction + ": " + r.unifier.str());
    });
  }

  void projective_suite() {
    projective_case(Logic::PM5, "x", "dzik");
    projective_case(Logic::PM5, "~x", "dzik");
    projective_case(Logic::PM4, "p", "guarded");
    projective_case(Logic::PM4, "[]p | []~p", "iterated");
    projective_case(Logic::PM1, "[]p | []~p", "");
    projective_case(Logic::PM1, "p -> []q", "");
    projective_case(Logic::PM4, "[](x -> y) | <>x", "");
  }

  void finitary_suite() {
    guarded("finitary", "[]x | []~x in PM2", [&] {
      const auto cs = complete_set(parse("[]x | []~x"), Logic::PM2, o_.finitary);
      std::string shown;
      for (const auto& u : cs.unifiers) shown += (shown.empty() ? "" : " ") + u.str();
      add("finitary", "[]x | []~x in PM2", cs.unifiers.size() == 2, shown);
    });
    guarded("finitary", "x & ~x in PM2", [&] {
      const auto cs = complete_set(parse("x & ~x"), Logic::PM2, o_.finitary);
      add("finitary", "x & ~x in PM2", cs.unifiers.empty(), "empty complete set");
    });
    guarded("finitary", "L in PM3 covers the ground unifiers", [&] {
      const Formula l = schema::lemmon();
      const auto cs = complete_set(l, Logic::PM3, o_.finitary);
      const auto sweep = ground_unifiers(Logic::PM3, l, o_.member);
      std::size_t covered = 0;
      for (const auto& gu : sweep.unifiers) {
        for (const auto& u : cs.unifiers) {
          if (more_general(Logic::PM3, u, gu, l.vars(), o_.generality).more_general()) {
            ++covered;
            break;
          }
        }
      }
      add("finitary", "L in PM3 covers the ground unifiers",
          !cs.unifiers.empty() && covered == sweep.unifiers.size(),
          std::to_string(cs.unifiers.size()) + " members cover " + std::to_string(covered) +
              " of " + std::to_string(sweep.unifiers.size()) + " ground unifiers");
    });
    for (const auto& [logic, text] :
         std::vector<std::pair<Logic, std::string>>{{Logic::PM2, "[]x | []~x"},
                                                    {Logic::PM2, "x & ~x"},
                                                    {Logic::PM3, schema::lemmon().str()}}) {
      const std::string name = "unifiability transfers to the normal form of " + text;
      guarded("finitary", name, [&] {
        add("finitary", name, unifiability_transfer_check(logic, parse(text), o_.member),
            to_string(logic));
      });
    }
  }

  void charmodel_suite() {
    for (const auto& [n, layers, size] :
         std::vector<std::tuple<int, int, int>>{{1, 2, 6}, {2, 2, 60}, {1, 3, 6}, {2, 3, 116}}) {
      const std::string name = "T_" + std::to_string(n) + "^" + std::to_string(layers);
      guarded("charmodel", name, [&] {
        const CharModel cm = build_char_model(n, layers);
        int exact = 0;
        for (int w = 0; w < cm.size(); ++w) {
          exact += truth_set(cm.model, cluster_defining_formula(cm, w)) ==
                   WorldSet::of(cm.size(), {w});
        }
        add("charmodel", name, cm.size() == size && exact == cm.size(),
            std::to_string(cm.size()) + " points, " + std::to_string(exact) + " defined exactly");
      });
    }
  }

  const CorpusOptions& o_;
  std::vector<CorpusEntry> out_;
};

}  // namespace

Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options) {
  if (options.vars.empty()) throw std::invalid_argument("random_formula needs a variable");
  return grow(rng, options, options.max_modal_depth, options.max_height);
}

std::vector<Formula> contradiction_corpus() {
  static const char* const kTexts[] = {
      "x & ~x",
      "false",
      "~true",
      "<>false",
      "x <-> ~x",
      "~(x -> x)",
      "[](x & ~x)",
      "<>(x & ~x)",
      "(x | y) & ~x & ~y",
      "[]x & <>~x",
      "x & ~<>x",
      "[]x & ~x",
      "[]x & []~x",
      "<>[]x & []<>~x",
      "(x -> y) & x & ~y",
      "(x <-> y) & (x <-> ~y)",
      "<>(x & y) & []~x",
      "[]x & <>(~x & y)",
      "~(x | ~x)",
      "x & y & ~(x & y)",
  };
  std::vector<Formula> out;
  for (const char* t : kTexts) out.push_back(parse(t));
  return out;
}

const std::vector<std::string>& corpus_suites() {
  static const std::vector<std::string> kSuites = {
      "axioms", "theorems", "separations", "ground", "negative", "projective", "finitary",
      "charmodel"};
  return kSuites;
}

std::vector<CorpusEntry> run_corpus(const std::string& suite, const CorpusOptions& options) {
  const auto& all = corpus_suites();
  if (!suite.empty() && std::find(all.begin(), all.end(), suite) == all.end()) {
    throw std::invalid_argument("unknown corpus suite '" + suite + "'");
  }
  std::vector<CorpusEntry> out;
  for (const auto& s : all) {
    if (!suite.empty() && s != suite) continue;
    auto part = Runner(options).run(s);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

void write_corpus_report(std::ostream& os, const std::vector<CorpusEntry>& entries) {
  int passed = 0;
  for (const auto& e : entries) {
    passed += e.pass;
    os << (e.pass ? "PASS" : "FAIL") << "  " << e.suite << "  " << e.name << "  -- "
       << e.detail << '\n';
  }
  os << passed << " passed, " << entries.size() - passed << " failed\n";
}

}  // namespace pretab
