// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every random corpus is drawn from a fixed seed.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "pretab/charmodel.hpp"
#include "pretab/corpus.hpp"
#include "pretab/decision.hpp"
#include "pretab/finitary.hpp"
#include "pretab/kripke.hpp"
#include "pretab/projective.hpp"
#include "pretab/unify.hpp"

using namespace pretab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string all_pass(const std::string& suite) {
  std::string failed;
  for (const auto& e : run_corpus(suite)) {
    if (!e.pass) failed += (failed.empty() ? "" : "; ") + e.name + " (" + e.detail + ")";
  }
  return failed;
}

Outcome suite_outcome(const std::string& suite, const std::string& ok) {
  const std::string failed = all_pass(suite);
  return {failed.empty(), failed.empty() ? ok : "failed: " + failed};
}

std::vector<Formula> draw(std::uint64_t seed, const RandomFormulaOptions& o, std::size_t count,
                          const std::function<bool(const Formula&)>& keep) {
  std::mt19937_64 rng(seed);
  std::vector<Formula> out;
  while (out.size() < count) {
    Formula phi = random_formula(rng, o);
    if (keep(phi)) out.push_back(std::move(phi));
  }
  return out;
}

bool is_constant(const Formula& f) { return f == Formula::top() || f == Formula::bot(); }

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string failed = all_pass("axioms");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "all axioms valid on m <= 6 for the five logics, " << (secs < 60 ? "under" : "over")
    << " a minute";
  return {failed.empty() && secs < 60, failed.empty() ? d.str() : "failed: " + failed};
}

Outcome criterion5() {
  RandomFormulaOptions o;
  o.vars = {"x", "y", "z"};
  o.max_modal_depth = 2;
  o.max_height = 3;
  std::string detail;
  bool pass = true;
  std::uint64_t seed = 500;
  for (Logic logic : {Logic::PM4, Logic::PM5, Logic::PM1}) {
    const auto corpus = draw(seed++, o, 50, [&](const Formula& phi) {
      return !phi.vars().empty() && !ground_unifiers(logic, phi).unifiers.empty();
    });
    int certified = 0, refuted_after_cert = 0, factored = 0, grounds = 0;
    for (const auto& phi : corpus) {
      const auto r = projective_unifier(logic, phi);
      if (!r.certified) {
        std::cout << "  uncertified " << to_string(logic) << ": " << phi << '\n';
        continue;
      }
      ++certified;
      bool all = true;
      for (const auto& gu : ground_unifiers(logic, phi).unifiers) {
        ++grounds;
        const auto v = more_general(logic, r.unifier, gu, phi.vars());
        bool constant = v.more_general() && v.witness;
        if (constant) {
          for (const auto& [var, image] : v.witness->bindings()) constant &= is_constant(image);
        }
        factored += constant;
        all &= constant;
      }
      refuted_after_cert += !all;
    }
    // PM1 has no construction guaranteed to certify; uncertified cases are
    // reported above, but a certified unifier that misses a ground unifier
    // fails every logic.
    const bool ok = refuted_after_cert == 0 && (logic == Logic::PM1 || certified == 50);
    pass &= ok;
    detail += to_string(logic) + " " + std::to_string(certified) + "/50 certified, " +
              std::to_string(factored) + "/" + std::to_string(grounds) +
              " ground unifiers factor; ";
  }
  return {pass, detail};
}

Outcome criterion6() {
  const Formula phi = parse("[]x | []~x");
  const auto cs = complete_set(phi, Logic::PM2);
  bool incomparable = true;
  GeneralityOptions g;
  g.pool_depth = 2;
  g.pool_nodes = 15;
  for (std::size_t i = 0; i < cs.unifiers.size(); ++i) {
    for (std::size_t j = 0; j < cs.unifiers.size(); ++j) {
      if (i != j) {
        incomparable &= !more_general(Logic::PM2, cs.unifiers[i], cs.unifiers[j], phi.vars(), g)
                             .more_general();
      }
    }
  }
  std::string shown;
  for (const auto& u : cs.unifiers) shown += " " + u.str();
  return {cs.unifiers.size() >= 2 && incomparable,
          std::to_string(cs.unifiers.size()) + " members, pairwise NotWithinBudget:" + shown};
}

Outcome criterion7() {
  RandomFormulaOptions o;
  o.max_modal_depth = 2;
  o.max_height = 3;
  std::string detail;
  bool pass = true;
  std::uint64_t seed = 700;
  for (Logic logic : {Logic::PM2, Logic::PM3}) {
    const auto corpus = draw(seed++, o, 100, [](const Formula&) { return true; });
    int ok = 0, unifiable = 0;
    for (const auto& phi : corpus) {
      try {
        ok += unifiability_transfer_check(logic, phi);
      } catch (const std::exception& e) {
        std::cout << "  transfer " << to_string(logic) << " " << phi << ": " << e.what() << '\n';
      }
      unifiable += !ground_unifiers(logic, phi).unifiers.empty();
    }
    pass &= ok == 100;
    detail += to_string(logic) + " " + std::to_string(ok) + "/100 (" + std::to_string(unifiable) +
              " unifiable); ";
  }
  return {pass, detail};
}

Outcome criterion8() {
  struct Case {
    Logic logic;
    int n, layers;
    std::vector<std::string> vars;
    std::uint64_t seed;
  };
  std::string detail;
  bool pass = true;
  for (const Case& c : {Case{Logic::PM2, 2, 2, {"p1", "p2"}, 800},
                        Case{Logic::PM3, 1, 3, {"p1"}, 801},
                        Case{Logic::PM3, 2, 3, {"p1", "p2"}, 802}}) {
    const CharModel cm = build_char_model(c.n, c.layers);
    // The model valuates its own variables p1..pn.
    RandomFormulaOptions o;
    o.vars = c.vars;
    o.max_modal_depth = 2;
    o.max_height = 4;
    // Half theorems, half non-theorems, so both directions are exercised.
    int theorems = 0, others = 0;
    const auto corpus = draw(c.seed, o, 50, [&](const Formula& phi) {
      int& quota = member(c.logic, phi).valid() ? theorems : others;
      return quota < 25 && ++quota > 0;
    });
    int agree = 0, valid = 0;
    for (const auto& phi : corpus) {
      const bool in_logic = member(c.logic, phi).valid();
      const bool in_model = valid_in_char_model(cm, phi);
      agree += in_logic == in_model;
      valid += in_logic;
      if (in_logic != in_model) std::cout << "  disagreement " << to_string(c.logic) << ": " << phi << '\n';
    }
    pass &= agree == 50;
    detail += to_string(c.logic) + " vs T_" + std::to_string(c.n) + "^" +
              std::to_string(c.layers) + " " + std::to_string(agree) + "/50 agree (" +
              std::to_string(valid) + " theorems); ";
  }
  return {pass, detail};
}

Outcome criterion9() {
  bool pass = true;
  int clusters = 0;
  for (int n : {1, 2}) {
    const CharModel cm = build_char_model(n, 2);
    for (int w = 0; w < cm.size(); ++w) {
      ++clusters;
      pass &= truth_set(cm.model, cluster_defining_formula(cm, w)) == WorldSet::of(cm.size(), {w});
    }
  }
  return {pass, std::to_string(clusters) + " clusters of T_1^2 and T_2^2 defined exactly"};
}

// Bounded enumeration of depth <= 1 images: the constants, the literals, and
// [] and <> applied to a literal or to a conjunction or disjunction of two
// literals, within five nodes.
std::vector<Formula> depth_one_pool(const std::set<std::string>& vars) {
  std::vector<Formula> lits{Formula::bot(), Formula::top()};
  for (const auto& v : vars) lits.push_back(Formula::var(v));
  for (const auto& v : vars) lits.push_back(Formula::neg(Formula::var(v)));
  std::vector<Formula> out = lits;
  std::vector<Formula> prop = lits;
  for (std::size_t i = 2; i < lits.size(); ++i) {
    for (std::size_t j = i + 1; j < lits.size(); ++j) {
      prop.push_back(Formula::conj(lits[i], lits[j]));
      prop.push_back(Formula::disj(lits[i], lits[j]));
    }
  }
  for (const auto& p : prop) {
    if (p.node_count() + 1 <= 5) {
      out.push_back(Formula::box(p));
      out.push_back(Formula::diamond(p));
    }
  }
  return out;
}

Outcome criterion10() {
  RandomFormulaOptions o;
  o.max_modal_depth = 2;
  o.max_height = 2;
  std::string detail;
  std::uint64_t cases = 0, nwb = 0;
  std::uint64_t seed = 1000;
  for (Logic logic : {Logic::PM2, Logic::PM3}) {
    const auto corpus = draw(seed++, o, 60, [&](const Formula& phi) {
      return !phi.vars().empty() && !ground_unifiers(logic, phi).unifiers.empty();
    });
    std::uint64_t logic_cases = 0;
    for (const auto& phi : corpus) {
      const auto cs = complete_set(phi, logic);
      const auto pool = depth_one_pool(phi.vars());
      const std::set<std::string> var_set = phi.vars();
      const std::vector<std::string> xs(var_set.begin(), var_set.end());
      std::vector<std::size_t> digit(xs.size(), 0);
      while (true) {
        Substitution s;
        for (std::size_t i = 0; i < xs.size(); ++i) s.set(xs[i], pool[digit[i]]);
        if (is_unifier(logic, s, phi)) {
          ++logic_cases;
          bool factors = false;
          for (const auto& g : cs.unifiers) {
            if (more_general(logic, g, s, var_set).more_general()) {
              factors = true;
              break;
            }
          }
          if (!factors) {
            ++nwb;
            std::cout << "  NotWithinBudget " << to_string(logic) << ": " << phi << " with "
                      << s.str() << '\n';
          }
        }
        std::size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == pool.size()) digit[pos++] = 0;
        if (pos == digit.size()) break;
      }
    }
    cases += logic_cases;
    detail += to_string(logic) + " 60 formulas, " + std::to_string(logic_cases) + " unifiers; ";
  }
  detail += std::to_string(nwb) + " NotWithinBudget";
  return {cases > 0 && nwb * 20 < cases, detail};
}

std::string run_cli_corpus() {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(PRETAB_CLI_PATH " corpus", "r"), pclose);
  if (!pipe) return "";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

Outcome criterion11() {
  const std::string a = run_cli_corpus();
  const std::string b = run_cli_corpus();
  return {!a.empty() && a == b,
          std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  std::cout << std::unitbuf;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite", criterion1},
      {"theoremhood witnesses",
       [] { return suite_outcome("theorems", "L, M, 5 and Grz valid where expected"); }},
      {"separation witnesses",
       [] { return suite_outcome("separations", "least V_1, incomparable U points, X_2"); }},
      {"ground unifiers",
       [] { return suite_outcome("ground", "witness unifiers found, 20 contradictions empty"); }},
      {"projectivity of PM4, PM5, PM1", criterion5},
      {"non-unitarity of PM2", criterion6},
      {"normal form transfer", criterion7},
      {"characteristic model cross-check", criterion8},
      {"cluster definability", criterion9},
      {"completeness at desk scale", criterion10},
      {"determinism", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << r.detail << '\n';
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
