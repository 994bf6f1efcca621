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

#include <algorithm>
#include <map>
#include <set>

#include "cone_search.hpp"
#include "pretab/finitary.hpp"

namespace pretab {

namespace {

bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

int layers_for(Logic logic) {
  if (logic == Logic::PM2) return 2;
  if (logic == Logic::PM3) return 3;
  throw std::invalid_argument("the finitary pipeline is defined for PM2 and PM3");
}

// The characteristic model for Var(phi) with the disjunct realized at each
// point under the identity valuation.
class Realization {
 public:
  Realization(const RnfFormula& rnf, Logic logic, const CharModelLimits& limits)
      : rnf_(rnf),
        cm_(build_char_model(std::vector<std::string>(rnf.vars.begin(),
                                                      rnf.vars.begin() + rnf.original_count),
                             layers_for(logic), limits)),
        search_(cm_.model.frame),
        phi_(rnf.original) {
    const int n = cm_.size();
    std::vector<WorldSet> truth;
    for (std::size_t i = 0; i < rnf.vars.size(); ++i) {
      truth.push_back(i < rnf.original_count
                          ? truth_set(cm_.model, Formula::var(rnf.vars[i]))
                          : truth_set(cm_.model, rnf.fresh_var_map[i - rnf.original_count].first));
    }
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> index;
    for (std::size_t j = 0; j < rnf.disjuncts.size(); ++j) {
      index[{rnf.disjuncts[j].theta1, rnf.disjuncts[j].theta2}] = static_cast<int>(j);
    }
    pattern_.assign(n, -1);
    for (int w = 0; w < n; ++w) {
      std::uint64_t t1 = 0;
      std::uint64_t t2 = 0;
      for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].test(w)) t1 |= std::uint64_t{1} << i;
        if ((WorldSet(truth[i]) &= cm_.model.frame.successors(w)).any()) {
          t2 |= std::uint64_t{1} << i;
        }
      }
      const auto it = index.find({t1, t2});
      if (it != index.end()) pattern_[w] = it->second;
    }
    for (const auto& v : phi_.vars()) {
      slot_.push_back(static_cast<int>(
          std::find(cm_.vars.begin(), cm_.vars.end(), v) - cm_.vars.begin()));
    }
  }

  const CharModel& model() const { return cm_; }
  int pattern(int w) const { return pattern_[w]; }
  int size() const { return cm_.size(); }
  int width() const { return static_cast<int>(cm_.vars.size()); }
  std::size_t disjunct_count() const { return rnf_.disjuncts.size(); }

  std::vector<std::size_t> realized() const {
    std::set<std::size_t> out;
    for (int p : pattern_) {
      if (p >= 0) out.insert(static_cast<std::size_t>(p));
    }
    return {out.begin(), out.end()};
  }

  // Points whose whole cone realizes disjuncts of the carrier: the truth set
  // of gamma on the model.
  std::vector<char> region(const std::vector<char>& in_carrier) const {
    std::vector<char> out(size(), 0);
    for (int w = 0; w < size(); ++w) {
      bool ok = true;
      for (int u : search_.cone(w).points) {
        ok &= pattern_[u] >= 0 && in_carrier[pattern_[u]];
      }
      out[w] = ok;
    }
    return out;
  }

  // Valuation bits that are the identity on `region` and make phi true
  // everywhere, preferring the identity elsewhere too.
  detail::ConeSearch::Outcome extend(const std::vector<char>& region, std::uint64_t budget,
                                     std::vector<unsigned>* bits) {
    const unsigned options = 1U << width();
    std::vector<std::vector<unsigned>> choices(size());
    for (int w = 0; w < size(); ++w) {
      const unsigned id = cm_.clusters[w].valuation;
      choices[w].push_back(id);
      if (region[w]) continue;
      for (unsigned b = 0; b < options; ++b) {
        if (b != id) choices[w].push_back(b);
      }
    }
    auto feasible = [&](int w, unsigned b) {
      const auto& c = search_.cone(w);
      const auto all = search_.cone_sets(w, b, width());
      std::vector<WorldSet> sets;
      for (int s : slot_) sets.push_back(all[s]);
      return compiled_.run_root(c.frame, sets).test(c.self);
    };
    const auto outcome = search_.solve(choices, feasible, budget);
    if (outcome == detail::ConeSearch::Outcome::Found) *bits = search_.bits();
    return outcome;
  }

  // x -> OR of the defining formulas of the points where bit x is set.
  // x -> a formula true exactly where bit x is set.
  Substitution substitution(const std::vector<unsigned>& bits) {
    Substitution s;
    for (int i = 0; i < width(); ++i) {
      WorldSet truth(size());
      for (int w = 0; w < size(); ++w) truth.set(w, (bits[w] >> i) & 1U);
      s.set(cm_.vars[i], express(truth));
    }
    return s;
  }

  // The smallest of a pool formula, the disjunction of defining formulas
  // (or its complement) and `given`, all with truth set `truth`.
  Formula express(const WorldSet& truth, const std::optional<Formula>& given = std::nullopt) {
    if (auto f = compact(truth)) return *f;
    if (delta_.empty()) {
      for (int w = 0; w < size(); ++w) delta_.push_back(cluster_defining_formula(cm_, w));
    }
    std::vector<Formula> in, out;
    for (int w = 0; w < size(); ++w) (truth.test(w) ? in : out).push_back(delta_[w]);
    Formula best = simplify(in.size() <= out.size() ? Formula::disj_all(in)
                                                    : Formula::neg(Formula::disj_all(out)));
    if (given && given->node_count() < best.node_count()) best = *given;
    return best;
  }

  // []~chi where chi is a disjunction of pool formulas false on the
  // upward-closed `region` and seen from every point outside it. Greedy.
  std::optional<Formula> upset_formula(const WorldSet& region) {
    if (pool_.empty()) build_pool();
    if (auto f = compact(region)) return *f;
    const Frame& frame = cm_.model.frame;
    std::vector<std::pair<WorldSet, Formula>> usable;
    for (const auto& [truth, chi] : pool_) {
      WorldSet meet = truth;
      meet &= region;
      if (meet.any() || !truth.any()) continue;
      WorldSet reach(size());
      for (int w = 0; w < size(); ++w) {
        WorldSet seen = truth;
        seen &= frame.successors(w);
        reach.set(w, seen.any());
      }
      usable.emplace_back(std::move(reach), chi);
    }
    WorldSet covered = region;
    std::vector<Formula> parts;
    while (covered.count() < size() && parts.size() < 4) {
      int best = -1;
      int gain = 0;
      for (std::size_t c = 0; c < usable.size(); ++c) {
        WorldSet fresh = usable[c].first;
        fresh |= covered;
        const int g = fresh.count() - covered.count();
        if (g > gain || (g == gain && g > 0 &&
                         usable[c].second.node_count() < usable[best].second.node_count())) {
          best = static_cast<int>(c);
          gain = g;
        }
      }
      if (best < 0) return std::nullopt;
      covered |= usable[best].first;
      parts.push_back(usable[best].second);
    }
    if (covered.count() < size()) return std::nullopt;
    return Formula::box(Formula::neg(Formula::disj_all(parts)));
  }

  // Truth sets of the images of `s` on the model.
  std::vector<WorldSet> image_sets(const Substitution& s) const {
    std::vector<WorldSet> out;
    for (const auto& v : cm_.vars) out.push_back(truth_set(cm_.model, s.at(v)));
    return out;
  }

  // True when specific o general == specific, where `specific` is given by
  // its image sets: then general is more general, with specific itself as
  // the witness.
  bool absorbs(const Substitution& general, const std::vector<WorldSet>& specific) const {
    FrameModel m{cm_.model.frame, {}};
    for (int i = 0; i < width(); ++i) m.valuation[cm_.vars[i]] = specific[i];
    for (int i = 0; i < width(); ++i) {
      if (!(truth_set(m, general.at(cm_.vars[i])) == specific[i])) return false;
    }
    return true;
  }

  // A small formula with the given truth set, if the pool has one. Two
  // formulas over the model's variables are equivalent iff their truth sets
  // on the model agree.
  std::optional<Formula> compact(const WorldSet& truth) {
    if (pool_.empty()) build_pool();
    const auto it = pool_.find(truth);
    if (it == pool_.end()) return std::nullopt;
    return it->second;
  }

  // phi holds everywhere when each variable is true exactly on `sets`.
  bool holds(const std::vector<WorldSet>& sets) const {
    std::vector<WorldSet> ordered;
    for (int s : slot_) ordered.push_back(sets[s]);
    return compiled_.run_root(cm_.model.frame, ordered).count() == size();
  }

 private:
  const RnfFormula& rnf_;
  CharModel cm_;
  detail::ConeSearch search_;
  Formula phi_;
  CompiledFormula compiled_{phi_};
  std::vector<int> slot_;  // model variable index of each compiled variable
  std::vector<int> pattern_;
  std::vector<Formula> delta_;
  std::map<WorldSet, Formula> pool_;

  void build_pool() {
    constexpr std::size_t kCap = 8000;
    constexpr std::uint64_t kNodes = 10;
    std::vector<Formula> all;
    auto offer = [&](const Formula& f) {
      if (all.size() >= kCap || f.node_count() > kNodes) return;
      if (pool_.emplace(truth_set(cm_.model, f), f).second) all.push_back(f);
    };
    offer(Formula::bot());
    offer(Formula::top());
    for (const auto& v : cm_.vars) offer(Formula::var(v));
    std::size_t begin = 0;
    for (int depth = 1; depth <= 3; ++depth) {
      const std::size_t end = all.size();
      for (std::size_t i = begin; i < end; ++i) {
        offer(Formula::neg(all[i]));
        offer(Formula::box(all[i]));
        offer(Formula::diamond(all[i]));
      }
      for (std::size_t i = 0; i < end; ++i) {
        for (std::size_t j = i + 1; j < end; ++j) {
          if (i < begin && j < begin) continue;
          if (all[i].node_count() + all[j].node_count() >= kNodes) continue;
          offer(Formula::conj(all[i], all[j]));
          offer(Formula::disj(all[i], all[j]));
        }
      }
      begin = end;
    }
  }
};

std::vector<char> carrier_mask(const RnfFormula& rnf, const DisjunctModel& model) {
  std::vector<char> mask(rnf.disjuncts.size(), 0);
  for (std::size_t j : model.carrier) mask.at(j) = 1;
  return mask;
}

Candidate certify(Logic logic, const Formula& phi, Substitution sigma, const std::string& how,
                  const MemberOptions& options) {
  Candidate c;
  const auto v = member(logic, sigma.apply(phi), options);
  if (v.valid()) {
    c.unifier = std::move(sigma);
    c.construction = how;
    return c;
  }
  c.diagnostic = how + " candidate " +
                 (v.refuted() ? std::string("refuted") : std::string("undecided within budget"));
  c.refutation = v.countermodel;
  return c;
}

// Candidates with equal truth sets on the model are equivalent, so `memo`
// (when given) caches certification by truth sets.
using Memo = std::map<std::vector<WorldSet>, Candidate>;

Candidate candidate_in(Realization& real, const RnfFormula& rnf, const DisjunctModel& model,
                       Logic logic, const FinitaryOptions& options, Memo* memo = nullptr) {
  const std::vector<char> region = real.region(carrier_mask(rnf, model));
  const Formula& phi = rnf.original;
  const auto vars = phi.vars();
  if (vars.empty()) {
    return certify(logic, phi, Substitution{}, "closed-form", options.member);
  }

  // Closed form: true exactly where gamma and x hold. Checked on the model
  // before the formula is built.
  std::vector<WorldSet> sets;
  for (int i = 0; i < real.width(); ++i) {
    WorldSet s(real.size());
    for (int w = 0; w < real.size(); ++w) {
      if (region[w] && ((real.model().clusters[w].valuation >> i) & 1U)) s.set(w);
    }
    sets.push_back(std::move(s));
  }
  std::string diagnostic;
  if (memo) {
    if (auto it = memo->find(sets); it != memo->end() && it->second.unifier) return it->second;
  }
  if (real.holds(sets)) {
    const Formula g = rnf.expand(gamma(rnf, model));
    Substitution s;
    WorldSet upset(real.size());
    for (int w = 0; w < real.size(); ++w) upset.set(w, region[w] != 0);
    const std::optional<Formula> r = real.upset_formula(upset);
    for (std::size_t i = 0; i < rnf.original_count; ++i) {
      if (r) {
        const Formula x = Formula::var(rnf.vars[i]);
        s.set(rnf.vars[i], real.express(sets[i], simplify(Formula::conj(x, *r))));
        continue;
      }
      std::vector<Formula> with;
      for (std::size_t j : model.carrier) {
        if ((rnf.disjuncts[j].theta1 >> i) & 1U) with.push_back(rnf.disjunct_formula(j));
      }
      s.set(rnf.vars[i],
            real.express(sets[i], simplify(Formula::conj(g, rnf.expand(Formula::disj_all(with))))));
    }
    Candidate c = certify(logic, phi, std::move(s), "closed-form", options.member);
    if (memo) memo->emplace(sets, c);
    if (c.unifier) return c;
    diagnostic = c.diagnostic + "; ";
  }

  std::vector<unsigned> bits;
  switch (real.extend(region, options.extension_budget, &bits)) {
    case detail::ConeSearch::Outcome::Found: break;
    case detail::ConeSearch::Outcome::None: {
      Candidate c;
      c.diagnostic = diagnostic + "no valuation extends the identity on the carrier region";
      return c;
    }
    case detail::ConeSearch::Outcome::Budget: {
      Candidate c;
      c.diagnostic = diagnostic + "extension search budget exceeded";
      return c;
    }
  }
  std::vector<WorldSet> key;
  for (int i = 0; i < real.width(); ++i) {
    WorldSet t(real.size());
    for (int w = 0; w < real.size(); ++w) t.set(w, (bits[w] >> i) & 1U);
    key.push_back(std::move(t));
  }
  if (memo) {
    if (auto it = memo->find(key); it != memo->end()) return it->second;
  }
  Candidate c = certify(logic, phi, real.substitution(bits), "extension", options.member);
  if (!c.unifier) c.diagnostic = diagnostic + c.diagnostic;
  if (memo) memo->emplace(key, c);
  return c;
}

}  // namespace

bool satisfies_conditions(const RnfFormula& rnf, const DisjunctModel& model) {
  const auto& c = model.carrier;
  auto d = [&](std::size_t j) -> const RnfDisjunct& { return rnf.disjuncts.at(j); };
  // (1)
  for (std::size_t j : c) {
    if (!subset(d(j).theta1, d(j).theta2)) return false;
  }
  // (2): <>x holds at j iff x is true at some k with j R k.
  for (std::size_t j : c) {
    std::uint64_t seen = 0;
    for (std::size_t k : c) {
      if (subset(d(k).theta2, d(j).theta2)) seen |= d(k).theta1;
    }
    if (seen != d(j).theta2) return false;
  }
  // (3), over every union of theta2 sets drawn from the carrier.
  std::set<std::uint64_t> unions{0};
  for (std::size_t j : c) {
    std::set<std::uint64_t> next = unions;
    for (std::uint64_t u : unions) next.insert(u | d(j).theta2);
    unions = std::move(next);
  }
  for (std::uint64_t u : unions) {
    const bool covered = std::any_of(c.begin(), c.end(), [&](std::size_t e) {
      return d(e).theta2 == (d(e).theta1 | u);
    });
    if (!covered) return false;
  }
  return true;
}

SmEnumeration enumerate_disjunct_models(const RnfFormula& rnf, Logic logic,
                                        const SmOptions& options) {
  layers_for(logic);
  SmEnumeration out;
  if (rnf.disjuncts.size() > RnfLimits{}.max_disjuncts) {
    throw CapExceededError("too many disjuncts for model enumeration");
  }
  // Disjuncts failing (1) belong to no model.
  std::vector<std::size_t> usable;
  for (std::size_t j = 0; j < rnf.disjuncts.size(); ++j) {
    if (subset(rnf.disjuncts[j].theta1, rnf.disjuncts[j].theta2)) usable.push_back(j);
  }
  const std::size_t top = std::min(options.max_carrier, usable.size());
  for (std::size_t size = 1; size <= top; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (out.examined >= options.max_subsets || out.models.size() >= options.max_models) {
        out.truncated = true;
        return out;
      }
      ++out.examined;
      DisjunctModel m;
      for (std::size_t i : pick) m.carrier.push_back(usable[i]);
      if (satisfies_conditions(rnf, m)) out.models.push_back(std::move(m));
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == usable.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  out.truncated = top < usable.size();
  return out;
}

Formula gamma(const RnfFormula& rnf, const DisjunctModel& model) {
  if (model.carrier.empty()) throw std::invalid_argument("gamma of an empty carrier");
  std::vector<Formula> parts;
  for (std::size_t j : model.carrier) {
    std::vector<Formula> succ;
    for (std::size_t k : model.carrier) {
      if (subset(rnf.disjuncts.at(k).theta2, rnf.disjuncts.at(j).theta2)) {
        succ.push_back(rnf.disjunct_formula(k));
      }
    }
    parts.push_back(Formula::conj(rnf.disjunct_formula(j), Formula::box(Formula::disj_all(succ))));
  }
  return Formula::disj_all(parts);
}

Candidate candidate_unifier(const RnfFormula& rnf, const DisjunctModel& model, Logic logic,
                            const FinitaryOptions& options) {
  if (rnf.original_count == 0) {
    return certify(logic, rnf.original, Substitution{}, "closed-form", options.member);
  }
  Realization real(rnf, logic, options.char_limits);
  return candidate_in(real, rnf, model, logic, options);
}

namespace {

// Maximal extendable sets and minimal non-extendable sets are found in
// turn: a seed outside every known maximal set and containing no known
// minimal conflict is grown or shrunk until one of them is new.
CarrierSearch search_carriers(Realization& real, const FinitaryOptions& options) {
  CarrierSearch out;
  out.realized = real.realized();
  const std::size_t total = real.disjunct_count();
  const std::size_t m = out.realized.size();
  using Set = std::vector<char>;
  std::map<Set, bool> cache;
  bool budget = false;

  auto extendable = [&](const Set& chosen) {
    Set mask(total, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) mask[out.realized[i]] = 1;
    }
    const Set region = real.region(mask);
    const auto it = cache.find(region);
    if (it != cache.end()) return it->second;
    if (out.checks >= options.max_carrier_checks) {
      budget = true;
      return false;
    }
    ++out.checks;
    std::vector<unsigned> bits;
    const auto outcome = real.extend(region, options.extension_budget, &bits);
    if (outcome == detail::ConeSearch::Outcome::Budget) budget = true;
    const bool ok = outcome == detail::ConeSearch::Outcome::Found;
    cache.emplace(region, ok);
    return ok;
  };

  std::vector<Set> maximal;
  std::vector<Set> conflicts;
  // Seed search, preferring inclusion.
  Set seed(m, 0);
  auto find_seed = [&](auto&& self, std::size_t pos) -> bool {
    for (const auto& c : conflicts) {
      bool all = true;
      for (std::size_t i = 0; i < pos && all; ++i) all = !c[i] || seed[i];
      bool rest = false;
      for (std::size_t i = pos; i < m; ++i) rest |= c[i] != 0;
      if (all && !rest) return false;
    }
    for (const auto& a : maximal) {
      bool escaped = false;
      for (std::size_t i = 0; i < pos && !escaped; ++i) escaped = seed[i] && !a[i];
      bool open = false;
      for (std::size_t i = pos; i < m && !open; ++i) open = !a[i];
      if (!escaped && !open) return false;
    }
    if (pos == m) return true;
    for (char v : {1, 0}) {
      seed[pos] = v;
      if (self(self, pos + 1)) return true;
    }
    seed[pos] = 0;
    return false;
  };

  while (!budget && find_seed(find_seed, 0)) {
    Set x = seed;
    if (extendable(x)) {
      for (std::size_t i = 0; i < m && !budget; ++i) {
        if (x[i]) continue;
        x[i] = 1;
        if (!extendable(x)) x[i] = 0;
      }
      maximal.push_back(x);
    } else {
      for (std::size_t i = 0; i < m && !budget; ++i) {
        if (!x[i]) continue;
        x[i] = 0;
        if (extendable(x)) x[i] = 1;
      }
      conflicts.push_back(x);
    }
  }
  for (const auto& a : maximal) {
    DisjunctModel dm;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i]) dm.carrier.push_back(out.realized[i]);
    }
    out.carriers.push_back(std::move(dm));
  }
  out.truncated = budget;
  return out;
}

}  // namespace

CarrierSearch maximal_carriers(const RnfFormula& rnf, Logic logic,
                               const FinitaryOptions& options) {
  Realization real(rnf, logic, options.char_limits);
  return search_carriers(real, options);
}

CompleteSet complete_set(const Formula& phi, Logic logic, const FinitaryOptions& options) {
  layers_for(logic);
  CompleteSet out;
  const auto sweep = ground_unifiers(logic, phi, options.member);
  out.log.push_back("ground unifiers: " + std::to_string(sweep.unifiers.size()) + " of " +
                    std::to_string(sweep.examined));
  if (sweep.unifiers.empty()) {
    if (!sweep.undecided.empty()) {
      throw BudgetExceededError("ground sweep left assignments undecided for " + phi.str());
    }
    out.log.push_back("not unifiable");
    return out;
  }
  if (phi.vars().empty()) {
    out.unifiers.push_back(Substitution{});
    out.certified = 1;
    return out;
  }

  const RnfFormula rnf = to_rnf(phi, options.rnf);
  out.disjuncts = rnf.disjuncts.size();
  out.log.push_back("normal form: " + std::to_string(rnf.vars.size()) + " variables, " +
                    std::to_string(rnf.disjuncts.size()) + " disjuncts");

  std::optional<Realization> real;
  try {
    real.emplace(rnf, logic, options.char_limits);
  } catch (const CharModelTooLarge& e) {
    throw CapExceededError(e.what());
  }
  const SmEnumeration sm = enumerate_disjunct_models(rnf, logic, options.sm);
  out.models = sm.models.size();
  out.truncated = sm.truncated;
  out.log.push_back("disjunct models: " + std::to_string(sm.models.size()) + " of " +
                    std::to_string(sm.examined) + " carriers examined" +
                    (sm.truncated ? " (enumeration cap reached)" : ""));
  const CarrierSearch carriers = search_carriers(*real, options);
  if (carriers.truncated) {
    throw CapExceededError("maximal carrier search exceeded " +
                           std::to_string(options.max_carrier_checks) + " extension problems");
  }
  out.carriers = carriers.carriers.size();
  out.log.push_back("realized disjuncts: " + std::to_string(carriers.realized.size()) +
                    "; maximal carriers: " + std::to_string(carriers.carriers.size()) + " after " +
                    std::to_string(carriers.checks) + " extension problems");

  // Candidates absorbed by an earlier one are dropped as they arrive;
  // minimize_set settles the rest.
  Memo memo;
  struct Kept {
    Substitution unifier;
    std::vector<WorldSet> sets;
  };
  std::vector<Kept> kept;
  std::size_t absorbed = 0;
  auto keep = [&](const Candidate& c) {
    if (!c.unifier) return false;
    ++out.certified;
    Kept k{c.unifier->restricted(phi.vars()), real->image_sets(*c.unifier)};
    for (const auto& o : kept) {
      if (o.sets == k.sets || real->absorbs(o.unifier, k.sets)) {
        ++absorbed;
        return false;
      }
    }
    const auto before = kept.size();
    std::erase_if(kept, [&](const Kept& o) { return real->absorbs(k.unifier, o.sets); });
    absorbed += before - kept.size();
    kept.push_back(std::move(k));
    return true;
  };
  for (const auto& model : carriers.carriers) {
    std::string label = "maximal carrier {";
    for (std::size_t i = 0; i < model.carrier.size(); ++i) {
      label += (i ? "," : "") + std::to_string(model.carrier[i]);
    }
    label += "}: ";
    const Candidate c = candidate_in(*real, rnf, model, logic, options, &memo);
    if (!c.unifier) {
      out.log.push_back(label + "dropped, " + c.diagnostic);
      continue;
    }
    out.log.push_back(label + c.construction + (keep(c) ? ", kept" : ", absorbed"));
  }
  std::size_t dropped = 0;
  std::size_t fresh = 0;
  for (const auto& model : sm.models) {
    const Candidate c = candidate_in(*real, rnf, model, logic, options, &memo);
    if (!c.unifier) ++dropped;
    fresh += keep(c);
  }
  out.log.push_back("disjunct model candidates: " + std::to_string(sm.models.size() - dropped) +
                    " certified, " + std::to_string(dropped) + " dropped, " +
                    std::to_string(fresh) + " kept");
  out.log.push_back("absorbed by another candidate: " + std::to_string(absorbed));
  std::vector<Substitution> found;
  for (auto& k : kept) found.push_back(std::move(k.unifier));
  out.unifiers = minimize_set(logic, found, phi.vars(), options.generality);
  out.log.push_back("minimized: " + std::to_string(found.size()) + " -> " +
                    std::to_string(out.unifiers.size()));
  return out;
}

}  // namespace pretab
