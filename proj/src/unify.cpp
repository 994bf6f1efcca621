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

#include "pretab/unify.hpp"

#include "cone_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace pretab {

Substitution ground_substitution(const std::vector<std::string>& vars, std::uint64_t code) {
  Substitution s;
  const std::size_t k = vars.size();
  for (std::size_t i = 0; i < k; ++i) {
    s.set(vars[i], Formula::constant((code >> (k - 1 - i)) & 1U));
  }
  return s;
}

GroundSweep ground_unifiers(Logic logic, const Formula& phi, const MemberOptions& options) {
  const auto names = phi.vars();
  const std::vector<std::string> vars(names.begin(), names.end());
  if (vars.size() > 24) throw std::invalid_argument("too many variables for a ground sweep");
  GroundSweep out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << vars.size()); ++code) {
    Substitution s = ground_substitution(vars, code);
    ++out.examined;
    const auto verdict = member(logic, s.apply(phi), options);
    if (verdict.kind == MembershipVerdict::Kind::BudgetExceeded) {
      out.undecided.push_back(std::move(s));
    } else if (verdict.valid()) {
      out.unifiers.push_back(std::move(s));
    }
  }
  return out;
}

bool is_unifier(Logic logic, const Substitution& sigma, const Formula& phi,
                const MemberOptions& options) {
  return is_theorem(logic, sigma.apply(phi), options);
}

namespace {

using Fingerprint = std::vector<WorldSet>;

// Small family models with fixed pseudo-random valuations. Equivalent
// formulas always agree on them, so unequal fingerprints rule out a
// candidate before any membership call.
class Probe {
 public:
  Probe(Logic logic, const std::set<std::string>& vars) {
    std::mt19937 rng(0x5eed);
    for (int m = 1; m <= 4; ++m) {
      const Frame f = make_frame(logic, m);
      for (int rep = 0; rep < 6; ++rep) {
        Valuation v;
        for (const auto& x : vars) {
          WorldSet s(f.size());
          for (int w = 0; w < f.size(); ++w) s.set(w, rng() & 1U);
          v.emplace(x, s);
        }
        models_.push_back(FrameModel{f, std::move(v)});
      }
    }
  }

  const std::vector<FrameModel>& models() const { return models_; }

  Fingerprint of(const Formula& f) const {
    Fingerprint out;
    out.reserve(models_.size());
    for (const auto& m : models_) out.push_back(truth_set(m, f));
    return out;
  }

  // Fingerprint of body[x := images(x)] without building the formula.
  Fingerprint composed(const CompiledFormula& body,
                       const std::map<std::string, const Fingerprint*>& images) const {
    Fingerprint out;
    out.reserve(models_.size());
    std::vector<WorldSet> sets(body.vars().size());
    for (std::size_t i = 0; i < models_.size(); ++i) {
      for (std::size_t v = 0; v < body.vars().size(); ++v) {
        auto it = images.find(body.vars()[v]);
        if (it != images.end()) {
          sets[v] = (*it->second)[i];
        } else {
          auto vt = models_[i].valuation.find(body.vars()[v]);
          sets[v] = vt != models_[i].valuation.end() ? vt->second
                                                      : WorldSet(models_[i].frame.size());
        }
      }
      out.push_back(body.run_root(models_[i].frame, sets));
    }
    return out;
  }

 private:
  std::vector<FrameModel> models_;
};

class GeneralitySearch {
 public:
  GeneralitySearch(Logic logic, const Substitution& general, const Substitution& specific,
                   const std::set<std::string>& domain, const GeneralityOptions& options)
      : logic_(logic),
        general_(general),
        specific_(specific),
        domain_(domain.begin(), domain.end()),
        options_(options) {
    const auto xs = general.range_vars(domain);
    xs_.assign(xs.begin(), xs.end());
    const auto ys = specific.range_vars(domain);
    ys_.assign(ys.begin(), ys.end());
    std::set<std::string> universe = xs;
    universe.insert(ys.begin(), ys.end());
    probe_.emplace(logic, universe);
    for (const auto& p : domain_) {
      bodies_.emplace_back(general.at(p));
      targets_.push_back(probe_->of(specific.at(p)));
    }
  }

  GeneralityVerdict run() {
    if (auto v = try_constants()) return *v;
    if (auto v = try_direct()) return *v;
    if (options_.semantic && (logic_ == Logic::PM2 || logic_ == Logic::PM3)) {
      if (auto v = try_semantic()) return *v;
    }
    if (auto v = try_pool()) return *v;
    GeneralityVerdict out;
    out.note = "no witness within the search budget" + notes_;
    return out;
  }

 private:
  bool matches(const std::map<std::string, const Fingerprint*>& images) const {
    for (std::size_t j = 0; j < bodies_.size(); ++j) {
      if (probe_->composed(bodies_[j], images) != targets_[j]) return false;
    }
    return true;
  }

  // Exact check of sigma2 o general == specific on the domain.
  bool certify(const Substitution& sigma2) {
    try {
      for (const auto& p : domain_) {
        if (!equivalent(logic_, sigma2.apply(general_.at(p)), specific_.at(p), options_.member)) {
          return false;
        }
      }
      return true;
    } catch (const BudgetExceededError&) {
      notes_ += "; membership budget exceeded while certifying";
      return false;
    }
  }

  std::optional<GeneralityVerdict> found(Substitution sigma2, const std::string& how) {
    GeneralityVerdict out;
    out.kind = GeneralityVerdict::Kind::MoreGeneral;
    out.witness = std::move(sigma2);
    out.note = how;
    return out;
  }

  std::optional<GeneralityVerdict> try_constants() {
    if (xs_.size() > 12) {
      notes_ += "; too many variables for the constant stage";
      return std::nullopt;
    }
    const Fingerprint top = probe_->of(Formula::top());
    const Fingerprint bot = probe_->of(Formula::bot());
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << xs_.size()); ++code) {
      std::map<std::string, const Fingerprint*> images;
      for (std::size_t i = 0; i < xs_.size(); ++i) {
        images[xs_[i]] = ((code >> (xs_.size() - 1 - i)) & 1U) ? &top : &bot;
      }
      if (!matches(images)) continue;
      Substitution s = ground_substitution(xs_, code);
      if (certify(s)) return found(std::move(s), "constant witness");
    }
    return std::nullopt;
  }

  // sigma2 = specific on the range of general; succeeds whenever general
  // fixes specific (specific o general == specific), as projective
  // unifiers do.
  std::optional<GeneralityVerdict> try_direct() {
    Substitution s;
    std::vector<Fingerprint> fps;
    fps.reserve(xs_.size());
    std::map<std::string, const Fingerprint*> images;
    for (const auto& x : xs_) {
      s.set(x, specific_.at(x));
      fps.push_back(probe_->of(specific_.at(x)));
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) images[xs_[i]] = &fps[i];
    if (matches(images) && certify(s)) return found(std::move(s), "composition witness");
    return std::nullopt;
  }

  std::optional<GeneralityVerdict> try_pool();
  std::optional<GeneralityVerdict> try_semantic();

  Logic logic_;
  const Substitution& general_;
  const Substitution& specific_;
  std::vector<std::string> domain_;
  const GeneralityOptions& options_;
  std::vector<std::string> xs_;
  std::vector<std::string> ys_;
  std::optional<Probe> probe_;
  std::vector<CompiledFormula> bodies_;
  std::vector<Fingerprint> targets_;
  std::string notes_;
};

std::optional<GeneralityVerdict> GeneralitySearch::try_pool() {
  // Formulas over the range of `specific`, by depth, deduplicated by
  // fingerprint.
  std::vector<Formula> pool;
  std::vector<Fingerprint> pool_fp;
  std::set<Fingerprint> seen;
  auto offer = [&](const Formula& f) {
    if (pool.size() >= options_.pool_cap) return;
    if (f.node_count() > static_cast<std::uint64_t>(options_.pool_nodes)) return;
    Fingerprint fp = probe_->of(f);
    if (!seen.insert(fp).second) return;
    pool.push_back(f);
    pool_fp.push_back(std::move(fp));
  };
  offer(Formula::bot());
  offer(Formula::top());
  for (const auto& y : ys_) offer(Formula::var(y));
  std::size_t level_begin = 0;
  for (int d = 1; d <= options_.pool_depth && pool.size() < options_.pool_cap; ++d) {
    const std::size_t level_end = pool.size();
    const std::vector<Formula> prev(pool.begin(), pool.end());
    for (std::size_t i = level_begin; i < level_end; ++i) {
      offer(Formula::neg(prev[i]));
      offer(Formula::box(prev[i]));
      offer(Formula::diamond(prev[i]));
    }
    for (std::size_t i = 0; i < level_end; ++i) {
      for (std::size_t j = 0; j < level_end; ++j) {
        if (i < level_begin && j < level_begin) continue;
        offer(Formula::conj(prev[i], prev[j]));
        offer(Formula::disj(prev[i], prev[j]));
        offer(Formula::implies(prev[i], prev[j]));
      }
    }
    level_begin = level_end;
  }

  const std::size_t k = xs_.size();
  std::vector<std::size_t> digits(k, 0);
  std::uint64_t tried = 0;
  while (true) {
    if (tried++ >= options_.combination_cap) {
      notes_ += "; syntactic combination cap reached";
      return std::nullopt;
    }
    std::map<std::string, const Fingerprint*> images;
    for (std::size_t i = 0; i < k; ++i) images[xs_[i]] = &pool_fp[digits[i]];
    if (matches(images)) {
      Substitution s;
      for (std::size_t i = 0; i < k; ++i) s.set(xs_[i], pool[digits[i]]);
      if (certify(s)) return found(std::move(s), "syntactic witness");
    }
    std::size_t pos = 0;
    while (pos < k && ++digits[pos] == pool.size()) digits[pos++] = 0;
    if (pos == k) break;
  }
  notes_ += "; syntactic pool exhausted";
  return std::nullopt;
}

// On the characteristic model T every point is definable, and two formulas
// over Var(specific) are equivalent in the logic iff their truth sets in T
// agree. A witness therefore exists iff some assignment of point sets to
// the range variables of `general` makes each general(p) true exactly where
// specific(p) is. The truth of general(p) at a point depends only on the
// point's cone, so points are filled from the top down.
std::optional<GeneralityVerdict> GeneralitySearch::try_semantic() {
  if (xs_.size() > 10) {
    notes_ += "; too many variables for the semantic stage";
    return std::nullopt;
  }
  std::optional<CharModel> cm;
  try {
    cm.emplace(build_char_model(ys_, logic_ == Logic::PM2 ? 2 : 3, options_.char_limits));
  } catch (const CharModelTooLarge&) {
    notes_ += "; characteristic model too large";
    return std::nullopt;
  }
  const int n = cm->size();
  std::vector<WorldSet> target;
  for (const auto& p : domain_) target.push_back(truth_set(cm->model, specific_.at(p)));

  std::map<std::string, int> xindex;
  for (std::size_t i = 0; i < xs_.size(); ++i) xindex[xs_[i]] = static_cast<int>(i);

  detail::ConeSearch search(cm->model.frame);
  const int width = static_cast<int>(xs_.size());
  auto feasible = [&](int w, unsigned b) {
    const auto& c = search.cone(w);
    const auto all = search.cone_sets(w, b, width);
    for (std::size_t j = 0; j < bodies_.size(); ++j) {
      const auto& body = bodies_[j];
      std::vector<WorldSet> sets;
      sets.reserve(body.vars().size());
      for (const auto& v : body.vars()) sets.push_back(all[xindex.at(v)]);
      if (body.run_root(c.frame, sets).test(c.self) != target[j].test(w)) return false;
    }
    return true;
  };
  std::vector<unsigned> every(std::size_t{1} << xs_.size());
  std::iota(every.begin(), every.end(), 0U);
  const std::vector<std::vector<unsigned>> choices(n, every);
  switch (search.solve(choices, feasible, options_.semantic_budget)) {
    case detail::ConeSearch::Outcome::Budget:
      notes_ += "; semantic search budget exceeded";
      return std::nullopt;
    case detail::ConeSearch::Outcome::None: {
      GeneralityVerdict out;
      out.refuted = true;
      out.note = "no witness exists: no valuation of the characteristic model matches";
      return out;
    }
    case detail::ConeSearch::Outcome::Found: break;
  }
  const auto& bits = search.bits();

  {
    std::vector<Formula> delta(n);
    for (int w = 0; w < n; ++w) delta[w] = cluster_defining_formula(*cm, w);
    Substitution s;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      std::vector<Formula> in, out;
      for (int w = 0; w < n; ++w) ((bits[w] >> i) & 1U ? in : out).push_back(delta[w]);
      s.set(xs_[i], in.size() <= out.size() ? Formula::disj_all(in)
                                            : Formula::neg(Formula::disj_all(out)));
    }
    if (certify(s)) return found(std::move(s), "characteristic-model witness");
    notes_ += "; characteristic-model witness failed certification";
    return std::nullopt;
  }

}

}  // namespace

GeneralityVerdict more_general(Logic logic, const Substitution& general,
                               const Substitution& specific, const std::set<std::string>& domain,
                               const GeneralityOptions& options) {
  GeneralitySearch search(logic, general, specific, domain, options);
  return search.run();
}

std::vector<Substitution> minimize_set(Logic logic, const std::vector<Substitution>& set,
                                       const std::set<std::string>& domain,
                                       const GeneralityOptions& options) {
  const std::size_t n = set.size();
  // le[i][j]: set[j] is at least as general as set[i].
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) le[i][j] = more_general(logic, set[j], set[i], domain, options).more_general();
    }
  }
  std::vector<Substitution> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j) {
      dominated = j != i && le[i][j] && (!le[j][i] || j < i);
    }
    if (!dominated) out.push_back(set[i]);
  }
  return out;
}

}  // namespace pretab
