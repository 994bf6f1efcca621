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

#include "pretab/projective.hpp"

#include "pretab/unify.hpp"

namespace pretab {

namespace {

constexpr int kMaxRounds = 3;
constexpr std::uint64_t kMaxImageNodes = 200'000;

using Shape = Substitution (*)(const Formula&, const Substitution&);

// The canonical ground unifier first, then the same shape over the other
// ground unifiers, then iterated compositions.
ProjectiveResult with_fallback(Logic logic, const Formula& phi, Shape shape,
                               const std::string& name, const MemberOptions& options) {
  const Substitution gu = canonical_ground_unifier(logic, phi, options);
  ProjectiveResult first = projective_check(logic, shape(phi, gu), phi, options);
  first.construction = name;
  if (first.certified) return first;
  for (const auto& other : ground_unifiers(logic, phi, options).unifiers) {
    if (other == gu) continue;
    ProjectiveResult r = projective_check(logic, shape(phi, other), phi, options);
    if (r.certified) {
      r.construction = name;
      r.note = "canonical ground unifier failed certification; certified with " + other.str();
      return r;
    }
  }
  for (int rounds = 1; rounds <= kMaxRounds; ++rounds) {
    const Substitution s = iterated_substitution(phi, rounds);
    bool too_big = false;
    for (const auto& [x, f] : s.bindings()) too_big |= f.node_count() > kMaxImageNodes;
    if (too_big) break;
    ProjectiveResult r = projective_check(logic, s, phi, options);
    r.construction = "iterated";
    if (r.certified) {
      r.note = "closed-form candidate failed certification; iterated composition with " +
               std::to_string(rounds) + " round(s) certified";
      return r;
    }
  }
  first.note = "no construction certified";
  return first;
}

}  // namespace

ProjectiveResult projective_check(Logic logic, const Substitution& sigma, const Formula& phi,
                                  const MemberOptions& options) {
  ProjectiveResult out;
  out.unifier = sigma.restricted(phi.vars());
  const auto u = member(logic, sigma.apply(phi), options);
  if (u.kind == MembershipVerdict::Kind::BudgetExceeded) {
    throw BudgetExceededError("budget exceeded checking that the substitution unifies " +
                              phi.str());
  }
  out.unifies = u.valid();
  bool all = true;
  const Formula boxed = Formula::box(phi);
  for (const auto& p : phi.vars()) {
    const auto v = member(
        logic, Formula::implies(boxed, Formula::iff(Formula::var(p), sigma.at(p))), options);
    if (v.kind == MembershipVerdict::Kind::BudgetExceeded) {
      throw BudgetExceededError("budget exceeded on the projectivity check for variable " + p);
    }
    all &= v.valid();
    out.checks.push_back({p, v.kind});
  }
  out.certified = out.unifies && all;
  return out;
}

Substitution canonical_ground_unifier(Logic logic, const Formula& phi,
                                      const MemberOptions& options) {
  const auto sweep = ground_unifiers(logic, phi, options);
  // An undecided assignment may precede the least decided one.
  if (!sweep.undecided.empty()) {
    throw BudgetExceededError("ground sweep left assignments undecided for " + phi.str());
  }
  if (!sweep.unifiers.empty()) return sweep.unifiers.front();
  throw NotUnifiableError(phi.str() + " is not unifiable in " + to_string(logic));
}

Substitution guarded_substitution(const Formula& phi, const Substitution& gu) {
  const Formula boxed = Formula::box(phi);
  const Formula escape = Formula::diamond(Formula::neg(phi));
  Substitution s;
  for (const auto& x : phi.vars()) {
    s.set(x, Formula::disj(Formula::conj(boxed, Formula::var(x)), Formula::conj(escape, gu.at(x))));
  }
  return s;
}

Substitution dzik_substitution(const Formula& phi, const Substitution& gu) {
  const Formula boxed = Formula::box(phi);
  Substitution s;
  for (const auto& x : phi.vars()) {
    const Formula v = Formula::var(x);
    s.set(x, gu.at(x) == Formula::top() ? Formula::implies(boxed, v) : Formula::conj(boxed, v));
  }
  return s;
}

Substitution iterated_substitution(const Formula& phi, int rounds) {
  const auto names = phi.vars();
  const std::vector<std::string> vars(names.begin(), names.end());
  Substitution sigma = Substitution{}.padded(names);
  for (int r = 0; r < rounds; ++r) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << vars.size()); ++code) {
      const Substitution theta = guarded_substitution(phi, ground_substitution(vars, code));
      // sigma <- sigma o theta.
      Substitution next;
      for (const auto& x : vars) next.set(x, simplify(sigma.apply(theta.at(x))));
      sigma = std::move(next);
    }
  }
  return sigma;
}

ProjectiveResult pm4_projective_unifier(const Formula& phi, const MemberOptions& options) {
  return with_fallback(Logic::PM4, phi, guarded_substitution, "guarded", options);
}

ProjectiveResult pm5_mgu(const Formula& phi, const MemberOptions& options) {
  return with_fallback(Logic::PM5, phi, dzik_substitution, "dzik", options);
}

ProjectiveResult pm1_projective_unifier(const Formula& phi, const MemberOptions& options) {
  return with_fallback(Logic::PM1, phi, guarded_substitution, "guarded", options);
}

ProjectiveResult projective_unifier(Logic logic, const Formula& phi, const MemberOptions& options) {
  switch (logic) {
    case Logic::PM1: return pm1_projective_unifier(phi, options);
    case Logic::PM4: return pm4_projective_unifier(phi, options);
    case Logic::PM5: return pm5_mgu(phi, options);
    default: break;
  }
  throw std::invalid_argument(to_string(logic) + " has no projective unifier construction");
}

}  // namespace pretab
