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

#ifndef PRETAB_UNIFY_HPP_
#define PRETAB_UNIFY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pretab/charmodel.hpp"
#include "pretab/decision.hpp"
#include "pretab/formula.hpp"
#include "pretab/logic.hpp"

namespace pretab {

/// Ground substitution for sorted `vars`, bit (k-1-i) of `code` giving vars[i]
/// (first variable most significant, false before true).
Substitution ground_substitution(const std::vector<std::string>& vars, std::uint64_t code);

struct GroundSweep {
  std::vector<Substitution> unifiers;   // canonical order
  std::vector<Substitution> undecided;  // membership budget ran out
  std::uint64_t examined = 0;
};

/// All {true,false}-substitutions of Var(phi) that unify phi in `logic`.
GroundSweep ground_unifiers(Logic logic, const Formula& phi, const MemberOptions& options = {});

/// sigma(phi) in logic; throws BudgetExceededError when undecided.
bool is_unifier(Logic logic, const Substitution& sigma, const Formula& phi,
                const MemberOptions& options = {});

struct GeneralityOptions {
  MemberOptions member;
  int pool_depth = 2;
  int pool_nodes = 15;
  std::size_t pool_cap = 600;
  std::uint64_t combination_cap = 200'000;
  /// Exact search on the characteristic model for PM2/PM3.
  bool semantic = true;
  std::uint64_t semantic_budget = 5'000'000;
  CharModelLimits char_limits;
};

struct GeneralityVerdict {
  enum class Kind { MoreGeneral, NotWithinBudget };
  Kind kind = Kind::NotWithinBudget;
  /// sigma2 with sigma2(general(p)) equivalent to specific(p) on the domain.
  std::optional<Substitution> witness;
  /// Which search found the witness, or why none was found.
  std::string note;
  /// NotWithinBudget only: an exhaustive search showed no witness exists.
  bool refuted = false;

  bool more_general() const { return kind == Kind::MoreGeneral; }
};

/// Whether `general` is at least as general as `specific` on `domain`
/// (specific = sigma2 o general up to equivalence in `logic`).
GeneralityVerdict more_general(Logic logic, const Substitution& general,
                               const Substitution& specific, const std::set<std::string>& domain,
                               const GeneralityOptions& options = {});

/// Drops every member that is at most as general as another; among
/// equally general members the earliest is kept.
std::vector<Substitution> minimize_set(Logic logic, const std::vector<Substitution>& set,
                                       const std::set<std::string>& domain,
                                       const GeneralityOptions& options = {});

}  // namespace pretab

#endif  // PRETAB_UNIFY_HPP_
