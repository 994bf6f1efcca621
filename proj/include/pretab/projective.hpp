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

#ifndef PRETAB_PROJECTIVE_HPP_
#define PRETAB_PROJECTIVE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "pretab/decision.hpp"
#include "pretab/formula.hpp"
#include "pretab/logic.hpp"

namespace pretab {

class NotUnifiableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VariableCheck {
  std::string var;
  MembershipVerdict::Kind verdict;  // of []phi -> (var <-> sigma(var))
};

struct ProjectiveResult {
  Substitution unifier;
  bool unifies = false;
  bool certified = false;  // unifies and every variable check is Valid
  std::vector<VariableCheck> checks;
  /// "guarded", "dzik", "iterated" or "given".
  std::string construction = "given";
  std::string note;
};

/// sigma(phi) in logic and []phi -> (p <-> sigma(p)) in logic for p in Var(phi).
/// Throws BudgetExceededError naming the undecided check.
ProjectiveResult projective_check(Logic logic, const Substitution& sigma, const Formula& phi,
                                  const MemberOptions& options = {});

/// Least ground unifier in canonical order; throws NotUnifiableError.
Substitution canonical_ground_unifier(Logic logic, const Formula& phi,
                                      const MemberOptions& options = {});

/// x -> ([]phi & x) | (<>~phi & gu(x)).
Substitution guarded_substitution(const Formula& phi, const Substitution& gu);

/// x -> []phi -> x when gu(x) is true, []phi & x otherwise.
Substitution dzik_substitution(const Formula& phi, const Substitution& gu);

/// Composition of x -> ([]phi & x) | (<>~phi & v(x)) over every valuation v
/// of Var(phi), repeated `rounds` times. Projective whenever it unifies.
Substitution iterated_substitution(const Formula& phi, int rounds);

ProjectiveResult pm4_projective_unifier(const Formula& phi, const MemberOptions& options = {});
ProjectiveResult pm5_mgu(const Formula& phi, const MemberOptions& options = {});
ProjectiveResult pm1_projective_unifier(const Formula& phi, const MemberOptions& options = {});

/// Dispatch for PM1, PM4, PM5; invalid_argument otherwise.
ProjectiveResult projective_unifier(Logic logic, const Formula& phi,
                                    const MemberOptions& options = {});

}  // namespace pretab

#endif  // PRETAB_PROJECTIVE_HPP_
