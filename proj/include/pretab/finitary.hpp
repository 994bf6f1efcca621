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

#ifndef PRETAB_FINITARY_HPP_
#define PRETAB_FINITARY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pretab/charmodel.hpp"
#include "pretab/decision.hpp"
#include "pretab/formula.hpp"
#include "pretab/logic.hpp"
#include "pretab/unify.hpp"

namespace pretab {

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One disjunct of a reduced normal form: for every variable x_i, either x_i
/// or ~x_i, and either <>x_i or ~<>x_i. Bit i of theta1 (theta2) is set iff
/// x_i (<>x_i) occurs positively.
struct RnfDisjunct {
  std::uint64_t theta1 = 0;
  std::uint64_t theta2 = 0;

  /// (t(i,0), t(i,1)) with 0 meaning the positive literal.
  std::pair<int, int> signs(int i) const {
    return {((theta1 >> i) & 1U) ? 0 : 1, ((theta2 >> i) & 1U) ? 0 : 1};
  }
  friend bool operator==(const RnfDisjunct&, const RnfDisjunct&) = default;
};

struct RnfFormula {
  Formula original;
  /// Var(original) in sorted order, then the fresh variables.
  std::vector<std::string> vars;
  std::size_t original_count = 0;
  std::vector<RnfDisjunct> disjuncts;
  /// Subformula (over [] rewritten as ~<>~) and the fresh variable naming it.
  std::vector<std::pair<Formula, std::string>> fresh_var_map;

  /// Conjunction of the literals of disjunct j, over vars.
  Formula disjunct_formula(std::size_t j) const;
  /// The whole disjunction.
  Formula as_formula() const;
  /// Replaces fresh variables by the subformulas they name.
  Formula expand(const Formula& f) const;
};

struct RnfLimits {
  std::size_t max_disjuncts = 4096;
  std::size_t max_vars = 64;
};

/// Reduced normal form: one fresh variable per <>-subformula and per
/// non-variable <>-argument, then every consistent sign pattern on which
/// the boolean skeleton of phi holds.
RnfFormula to_rnf(const Formula& phi, const RnfLimits& limits = {});

/// Ground unifiability of phi and of its reduced normal form agree.
bool unifiability_transfer_check(Logic logic, const Formula& phi,
                                 const MemberOptions& options = {});

/// Carrier of disjunct indices, ascending. j R k iff theta2(k) is a subset
/// of theta2(j).
struct DisjunctModel {
  std::vector<std::size_t> carrier;
};

struct SmOptions {
  std::size_t max_carrier = 12;
  /// Subsets examined before the enumeration reports truncation.
  std::uint64_t max_subsets = 200'000;
  std::size_t max_models = 4096;
};

struct SmEnumeration {
  std::vector<DisjunctModel> models;
  bool truncated = false;
  std::uint64_t examined = 0;
};

/// Conditions (1)-(3) on a carrier.
bool satisfies_conditions(const RnfFormula& rnf, const DisjunctModel& model);

/// Carriers satisfying (1)-(3), ascending size then lexicographic.
SmEnumeration enumerate_disjunct_models(const RnfFormula& rnf, Logic logic,
                                        const SmOptions& options = {});

/// Disjunction over the carrier of phi_j & [](phi_k for j R k), over rnf vars.
Formula gamma(const RnfFormula& rnf, const DisjunctModel& model);

struct Candidate {
  std::optional<Substitution> unifier;
  /// "closed-form" (x -> gamma & the phi_j containing x) or "extension".
  std::string construction;
  std::string diagnostic;
  std::optional<FrameModel> refutation;
};

struct FinitaryOptions {
  MemberOptions member;
  GeneralityOptions generality;
  RnfLimits rnf;
  SmOptions sm;
  CharModelLimits char_limits;
  std::uint64_t extension_budget = 2'000'000;
  /// Extension problems solved while searching for maximal carriers.
  std::uint64_t max_carrier_checks = 20'000;
};

/// Substitution over Var(phi) that is the identity where gamma(model) holds.
/// Tries x -> gamma & (disjunction of the phi_j in the carrier with x in
/// theta1) first, then a valuation of the characteristic model for Var(phi)
/// that is the identity on the points satisfying gamma and makes phi true
/// everywhere. Returned only when it unifies phi.
Candidate candidate_unifier(const RnfFormula& rnf, const DisjunctModel& model, Logic logic,
                            const FinitaryOptions& options = {});

struct CarrierSearch {
  /// Disjuncts realized at some point of the characteristic model, ascending.
  std::vector<std::size_t> realized;
  /// Maximal sets of realized disjuncts admitting an extension, in
  /// discovery order.
  std::vector<DisjunctModel> carriers;
  std::uint64_t checks = 0;
  bool truncated = false;
};

/// Maximal carriers over the disjuncts realized on the characteristic model.
/// Any unifier whose image only realizes disjuncts of a carrier M factors
/// through the candidate for M.
CarrierSearch maximal_carriers(const RnfFormula& rnf, Logic logic,
                               const FinitaryOptions& options = {});

struct CompleteSet {
  std::vector<Substitution> unifiers;
  std::vector<std::string> log;
  std::size_t disjuncts = 0;
  /// Disjunct models found by enumerate_disjunct_models.
  std::size_t models = 0;
  /// Maximal carriers added to close gaps left by a capped enumeration.
  std::size_t carriers = 0;
  std::size_t certified = 0;
  /// The disjunct model enumeration hit a cap.
  bool truncated = false;
};

/// Finite complete set of unifiers for PM2 or PM3; empty iff phi is not
/// unifiable. Candidates come from the disjunct models and from the maximal
/// carriers. Throws CapExceededError when the normal form, the characteristic
/// model or the carrier search exceeds its cap.
CompleteSet complete_set(const Formula& phi, Logic logic, const FinitaryOptions& options = {});

}  // namespace pretab

#endif  // PRETAB_FINITARY_HPP_
