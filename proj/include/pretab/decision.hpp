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

#ifndef PRETAB_DECISION_HPP_
#define PRETAB_DECISION_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pretab/formula.hpp"
#include "pretab/kripke.hpp"
#include "pretab/logic.hpp"

namespace pretab {

struct MemberOptions {
  /// Largest frame size parameter checked; default_bound(phi) when unset.
  std::optional<int> bound;
  /// Work limit (valuations or chain extensions) across all frame sizes.
  std::uint64_t budget = 20'000'000;
};

struct MembershipVerdict {
  enum class Kind { Valid, Refuted, BudgetExceeded };

  Kind kind = Kind::Valid;
  /// Largest size parameter actually needed: the refuting m, or the size
  /// after which no new counter-model shapes can appear, capped by the bound.
  int bound_used = 0;
  /// Refuted only: frame make_frame(logic, frame_param) with the witness.
  int frame_param = 0;
  std::optional<FrameModel> countermodel;
  int world = -1;
  std::uint64_t work = 0;

  bool valid() const { return kind == Kind::Valid; }
  bool refuted() const { return kind == Kind::Refuted; }
};

std::string to_string(MembershipVerdict::Kind kind);

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2^|Sub(phi)| + 1, saturated at INT_MAX.
int default_bound(const Formula& phi);

/// Size parameter beyond which make_frame(logic, m) yields no counter-model
/// that a smaller member of the family lacks; nullopt for PM1, whose chains
/// are searched by a fixpoint instead.
std::optional<int> saturation_size(Logic logic, const Formula& phi);

/// Membership by refutation search over make_frame(logic, m), m ascending.
MembershipVerdict member(Logic logic, const Formula& phi, const MemberOptions& options = {});

/// member(logic, phi <-> psi) is Valid. Throws BudgetExceededError.
bool equivalent(Logic logic, const Formula& phi, const Formula& psi,
                const MemberOptions& options = {});

/// member(...).valid(), throwing BudgetExceededError instead of guessing.
bool is_theorem(Logic logic, const Formula& phi, const MemberOptions& options = {});

}  // namespace pretab

#endif  // PRETAB_DECISION_HPP_
