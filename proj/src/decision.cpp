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

#include "pretab/decision.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <vector>

namespace pretab {

namespace {

// Chains are grown downwards: the new bottom point sees itself and every
// point above, so its subformula truth vector depends only on its own
// valuation and the truth vector of the point directly above. Two chains
// whose bottoms agree on every subformula extend identically, so the search
// stops once a level produces no unseen truth vector.
MembershipVerdict member_chain(const Formula& phi, int bound, std::uint64_t budget) {
  CompiledFormula cf(phi);
  const auto& code = cf.code();
  const int k = static_cast<int>(cf.vars().size());
  if (k > 24) throw std::invalid_argument("too many variables for membership search");
  const std::uint32_t types = std::uint32_t{1} << k;

  struct Entry {
    int parent;
    std::uint32_t type;
  };
  std::vector<std::string> states;
  std::vector<Entry> entries;
  std::unordered_map<std::string, int> seen;

  auto extend = [&](const std::string* upper, std::uint32_t type) {
    std::string s(code.size(), '\0');
    for (std::size_t i = 0; i < code.size(); ++i) {
      const auto& ins = code[i];
      bool v = false;
      switch (ins.op) {
        case Op::Var: v = (type >> ins.var) & 1U; break;
        case Op::Top: v = true; break;
        case Op::Bot: v = false; break;
        case Op::Not: v = !s[ins.a]; break;
        case Op::And: v = s[ins.a] && s[ins.b]; break;
        case Op::Or: v = s[ins.a] || s[ins.b]; break;
        case Op::Implies: v = !s[ins.a] || s[ins.b]; break;
        case Op::Iff: v = static_cast<bool>(s[ins.a]) == static_cast<bool>(s[ins.b]); break;
        case Op::Box: v = s[ins.a] && (upper == nullptr || (*upper)[i]); break;
        case Op::Diamond: v = s[ins.a] || (upper != nullptr && (*upper)[i]); break;
      }
      s[i] = v ? 1 : 0;
    }
    return s;
  };

  MembershipVerdict verdict;
  std::vector<int> frontier{-1};
  for (int m = 1; m <= bound; ++m) {
    std::vector<int> next;
    for (int parent : frontier) {
      for (std::uint32_t t = 0; t < types; ++t) {
        if (verdict.work >= budget) {
          verdict.kind = MembershipVerdict::Kind::BudgetExceeded;
          verdict.bound_used = m;
          return verdict;
        }
        ++verdict.work;
        std::string s = extend(parent < 0 ? nullptr : &states[parent], t);
        if (seen.count(s)) continue;
        const int id = static_cast<int>(states.size());
        seen.emplace(s, id);
        const bool holds = s[cf.root()] != 0;
        states.push_back(std::move(s));
        entries.push_back({parent, t});
        if (!holds) {
          // Rebuild the chain: world 0 is the new bottom.
          std::vector<std::uint32_t> chain;
          for (int e = id; e >= 0; e = entries[e].parent) chain.push_back(entries[e].type);
          Frame frame = make_frame(Logic::PM1, m);
          Valuation val;
          for (int i = 0; i < k; ++i) {
            WorldSet set(m);
            for (int w = 0; w < m; ++w) {
              if ((chain[w] >> i) & 1U) set.set(w);
            }
            val.emplace(cf.vars()[i], set);
          }
          verdict.kind = MembershipVerdict::Kind::Refuted;
          verdict.bound_used = m;
          verdict.frame_param = m;
          verdict.world = 0;
          verdict.countermodel = FrameModel{std::move(frame), std::move(val)};
          return verdict;
        }
        next.push_back(id);
      }
    }
    verdict.bound_used = m;
    if (next.empty()) break;
    frontier = std::move(next);
  }
  verdict.kind = MembershipVerdict::Kind::Valid;
  return verdict;
}

}  // namespace

std::string to_string(MembershipVerdict::Kind kind) {
  switch (kind) {
    case MembershipVerdict::Kind::Valid: return "Valid";
    case MembershipVerdict::Kind::Refuted: return "Refuted";
    case MembershipVerdict::Kind::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

int default_bound(const Formula& phi) {
  const auto sub = subformulas(phi).size();
  if (sub >= 30) return INT_MAX;
  return static_cast<int>((std::int64_t{1} << sub) + 1);
}

std::optional<int> saturation_size(Logic logic, const Formula& phi) {
  if (logic == Logic::PM1) return std::nullopt;
  // Worlds of one twin class with equal valuations are bisimilar, and
  // dropping one leaves a smaller frame of the same family.
  const auto k = phi.vars().size();
  if (k >= 30) return INT_MAX;
  return 1 << k;
}

MembershipVerdict member(Logic logic, const Formula& phi, const MemberOptions& options) {
  const int bound = options.bound.value_or(default_bound(phi));
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (logic == Logic::PM1) return member_chain(phi, bound, options.budget);

  const int last = std::min(bound, *saturation_size(logic, phi));
  MembershipVerdict verdict;
  for (int m = 1; m <= last; ++m) {
    FrameCheckOptions fo;
    fo.distinct_twins = true;
    fo.budget = options.budget - verdict.work;
    const Frame frame = make_frame(logic, m);
    FrameCheck check = valid_on_frame(frame, phi, fo);
    verdict.work += check.valuations_examined;
    verdict.bound_used = m;
    if (check.status == FrameCheck::Status::BudgetExceeded) {
      verdict.kind = MembershipVerdict::Kind::BudgetExceeded;
      return verdict;
    }
    if (check.status == FrameCheck::Status::Refuted) {
      verdict.kind = MembershipVerdict::Kind::Refuted;
      verdict.frame_param = m;
      verdict.world = check.world;
      verdict.countermodel = FrameModel{frame, *check.witness};
      return verdict;
    }
  }
  verdict.kind = MembershipVerdict::Kind::Valid;
  return verdict;
}

bool is_theorem(Logic logic, const Formula& phi, const MemberOptions& options) {
  const auto verdict = member(logic, phi, options);
  if (verdict.kind == MembershipVerdict::Kind::BudgetExceeded) {
    throw BudgetExceededError("membership budget exceeded in " + to_string(logic) + " for " +
                              phi.str());
  }
  return verdict.valid();
}

bool equivalent(Logic logic, const Formula& phi, const Formula& psi, const MemberOptions& options) {
  if (phi == psi) return true;
  return is_theorem(logic, Formula::iff(phi, psi), options);
}

}  // namespace pretab
