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

#include <functional>
#include <unordered_map>

#include "pretab/finitary.hpp"

namespace pretab {

namespace {

Formula negate(const Formula& f) {
  switch (f.op()) {
    case Op::Not: return f.lhs();
    case Op::Top: return Formula::bot();
    case Op::Bot: return Formula::top();
    default: return Formula::neg(f);
  }
}

// Rewrites into ~, &, |, <> only.
Formula diamond_form(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Top:
    case Op::Bot: return f;
    case Op::Not: return negate(diamond_form(f.lhs()));
    case Op::And: return Formula::conj(diamond_form(f.lhs()), diamond_form(f.rhs()));
    case Op::Or: return Formula::disj(diamond_form(f.lhs()), diamond_form(f.rhs()));
    case Op::Implies: return Formula::disj(negate(diamond_form(f.lhs())), diamond_form(f.rhs()));
    case Op::Iff: {
      const Formula a = diamond_form(f.lhs());
      const Formula b = diamond_form(f.rhs());
      return Formula::disj(Formula::conj(a, b), Formula::conj(negate(a), negate(b)));
    }
    case Op::Box: return negate(Formula::diamond(negate(diamond_form(f.lhs()))));
    case Op::Diamond: return Formula::diamond(diamond_form(f.lhs()));
  }
  return f;
}

struct DiamondNode {
  Formula node;
  int arg = -1;  // variable index of the argument
  int y = -1;    // variable index naming the node
  bool arg_fresh = false;
};

}  // namespace

Formula RnfFormula::disjunct_formula(std::size_t j) const {
  const RnfDisjunct& d = disjuncts.at(j);
  std::vector<Formula> lits;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Formula x = Formula::var(vars[i]);
    const Formula dx = Formula::diamond(x);
    lits.push_back((d.theta1 >> i) & 1U ? x : Formula::neg(x));
    lits.push_back((d.theta2 >> i) & 1U ? dx : Formula::neg(dx));
  }
  return Formula::conj_all(lits);
}

Formula RnfFormula::as_formula() const {
  std::vector<Formula> parts;
  for (std::size_t j = 0; j < disjuncts.size(); ++j) parts.push_back(disjunct_formula(j));
  return Formula::disj_all(parts);
}

Formula RnfFormula::expand(const Formula& f) const {
  Substitution s;
  for (const auto& [sub, name] : fresh_var_map) s.set(name, sub);
  return s.apply(f);
}

RnfFormula to_rnf(const Formula& phi, const RnfLimits& limits) {
  RnfFormula out;
  out.original = phi;
  const auto names = phi.vars();
  out.vars.assign(names.begin(), names.end());
  out.original_count = out.vars.size();
  std::set<std::string> taken(names.begin(), names.end());

  const Formula body = simplify(diamond_form(simplify(phi)));

  std::unordered_map<std::string, int> var_index;
  for (std::size_t i = 0; i < out.vars.size(); ++i) var_index[out.vars[i]] = static_cast<int>(i);
  auto fresh = [&](const char* base, int n, const Formula& meaning) {
    const std::string name = fresh_name(std::string(base) + std::to_string(n), taken);
    taken.insert(name);
    out.vars.push_back(name);
    out.fresh_var_map.emplace_back(meaning, name);
    if (out.vars.size() > limits.max_vars) {
      throw CapExceededError("normal form needs more than " + std::to_string(limits.max_vars) +
                             " variables");
    }
    return static_cast<int>(out.vars.size()) - 1;
  };

  // <>-nodes, innermost first.
  std::vector<DiamondNode> nodes;
  std::unordered_map<Formula, int, FormulaHash> node_of;
  int z_count = 0;
  int y_count = 0;
  std::function<void(const Formula&)> collect = [&](const Formula& f) {
    if (f.arity() >= 1) collect(f.lhs());
    if (f.arity() == 2) collect(f.rhs());
    if (f.op() != Op::Diamond || node_of.count(f)) return;
    DiamondNode n;
    n.node = f;
    if (f.lhs().is_var()) {
      n.arg = var_index.at(f.lhs().name());
    } else {
      n.arg = fresh("z", ++z_count, f.lhs());
      n.arg_fresh = true;
    }
    n.y = fresh("y", ++y_count, f);
    node_of.emplace(f, static_cast<int>(nodes.size()));
    nodes.push_back(n);
  };
  collect(body);

  std::uint64_t val = 0;
  std::uint64_t dia = 0;
  std::function<bool(const Formula&)> eval = [&](const Formula& f) -> bool {
    switch (f.op()) {
      case Op::Var: return (val >> var_index.at(f.name())) & 1U;
      case Op::Top: return true;
      case Op::Bot: return false;
      case Op::Not: return !eval(f.lhs());
      case Op::And: return eval(f.lhs()) && eval(f.rhs());
      case Op::Or: return eval(f.lhs()) || eval(f.rhs());
      case Op::Diamond: return (val >> nodes[node_of.at(f)].y) & 1U;
      default: break;
    }
    throw std::logic_error("unexpected operator in normal form body");
  };
  auto set_bit = [](std::uint64_t& w, int i, bool v) {
    const std::uint64_t b = std::uint64_t{1} << i;
    w = v ? (w | b) : (w & ~b);
  };

  const int n_orig = static_cast<int>(out.original_count);
  std::function<void(std::size_t)> walk_nodes = [&](std::size_t k) {
    if (k == nodes.size()) {
      if (eval(body)) {
        if (out.disjuncts.size() >= limits.max_disjuncts) {
          throw CapExceededError("normal form exceeds " + std::to_string(limits.max_disjuncts) +
                                 " disjuncts");
        }
        out.disjuncts.push_back({val, dia});
      }
      return;
    }
    const DiamondNode& n = nodes[k];
    auto finish = [&] {
      const bool y = (dia >> n.arg) & 1U;
      set_bit(val, n.y, y);
      set_bit(dia, n.y, y);  // <><>b = <>b
      walk_nodes(k + 1);
    };
    if (!n.arg_fresh) {
      finish();
      return;
    }
    const bool z = eval(n.node.lhs());
    set_bit(val, n.arg, z);
    if (z) {
      set_bit(dia, n.arg, true);
      finish();
    } else {
      for (bool d : {false, true}) {
        set_bit(dia, n.arg, d);
        finish();
      }
    }
  };
  std::function<void(int)> walk_vars = [&](int i) {
    if (i == n_orig) {
      walk_nodes(0);
      return;
    }
    // x false with <>x false or true, or x true (so <>x true).
    for (int option = 0; option < 3; ++option) {
      set_bit(val, i, option == 2);
      set_bit(dia, i, option >= 1);
      walk_vars(i + 1);
    }
  };
  walk_vars(0);
  return out;
}

bool unifiability_transfer_check(Logic logic, const Formula& phi, const MemberOptions& options) {
  if (logic != Logic::PM2 && logic != Logic::PM3) {
    throw std::invalid_argument("transfer check is defined for PM2 and PM3");
  }
  const RnfFormula rnf = to_rnf(phi);
  if (rnf.vars.size() > 20) throw CapExceededError("normal form has too many variables to sweep");
  auto unifiable = [&](const Formula& f) {
    const auto sweep = ground_unifiers(logic, f, options);
    if (!sweep.unifiers.empty()) return true;
    if (!sweep.undecided.empty()) {
      throw BudgetExceededError("ground sweep undecided for " + f.str());
    }
    return false;
  };
  return unifiable(phi) == unifiable(rnf.as_formula());
}

}  // namespace pretab
