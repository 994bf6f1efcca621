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

#ifndef PRETAB_FORMULA_HPP_
#define PRETAB_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pretab {

enum class Op : std::uint8_t {
  Var,
  Top,
  Bot,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Box,
  Diamond,
};

struct FormulaNode;

/// Immutable modal formula. Copies share structure; equality is structural.
class Formula {
 public:
  /// Default-constructed formula is Top.
  Formula();

  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula constant(bool value) { return value ? top() : bot(); }
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula diamond(Formula a);

  /// Left-folded conjunction; empty list gives Top.
  static Formula conj_all(const std::vector<Formula>& parts);
  /// Left-folded disjunction; empty list gives Bot.
  static Formula disj_all(const std::vector<Formula>& parts);

  Op op() const;
  const std::string& name() const;  // Var only
  const Formula& lhs() const;       // unary operand or left operand
  const Formula& rhs() const;       // binary only
  int arity() const;

  bool is_var() const { return op() == Op::Var; }
  bool is_constant() const { return op() == Op::Top || op() == Op::Bot; }

  std::size_t hash() const;
  /// Number of nodes in the tree (shared subtrees counted once per occurrence).
  std::uint64_t node_count() const;
  int modal_depth() const;
  std::set<std::string> vars() const;

  /// Canonical minimal-parenthesis rendering.
  std::string str() const;

  const FormulaNode* node() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  friend struct FormulaNode;
  struct Empty {};
  explicit Formula(Empty) {}
  explicit Formula(std::shared_ptr<const FormulaNode> node);
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op;
  std::string name;
  Formula a{Formula::Empty{}};
  Formula b{Formula::Empty{}};
  std::size_t hash;
  std::uint64_t size;
  int depth;
};

/// Canonical total order: node count first, then operator, name, children.
int compare(const Formula& a, const Formula& b);

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const { return compare(a, b) < 0; }
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the ASCII grammar: `~ [] <>` prefix, then `&`, `|`, `->` (right
/// associative), `<->` (lowest). `true`/`false` are the constants.
Formula parse(std::string_view text);

bool is_identifier(std::string_view s);

/// Finite simultaneous substitution; unbound variables are fixed.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> bindings);

  void set(const std::string& var, Formula value);
  bool binds(const std::string& var) const;
  /// Image of `var`; the variable itself when unbound.
  Formula at(const std::string& var) const;
  const std::map<std::string, Formula>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }

  Formula apply(const Formula& phi) const;

  /// (this ∘ first): x ↦ this(first(x)), domain = dom(first) ∪ dom(this).
  Substitution after(const Substitution& first) const;

  /// Same bindings plus identity bindings for every variable in `vars`.
  Substitution padded(const std::set<std::string>& vars) const;

  /// Bindings restricted to `vars`, identity-padded.
  Substitution restricted(const std::set<std::string>& vars) const;

  /// Variables occurring in the images of `domain`.
  std::set<std::string> range_vars(const std::set<std::string>& domain) const;

  std::string str() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.bindings_ == b.bindings_;
  }

 private:
  std::map<std::string, Formula> bindings_;
};

Formula apply(const Substitution& sigma, const Formula& phi);

/// Closure under immediate subterms, including `phi`; sorted canonically.
std::vector<Formula> subformulas(const Formula& phi);

/// Classical propositional cleanup plus []T = T and <>F = F. Idempotent and
/// never increases the node count.
Formula simplify(const Formula& phi);

/// Returns `base` if unused in `taken`, otherwise `base` with a numeric suffix.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace pretab

#endif  // PRETAB_FORMULA_HPP_
