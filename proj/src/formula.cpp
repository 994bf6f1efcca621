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

#include "pretab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pretab {

namespace {

// Nodes are hash-consed: structurally equal formulas share one node, so
// equality is pointer comparison and DAG-shaped substitution results stay
// compact.
struct NodeKey {
  Op op;
  std::string name;
  const FormulaNode* a;
  const FormulaNode* b;

  bool operator==(const NodeKey& o) const {
    return op == o.op && a == o.a && b == o.b && name == o.name;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<std::string>{}(k.name);
    h ^= static_cast<std::size_t>(k.op) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>{}(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class InternTable {
 public:
  std::shared_ptr<const FormulaNode> get(Op op, std::string name, const Formula* a,
                                         const Formula* b) {
    NodeKey key{op, name, a ? a->node() : nullptr, b ? b->node() : nullptr};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it != table_.end()) {
      if (auto sp = it->second.lock()) return sp;
    }
    auto node = std::make_shared<FormulaNode>();
    node->op = op;
    node->name = std::move(name);
    std::size_t h = std::hash<std::string>{}(node->name) * 31 + static_cast<std::size_t>(op);
    std::uint64_t size = 1;
    int depth = 0;
    const bool modal = op == Op::Box || op == Op::Diamond;
    if (a) {
      node->a = *a;
      h = h * 1000003ULL ^ a->hash();
      size = saturating_add(size, a->node_count());
      depth = std::max(depth, a->modal_depth());
    }
    if (b) {
      node->b = *b;
      h = h * 1000033ULL ^ (b->hash() + 0x9e3779b97f4a7c15ULL);
      size = saturating_add(size, b->node_count());
      depth = std::max(depth, b->modal_depth());
    }
    node->hash = h;
    node->size = size;
    node->depth = depth + (modal ? 1 : 0);
    std::shared_ptr<const FormulaNode> result = node;
    table_[key] = result;
    if (table_.size() > sweep_at_) sweep();
    return result;
  }

 private:
  static std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
    const auto max = std::numeric_limits<std::uint64_t>::max();
    return x > max - y ? max : x + y;
  }

  void sweep() {
    for (auto it = table_.begin(); it != table_.end();) {
      if (it->second.expired()) {
        it = table_.erase(it);
      } else {
        ++it;
      }
    }
    sweep_at_ = std::max<std::size_t>(4096, table_.size() * 2);
  }

  std::mutex mu_;
  std::unordered_map<NodeKey, std::weak_ptr<const FormulaNode>, NodeKeyHash> table_;
  std::size_t sweep_at_ = 4096;
};

InternTable& interner() {
  static InternTable* table = new InternTable();
  return *table;
}

int level(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not:
    case Op::Box:
    case Op::Diamond: return 5;
    default: return 6;
  }
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Not: return "~";
    case Op::Box: return "[]";
    case Op::Diamond: return "<>";
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Implies: return " -> ";
    case Op::Iff: return " <-> ";
    case Op::Top: return "true";
    case Op::Bot: return "false";
    case Op::Var: break;
  }
  return "";
}

void print(std::ostream& os, const Formula& f) {
  const Op op = f.op();
  const int lvl = level(op);
  auto child = [&os](const Formula& c, bool parens) {
    if (parens) os << '(';
    print(os, c);
    if (parens) os << ')';
  };
  switch (f.arity()) {
    case 0:
      if (op == Op::Var) {
        os << f.name();
      } else {
        os << symbol(op);
      }
      return;
    case 1:
      os << symbol(op);
      child(f.lhs(), level(f.lhs().op()) < lvl);
      return;
    default: {
      const int ll = level(f.lhs().op());
      const int rl = level(f.rhs().op());
      const bool right_assoc = op == Op::Implies;
      child(f.lhs(), ll < lvl || (ll == lvl && right_assoc));
      os << symbol(op);
      child(f.rhs(), rl < lvl || (rl == lvl && !right_assoc));
      return;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
    Formula f = parse_iff();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at offset " << pos_;
    throw ParseError(os.str(), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept("<->")) f = Formula::iff(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept("->")) return Formula::implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept("~")) return Formula::neg(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    skip_ws();
    if (text_.substr(pos_, 3) != "<->" && accept("<>")) return Formula::diamond(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected character '") + c + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bot();
    return Formula::var(std::move(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula::Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

Formula Formula::var(std::string name) {
  if (!is_identifier(name) || name == "true" || name == "false") {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  return Formula(interner().get(Op::Var, std::move(name), nullptr, nullptr));
}

Formula Formula::top() {
  static const Formula* t = new Formula(interner().get(Op::Top, "", nullptr, nullptr));
  return *t;
}

Formula Formula::bot() {
  static const Formula* f = new Formula(interner().get(Op::Bot, "", nullptr, nullptr));
  return *f;
}

Formula Formula::neg(Formula a) { return Formula(interner().get(Op::Not, "", &a, nullptr)); }
Formula Formula::conj(Formula a, Formula b) { return Formula(interner().get(Op::And, "", &a, &b)); }
Formula Formula::disj(Formula a, Formula b) { return Formula(interner().get(Op::Or, "", &a, &b)); }
Formula Formula::implies(Formula a, Formula b) {
  return Formula(interner().get(Op::Implies, "", &a, &b));
}
Formula Formula::iff(Formula a, Formula b) { return Formula(interner().get(Op::Iff, "", &a, &b)); }
Formula Formula::box(Formula a) { return Formula(interner().get(Op::Box, "", &a, nullptr)); }
Formula Formula::diamond(Formula a) {
  return Formula(interner().get(Op::Diamond, "", &a, nullptr));
}

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = conj(f, parts[i]);
  return f;
}

Formula Formula::disj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return bot();
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = disj(f, parts[i]);
  return f;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }

int Formula::arity() const {
  switch (op()) {
    case Op::Var:
    case Op::Top:
    case Op::Bot: return 0;
    case Op::Not:
    case Op::Box:
    case Op::Diamond: return 1;
    default: return 2;
  }
}

std::size_t Formula::hash() const { return node_->hash; }
std::uint64_t Formula::node_count() const { return node_->size; }
int Formula::modal_depth() const { return node_->depth; }

std::set<std::string> Formula::vars() const {
  std::set<std::string> out;
  std::unordered_set<const FormulaNode*> seen;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (!seen.insert(f->node()).second) continue;
    if (f->is_var()) out.insert(f->name());
    if (f->arity() >= 1) stack.push_back(&f->lhs());
    if (f->arity() == 2) stack.push_back(&f->rhs());
  }
  return out;
}

std::string Formula::str() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

bool operator==(const Formula& a, const Formula& b) { return a.node() == b.node(); }

int compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (a.node_count() != b.node_count()) return a.node_count() < b.node_count() ? -1 : 1;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.is_var()) return a.name() < b.name() ? -1 : 1;
  if (a.arity() >= 1) {
    if (int c = compare(a.lhs(), b.lhs()); c != 0) return c;
  }
  if (a.arity() == 2) return compare(a.rhs(), b.rhs());
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what), offset_(offset) {}

Formula parse(std::string_view text) { return Parser(text).run(); }

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Substitution::Substitution(std::map<std::string, Formula> bindings)
    : bindings_(std::move(bindings)) {}

void Substitution::set(const std::string& var, Formula value) {
  bindings_[var] = std::move(value);
}

bool Substitution::binds(const std::string& var) const { return bindings_.count(var) != 0; }

Formula Substitution::at(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? Formula::var(var) : it->second;
}

Formula Substitution::apply(const Formula& phi) const {
  if (bindings_.empty()) return phi;
  std::unordered_map<const FormulaNode*, Formula> memo;
  auto rec = [&](auto&& self, const Formula& f) -> Formula {
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    Formula out = f;
    switch (f.op()) {
      case Op::Var: out = at(f.name()); break;
      case Op::Top:
      case Op::Bot: break;
      case Op::Not: out = Formula::neg(self(self, f.lhs())); break;
      case Op::Box: out = Formula::box(self(self, f.lhs())); break;
      case Op::Diamond: out = Formula::diamond(self(self, f.lhs())); break;
      case Op::And: out = Formula::conj(self(self, f.lhs()), self(self, f.rhs())); break;
      case Op::Or: out = Formula::disj(self(self, f.lhs()), self(self, f.rhs())); break;
      case Op::Implies: out = Formula::implies(self(self, f.lhs()), self(self, f.rhs())); break;
      case Op::Iff: out = Formula::iff(self(self, f.lhs()), self(self, f.rhs())); break;
    }
    memo.emplace(f.node(), out);
    return out;
  };
  return rec(rec, phi);
}

Substitution Substitution::after(const Substitution& first) const {
  Substitution out;
  for (const auto& [v, f] : first.bindings_) out.set(v, apply(f));
  for (const auto& [v, f] : bindings_) {
    if (!first.binds(v)) out.set(v, f);
  }
  return out;
}

Substitution Substitution::padded(const std::set<std::string>& vars) const {
  Substitution out = *this;
  for (const auto& v : vars) {
    if (!out.binds(v)) out.set(v, Formula::var(v));
  }
  return out;
}

Substitution Substitution::restricted(const std::set<std::string>& vars) const {
  Substitution out;
  for (const auto& v : vars) out.set(v, at(v));
  return out;
}

std::set<std::string> Substitution::range_vars(const std::set<std::string>& domain) const {
  std::set<std::string> out;
  for (const auto& v : domain) {
    auto vs = at(v).vars();
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

std::string Substitution::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, f] : bindings_) {
    if (!first) os << ", ";
    first = false;
    os << v << " := " << f;
  }
  os << '}';
  return os.str();
}

Formula apply(const Substitution& sigma, const Formula& phi) { return sigma.apply(phi); }

std::vector<Formula> subformulas(const Formula& phi) {
  std::unordered_set<const FormulaNode*> seen;
  std::vector<Formula> out;
  std::vector<Formula> stack{phi};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (!seen.insert(f.node()).second) continue;
    out.push_back(f);
    if (f.arity() >= 1) stack.push_back(f.lhs());
    if (f.arity() == 2) stack.push_back(f.rhs());
  }
  std::sort(out.begin(), out.end(), FormulaLess{});
  return out;
}

namespace {

bool is_negation_of(const Formula& a, const Formula& b) {
  return (a.op() == Op::Not && a.lhs() == b) || (b.op() == Op::Not && b.lhs() == a);
}

Formula simplify_node(const Formula& f) {
  const Formula t = Formula::top();
  const Formula b = Formula::bot();
  switch (f.op()) {
    case Op::Not: {
      const Formula& a = f.lhs();
      if (a == t) return b;
      if (a == b) return t;
      if (a.op() == Op::Not) return a.lhs();
      return f;
    }
    case Op::And: {
      const Formula &x = f.lhs(), &y = f.rhs();
      if (x == t) return y;
      if (y == t) return x;
      if (x == b || y == b) return b;
      if (x == y) return x;
      if (is_negation_of(x, y)) return b;
      return f;
    }
    case Op::Or: {
      const Formula &x = f.lhs(), &y = f.rhs();
      if (x == b) return y;
      if (y == b) return x;
      if (x == t || y == t) return t;
      if (x == y) return x;
      if (is_negation_of(x, y)) return t;
      return f;
    }
    case Op::Implies: {
      const Formula &x = f.lhs(), &y = f.rhs();
      if (x == t) return y;
      if (x == b || y == t || x == y) return t;
      if (y == b) return simplify_node(Formula::neg(x));
      return f;
    }
    case Op::Iff: {
      const Formula &x = f.lhs(), &y = f.rhs();
      if (x == y) return t;
      if (x == t) return y;
      if (y == t) return x;
      if (x == b) return simplify_node(Formula::neg(y));
      if (y == b) return simplify_node(Formula::neg(x));
      if (is_negation_of(x, y)) return b;
      return f;
    }
    case Op::Box:
      return f.lhs() == t ? t : f;
    case Op::Diamond:
      return f.lhs() == b ? b : f;
    default:
      return f;
  }
}

}  // namespace

Formula simplify(const Formula& phi) {
  std::unordered_map<const FormulaNode*, Formula> memo;
  auto rec = [&](auto&& self, const Formula& f) -> Formula {
    if (auto it = memo.find(f.node()); it != memo.end()) return it->second;
    Formula out = f;
    switch (f.op()) {
      case Op::Var:
      case Op::Top:
      case Op::Bot: break;
      case Op::Not: out = simplify_node(Formula::neg(self(self, f.lhs()))); break;
      case Op::Box: out = simplify_node(Formula::box(self(self, f.lhs()))); break;
      case Op::Diamond: out = simplify_node(Formula::diamond(self(self, f.lhs()))); break;
      case Op::And:
        out = simplify_node(Formula::conj(self(self, f.lhs()), self(self, f.rhs())));
        break;
      case Op::Or:
        out = simplify_node(Formula::disj(self(self, f.lhs()), self(self, f.rhs())));
        break;
      case Op::Implies:
        out = simplify_node(Formula::implies(self(self, f.lhs()), self(self, f.rhs())));
        break;
      case Op::Iff:
        out = simplify_node(Formula::iff(self(self, f.lhs()), self(self, f.rhs())));
        break;
    }
    memo.emplace(f.node(), out);
    return out;
  };
  return rec(rec, phi);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace pretab
