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

#include "pretab/kripke.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace pretab {

// ---------------------------------------------------------------------------
// WorldSet

WorldSet WorldSet::full(int size) {
  WorldSet s(size);
  for (int w = 0; w < size; ++w) s.set(w);
  return s;
}

WorldSet WorldSet::of(int size, const std::vector<int>& members) {
  WorldSet s(size);
  for (int w : members) s.set(w);
  return s;
}

int WorldSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool WorldSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<int> WorldSet::members() const {
  std::vector<int> out;
  for (int w = 0; w < size_; ++w) {
    if (test(w)) out.push_back(w);
  }
  return out;
}

WorldSet& WorldSet::operator|=(const WorldSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

WorldSet& WorldSet::operator&=(const WorldSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(int worlds) : n_(worlds), succ_(worlds, WorldSet(worlds)) {}

Frame Frame::from_pairs(int worlds, const std::vector<std::pair<int, int>>& pairs) {
  if (worlds < 1) throw std::invalid_argument("frame needs at least one world");
  Frame f(worlds);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= worlds || v >= worlds) {
      throw UnknownWorldError("pair mentions a world outside 0.." + std::to_string(worlds - 1));
    }
    f.relate(u, v);
  }
  if (!f.is_reflexive()) throw std::invalid_argument("relation is not reflexive");
  if (!f.is_transitive()) throw std::invalid_argument("relation is not transitive");
  return f;
}

void Frame::relate(int x, int y) { succ_[x].set(y); }

WorldSet Frame::predecessors(int x) const {
  WorldSet out(n_);
  for (int y = 0; y < n_; ++y) {
    if (related(y, x)) out.set(y);
  }
  return out;
}

bool Frame::is_reflexive() const {
  for (int x = 0; x < n_; ++x) {
    if (!related(x, x)) return false;
  }
  return true;
}

bool Frame::is_transitive() const {
  for (int x = 0; x < n_; ++x) {
    for (int y : succ_[x].members()) {
      if (!succ_[y].is_subset_of(succ_[x])) return false;
    }
  }
  return true;
}

void Frame::close() {
  for (int x = 0; x < n_; ++x) relate(x, x);
  // Warshall over bitsets.
  for (int k = 0; k < n_; ++k) {
    for (int x = 0; x < n_; ++x) {
      if (related(x, k)) succ_[x] |= succ_[k];
    }
  }
}

// ---------------------------------------------------------------------------
// Evaluation

bool eval(const FrameModel& model, int world, const Formula& phi) {
  const Frame& frame = model.frame;
  if (world < 0 || world >= frame.size()) {
    throw UnknownWorldError("unknown world " + std::to_string(world));
  }
  switch (phi.op()) {
    case Op::Var: {
      auto it = model.valuation.find(phi.name());
      return it != model.valuation.end() && it->second.test(world);
    }
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !eval(model, world, phi.lhs());
    case Op::And: return eval(model, world, phi.lhs()) && eval(model, world, phi.rhs());
    case Op::Or: return eval(model, world, phi.lhs()) || eval(model, world, phi.rhs());
    case Op::Implies: return !eval(model, world, phi.lhs()) || eval(model, world, phi.rhs());
    case Op::Iff: return eval(model, world, phi.lhs()) == eval(model, world, phi.rhs());
    case Op::Box:
      for (int y = 0; y < frame.size(); ++y) {
        if (frame.related(world, y) && !eval(model, y, phi.lhs())) return false;
      }
      return true;
    case Op::Diamond:
      for (int y = 0; y < frame.size(); ++y) {
        if (frame.related(world, y) && eval(model, y, phi.lhs())) return true;
      }
      return false;
  }
  return false;
}

CompiledFormula::CompiledFormula(const Formula& phi) {
  std::unordered_map<const FormulaNode*, int> index;
  std::map<std::string, int> var_index;
  for (const auto& v : phi.vars()) {
    var_index.emplace(v, static_cast<int>(vars_.size()));
    vars_.push_back(v);
  }
  // Iterative post-order so deep formulas do not exhaust the stack.
  std::vector<std::pair<Formula, bool>> stack{{phi, false}};
  while (!stack.empty()) {
    auto [f, expanded] = stack.back();
    stack.pop_back();
    if (index.count(f.node())) continue;
    if (!expanded && f.arity() > 0) {
      stack.push_back({f, true});
      if (f.arity() == 2) stack.push_back({f.rhs(), false});
      stack.push_back({f.lhs(), false});
      continue;
    }
    Instr ins{f.op()};
    if (f.is_var()) ins.var = var_index.at(f.name());
    if (f.arity() >= 1) ins.a = index.at(f.lhs().node());
    if (f.arity() == 2) ins.b = index.at(f.rhs().node());
    index.emplace(f.node(), static_cast<int>(code_.size()));
    code_.push_back(ins);
    nodes_.push_back(f);
  }
}

namespace {

void run_into(const CompiledFormula& cf, const Frame& frame, const std::vector<WorldSet>& var_sets,
              std::vector<WorldSet>& out) {
  const int n = frame.size();
  const auto& code = cf.code();
  out.assign(code.size(), WorldSet(n));
  const std::size_t words = (n + 63) / 64;
  const std::uint64_t tail = (n % 64) ? ((std::uint64_t{1} << (n % 64)) - 1) : ~std::uint64_t{0};
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& ins = code[i];
    WorldSet& r = out[i];
    std::uint64_t* rw = r.data();
    auto word = [&](int idx, std::size_t k) { return out[idx].words()[k]; };
    switch (ins.op) {
      case Op::Var: r = var_sets[ins.var]; break;
      case Op::Top: r = WorldSet::full(n); break;
      case Op::Bot: break;
      case Op::Not:
        for (std::size_t k = 0; k < words; ++k) rw[k] = ~word(ins.a, k);
        rw[words - 1] &= tail;
        break;
      case Op::And:
        for (std::size_t k = 0; k < words; ++k) rw[k] = word(ins.a, k) & word(ins.b, k);
        break;
      case Op::Or:
        for (std::size_t k = 0; k < words; ++k) rw[k] = word(ins.a, k) | word(ins.b, k);
        break;
      case Op::Implies:
        for (std::size_t k = 0; k < words; ++k) rw[k] = ~word(ins.a, k) | word(ins.b, k);
        rw[words - 1] &= tail;
        break;
      case Op::Iff:
        for (std::size_t k = 0; k < words; ++k) rw[k] = ~(word(ins.a, k) ^ word(ins.b, k));
        rw[words - 1] &= tail;
        break;
      case Op::Box: {
        const WorldSet& arg = out[ins.a];
        for (int x = 0; x < n; ++x) {
          if (frame.successors(x).is_subset_of(arg)) r.set(x);
        }
        break;
      }
      case Op::Diamond: {
        const auto& arg = out[ins.a].words();
        for (int x = 0; x < n; ++x) {
          const auto& s = frame.successors(x).words();
          for (std::size_t k = 0; k < words; ++k) {
            if (s[k] & arg[k]) {
              r.set(x);
              break;
            }
          }
        }
        break;
      }
    }
  }
}

}  // namespace

std::vector<WorldSet> CompiledFormula::run(const Frame& frame,
                                           const std::vector<WorldSet>& var_sets) const {
  std::vector<WorldSet> out;
  run_into(*this, frame, var_sets, out);
  return out;
}

WorldSet CompiledFormula::run_root(const Frame& frame, const std::vector<WorldSet>& var_sets) const {
  std::vector<WorldSet> out;
  run_into(*this, frame, var_sets, out);
  return out.back();
}

WorldSet truth_set(const FrameModel& model, const Formula& phi) {
  CompiledFormula cf(phi);
  std::vector<WorldSet> sets;
  for (const auto& v : cf.vars()) {
    auto it = model.valuation.find(v);
    sets.push_back(it == model.valuation.end() ? WorldSet(model.frame.size()) : it->second);
  }
  return cf.run_root(model.frame, sets);
}

// ---------------------------------------------------------------------------
// Frame validity

std::vector<std::vector<int>> twin_classes(const Frame& frame) {
  const int n = frame.size();
  std::vector<WorldSet> pred;
  pred.reserve(n);
  for (int x = 0; x < n; ++x) pred.push_back(frame.predecessors(x));
  auto twins = [&](int x, int y) {
    if (frame.related(x, y) != frame.related(y, x)) return false;
    for (int z = 0; z < n; ++z) {
      if (z == x || z == y) continue;
      if (frame.related(x, z) != frame.related(y, z)) return false;
      if (pred[x].test(z) != pred[y].test(z)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    bool placed = false;
    for (auto& cls : classes) {
      if (std::all_of(cls.begin(), cls.end(), [&](int y) { return twins(x, y); })) {
        cls.push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({x});
  }
  return classes;
}

FrameCheck valid_on_frame(const Frame& frame, const Formula& phi, const FrameCheckOptions& options) {
  CompiledFormula cf(phi);
  const int n = frame.size();
  const int k = static_cast<int>(cf.vars().size());
  if (k > 24) throw std::invalid_argument("too many variables for frame validity search");
  const std::uint32_t types = std::uint32_t{1} << k;

  // Worlds ordered class by class; inside a class the types are kept
  // non-decreasing (strictly increasing with distinct_twins).
  std::vector<int> order;
  std::vector<bool> continues_class;
  for (const auto& cls : twin_classes(frame)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      order.push_back(cls[i]);
      continues_class.push_back(i > 0);
    }
  }

  FrameCheck result;
  std::vector<std::uint32_t> type(n, 0);
  std::vector<WorldSet> sets(k, WorldSet(n));
  bool stop = false;

  auto check_leaf = [&]() {
    if (result.valuations_examined >= options.budget) {
      result.status = FrameCheck::Status::BudgetExceeded;
      stop = true;
      return;
    }
    ++result.valuations_examined;
    for (int i = 0; i < k; ++i) {
      WorldSet s(n);
      for (int w = 0; w < n; ++w) {
        if ((type[w] >> i) & 1U) s.set(w);
      }
      sets[i] = std::move(s);
    }
    WorldSet truth = cf.run_root(frame, sets);
    for (int w = 0; w < n; ++w) {
      if (!truth.test(w)) {
        result.status = FrameCheck::Status::Refuted;
        result.world = w;
        Valuation val;
        for (int i = 0; i < k; ++i) val.emplace(cf.vars()[i], sets[i]);
        result.witness = std::move(val);
        stop = true;
        return;
      }
    }
  };

  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    if (pos == order.size()) {
      check_leaf();
      return;
    }
    const int w = order[pos];
    std::uint32_t start = 0;
    if (continues_class[pos]) {
      start = type[order[pos - 1]] + (options.distinct_twins ? 1 : 0);
    }
    for (std::uint32_t t = start; t < types && !stop; ++t) {
      type[w] = t;
      self(self, pos + 1);
    }
  };
  dfs(dfs, 0);
  return result;
}

// ---------------------------------------------------------------------------
// Families

Frame make_frame(Logic logic, int m) {
  if (m < 1) throw std::invalid_argument("frame size parameter must be >= 1");
  switch (logic) {
    case Logic::PM1: {
      Frame f(m);
      for (int x = 0; x < m; ++x) {
        for (int y = x; y < m; ++y) f.relate(x, y);
      }
      return f;
    }
    case Logic::PM2: {
      Frame f(m + 1);
      for (int x = 0; x <= m; ++x) {
        for (int y = 0; y <= m; ++y) {
          if (x == 0 || x == y) f.relate(x, y);
        }
      }
      return f;
    }
    case Logic::PM3: {
      Frame f(m + 2);
      for (int x = 0; x <= m + 1; ++x) {
        for (int y = 0; y <= m + 1; ++y) {
          if (x == 0 || y == m + 1 || (1 <= x && x == y && x <= m)) f.relate(x, y);
        }
      }
      return f;
    }
    case Logic::PM4: {
      Frame f(m + 1);
      for (int x = 0; x <= m; ++x) {
        for (int y = 0; y <= m; ++y) {
          if (x <= m - 1 || y == m) f.relate(x, y);
        }
      }
      return f;
    }
    case Logic::PM5: {
      Frame f(m);
      for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) f.relate(x, y);
      }
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Cluster> clusters(const Frame& frame) {
  const int n = frame.size();
  std::vector<int> owner(n, -1);
  std::vector<Cluster> out;
  for (int x = 0; x < n; ++x) {
    if (owner[x] >= 0) continue;
    Cluster c;
    for (int y = x; y < n; ++y) {
      if (owner[y] < 0 && frame.related(x, y) && frame.related(y, x)) {
        owner[y] = static_cast<int>(out.size());
        c.push_back(y);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Frame generated_subframe(const Frame& frame, const WorldSet& roots) {
  WorldSet keep(frame.size());
  for (int r : roots.members()) keep |= frame.successors(r);
  const auto members = keep.members();
  std::vector<int> pos(frame.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  Frame out(static_cast<int>(members.size()));
  for (int x : members) {
    for (int y : members) {
      if (frame.related(x, y)) out.relate(pos[x], pos[y]);
    }
  }
  return out;
}

bool isomorphic(const Frame& a, const Frame& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  auto signature = [](const Frame& f, int x) {
    return std::make_pair(f.successors(x).count(), f.predecessors(x).count());
  };
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || signature(a, x) != signature(b, y)) continue;
      bool ok = a.related(x, x) == b.related(y, y);
      for (int z = 0; z < x && ok; ++z) {
        ok = a.related(x, z) == b.related(y, map[z]) && a.related(z, x) == b.related(map[z], y);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

bool has_weak_cocover_closure(Logic logic, int m, const std::vector<Cluster>& antichain) {
  const Frame frame = make_frame(logic, m);
  if (antichain.empty()) throw std::invalid_argument("antichain must be nonempty");
  const auto all = clusters(frame);
  const Cluster& root = all.front();
  WorldSet roots(frame.size());
  for (std::size_t i = 0; i < antichain.size(); ++i) {
    const Cluster& c = antichain[i];
    if (c.empty()) throw std::invalid_argument("empty cluster in antichain");
    if (std::find(all.begin(), all.end(), c) == all.end()) {
      throw std::invalid_argument("antichain member is not a cluster of the frame");
    }
    if (c == root) throw std::invalid_argument("antichain must avoid the root cluster");
    for (std::size_t j = 0; j < antichain.size(); ++j) {
      if (i != j && frame.related(c.front(), antichain[j].front())) {
        throw std::invalid_argument("antichain clusters are not pairwise incomparable");
      }
    }
    roots.set(c.front());
  }
  const Frame cone = generated_subframe(frame, roots);
  Frame extended(cone.size() + 1);
  for (int x = 0; x < cone.size(); ++x) {
    for (int y = 0; y < cone.size(); ++y) {
      if (cone.related(x, y)) extended.relate(x + 1, y + 1);
    }
  }
  for (int y = 0; y <= cone.size(); ++y) extended.relate(0, y);
  for (int k = 1; k <= extended.size(); ++k) {
    const Frame candidate = make_frame(logic, k);
    if (candidate.size() > extended.size()) break;
    if (isomorphic(candidate, extended)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Serialization

std::string format_world_set(const WorldSet& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int w : set.members()) {
    if (!first) os << ',';
    first = false;
    os << w;
  }
  os << '}';
  return os.str();
}

void write_frame(std::ostream& os, const Frame& frame) {
  os << "worlds: " << frame.size() << '\n';
  for (int x = 0; x < frame.size(); ++x) {
    for (int y : frame.successors(x).members()) os << x << " -> " << y << '\n';
  }
}

Frame read_frame(std::istream& is) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      ls >> tag >> n;
      if (tag != "worlds:" || !ls || n < 1) throw std::runtime_error("expected 'worlds: N' header");
      continue;
    }
    int u = 0, v = 0;
    std::string arrow;
    ls >> u >> arrow >> v;
    if (!ls || arrow != "->") break;  // trailing non-frame lines end the frame
    pairs.emplace_back(u, v);
  }
  if (n < 0) throw std::runtime_error("missing 'worlds: N' header");
  return Frame::from_pairs(n, pairs);
}

void write_model(std::ostream& os, const FrameModel& model) {
  write_frame(os, model.frame);
  for (const auto& [var, set] : model.valuation) {
    os << "valuation " << var << ": " << format_world_set(set) << '\n';
  }
}

}  // namespace pretab
