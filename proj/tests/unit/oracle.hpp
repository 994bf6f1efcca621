// Brute-force reference semantics shared by the unit tests. Nothing here
// uses the library's evaluators or frame builders, only the formula AST.
#ifndef PRETAB_TESTS_ORACLE_HPP_
#define PRETAB_TESTS_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretab/formula.hpp"
#include "pretab/logic.hpp"

namespace oracle {

using pretab::Formula;
using pretab::Logic;
using pretab::Op;

struct Rel {
  int n = 0;
  std::vector<std::vector<bool>> r;
};

// Family frames written straight from the relation definitions.
inline Rel family(Logic logic, int m) {
  Rel f;
  switch (logic) {
    case Logic::PM1: f.n = m; break;
    case Logic::PM2: f.n = m + 1; break;
    case Logic::PM3: f.n = m + 2; break;
    case Logic::PM4: f.n = m + 1; break;
    case Logic::PM5: f.n = m; break;
  }
  f.r.assign(f.n, std::vector<bool>(f.n, false));
  for (int x = 0; x < f.n; ++x) {
    for (int y = 0; y < f.n; ++y) {
      bool rel = false;
      switch (logic) {
        case Logic::PM1: rel = x <= y; break;
        case Logic::PM2: rel = x == 0 || x == y; break;
        case Logic::PM3: rel = x == 0 || y == m + 1 || (x == y && x >= 1 && x <= m); break;
        case Logic::PM4: rel = x <= m - 1 || y == m; break;
        case Logic::PM5: rel = true; break;
      }
      f.r[x][y] = rel;
    }
  }
  return f;
}

using Val = std::map<std::string, std::vector<bool>>;

inline bool holds(const Rel& f, const Val& v, int w, const Formula& phi) {
  switch (phi.op()) {
    case Op::Var: {
      auto it = v.find(phi.name());
      return it != v.end() && it->second[w];
    }
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !holds(f, v, w, phi.lhs());
    case Op::And: return holds(f, v, w, phi.lhs()) && holds(f, v, w, phi.rhs());
    case Op::Or: return holds(f, v, w, phi.lhs()) || holds(f, v, w, phi.rhs());
    case Op::Implies: return !holds(f, v, w, phi.lhs()) || holds(f, v, w, phi.rhs());
    case Op::Iff: return holds(f, v, w, phi.lhs()) == holds(f, v, w, phi.rhs());
    case Op::Box:
      for (int u = 0; u < f.n; ++u) {
        if (f.r[w][u] && !holds(f, v, u, phi.lhs())) return false;
      }
      return true;
    case Op::Diamond:
      for (int u = 0; u < f.n; ++u) {
        if (f.r[w][u] && holds(f, v, u, phi.lhs())) return true;
      }
      return false;
  }
  return false;
}

// Every valuation of Var(phi) on f; true when phi holds everywhere.
inline bool frame_valid(const Rel& f, const Formula& phi) {
  const auto names = phi.vars();
  const std::vector<std::string> vars(names.begin(), names.end());
  const std::uint64_t bits = static_cast<std::uint64_t>(vars.size()) * f.n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    Val v;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::vector<bool> ext(f.n);
      for (int w = 0; w < f.n; ++w) ext[w] = (code >> (i * f.n + w)) & 1U;
      v[vars[i]] = ext;
    }
    for (int w = 0; w < f.n; ++w) {
      if (!holds(f, v, w, phi)) return false;
    }
  }
  return true;
}

// Least m <= max_m refuting phi in the family, by exhaustive search.
inline std::optional<int> least_refuting(Logic logic, const Formula& phi, int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    if (!frame_valid(family(logic, m), phi)) return m;
  }
  return std::nullopt;
}

// Truth-table classical evaluation treating [] and <> as on a one-point frame.
inline bool classical(const Formula& phi, const std::map<std::string, bool>& a) {
  switch (phi.op()) {
    case Op::Var: {
      auto it = a.find(phi.name());
      return it != a.end() && it->second;
    }
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !classical(phi.lhs(), a);
    case Op::And: return classical(phi.lhs(), a) && classical(phi.rhs(), a);
    case Op::Or: return classical(phi.lhs(), a) || classical(phi.rhs(), a);
    case Op::Implies: return !classical(phi.lhs(), a) || classical(phi.rhs(), a);
    case Op::Iff: return classical(phi.lhs(), a) == classical(phi.rhs(), a);
    case Op::Box:
    case Op::Diamond: return classical(phi.lhs(), a);
  }
  return false;
}

}  // namespace oracle

#endif  // PRETAB_TESTS_ORACLE_HPP_
