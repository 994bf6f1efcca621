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

#include "cone_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pretab::detail {

ConeSearch::ConeSearch(const Frame& frame) {
  const int n = frame.size();
  cones_.resize(n);
  bottom_.resize(n);
  bits_.assign(n, 0);
  for (int w = 0; w < n; ++w) {
    Cone& c = cones_[w];
    c.points = frame.successors(w).members();
    c.self = static_cast<int>(std::find(c.points.begin(), c.points.end(), w) - c.points.begin());
    c.frame = generated_subframe(frame, WorldSet::of(n, {w}));
    bottom_[w] = frame.predecessors(w).count() == 1;
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int w = 0; w < n; ++w) {
    for (int u : frame.successors(w).members()) parent[find(u)] = find(w);
  }
  std::map<int, std::vector<int>> by_root;
  for (int w = 0; w < n; ++w) by_root[find(w)].push_back(w);
  for (auto& [root, members] : by_root) components_.push_back(std::move(members));
}

std::vector<WorldSet> ConeSearch::cone_sets(int w, unsigned b, int width) const {
  const Cone& c = cones_[w];
  const int size = static_cast<int>(c.points.size());
  std::vector<WorldSet> sets(width, WorldSet(size));
  for (int l = 0; l < size; ++l) {
    const unsigned pb = c.points[l] == w ? b : bits_[c.points[l]];
    for (int i = 0; i < width; ++i) {
      if ((pb >> i) & 1U) sets[i].set(l);
    }
  }
  return sets;
}

ConeSearch::Outcome ConeSearch::solve(const std::vector<std::vector<unsigned>>& choices,
                                      const std::function<bool(int, unsigned)>& feasible,
                                      std::uint64_t budget) {
  const int n = size();
  work_ = 0;
  bool budget_hit = false;
  auto test = [&](int w, unsigned b) {
    ++work_;
    return feasible(w, b);
  };
  auto settle = [&](int w) {
    for (unsigned b : choices[w]) {
      if (test(w, b)) {
        bits_[w] = b;
        return true;
      }
    }
    return false;
  };

  for (const auto& members : components_) {
    std::vector<int> order;
    std::vector<int> position(n, -1);
    for (int w : members) {
      if (!bottom_[w]) {
        position[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
    // Bottom points are settled as soon as their strict cone is filled.
    std::vector<std::vector<int>> trigger(order.size());
    bool dead = false;
    for (int w : members) {
      if (!bottom_[w]) continue;
      int last = -1;
      for (int u : cones_[w].points) {
        if (u != w) last = std::max(last, position[u]);
      }
      if (last >= 0) {
        trigger[last].push_back(w);
      } else if (!settle(w)) {
        dead = true;
      }
    }
    if (dead) return Outcome::None;
    auto dfs = [&](auto&& self, std::size_t pos) -> bool {
      if (pos == order.size()) return true;
      if (work_ > budget) {
        budget_hit = true;
        return false;
      }
      const int w = order[pos];
      for (unsigned b : choices[w]) {
        if (!test(w, b)) continue;
        bits_[w] = b;
        bool ok = true;
        for (int u : trigger[pos]) {
          if (!settle(u)) {
            ok = false;
            break;
          }
        }
        if (ok && self(self, pos + 1)) return true;
        if (budget_hit) return false;
      }
      return false;
    };
    if (!dfs(dfs, 0)) return budget_hit ? Outcome::Budget : Outcome::None;
  }
  return Outcome::Found;
}

}  // namespace pretab::detail
