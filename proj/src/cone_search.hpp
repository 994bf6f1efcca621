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

#ifndef PRETAB_SRC_CONE_SEARCH_HPP_
#define PRETAB_SRC_CONE_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "pretab/kripke.hpp"

namespace pretab::detail {

// Assigns a bit pattern to every point of a finite partial order so that a
// predicate depending only on the point's cone holds everywhere. Points are
// filled from the top down; connected components are solved separately.
class ConeSearch {
 public:
  struct Cone {
    std::vector<int> points;  // successors in id order
    int self = 0;             // index of the point itself in `points`
    Frame frame;              // generated subframe, renumbered like `points`
  };
  enum class Outcome { Found, None, Budget };

  explicit ConeSearch(const Frame& frame);

  const Cone& cone(int w) const { return cones_[w]; }
  int size() const { return static_cast<int>(cones_.size()); }

  /// choices[w] lists the patterns tried at w, in order. feasible(w, b) may
  /// read bits() on the strict cone of w.
  Outcome solve(const std::vector<std::vector<unsigned>>& choices,
                const std::function<bool(int, unsigned)>& feasible, std::uint64_t budget);

  const std::vector<unsigned>& bits() const { return bits_; }
  std::uint64_t work() const { return work_; }

  /// Cone patterns of w read from bits(), with `b` at w itself.
  std::vector<WorldSet> cone_sets(int w, unsigned b, int width) const;

 private:
  std::vector<Cone> cones_;
  std::vector<std::vector<int>> components_;
  std::vector<bool> bottom_;
  std::vector<unsigned> bits_;
  std::uint64_t work_ = 0;
};

}  // namespace pretab::detail

#endif  // PRETAB_SRC_CONE_SEARCH_HPP_
