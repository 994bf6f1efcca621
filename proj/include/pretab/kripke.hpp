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

#ifndef PRETAB_KRIPKE_HPP_
#define PRETAB_KRIPKE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pretab/formula.hpp"
#include "pretab/logic.hpp"

namespace pretab {

/// Dense bitset over world ids.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static WorldSet full(int size);
  static WorldSet of(int size, const std::vector<int>& members);

  int size() const { return size_; }
  bool test(int w) const { return (words_[w >> 6] >> (w & 63)) & 1U; }
  void set(int w, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (w & 63);
    if (value) {
      words_[w >> 6] |= bit;
    } else {
      words_[w >> 6] &= ~bit;
    }
  }
  int count() const;
  bool any() const;
  bool is_subset_of(const WorldSet& other) const;
  std::vector<int> members() const;

  WorldSet& operator|=(const WorldSet& o);
  WorldSet& operator&=(const WorldSet& o);
  friend bool operator==(const WorldSet& a, const WorldSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const WorldSet& a, const WorldSet& b) {
    return a.words_ < b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::uint64_t* data() { return words_.data(); }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite frame with worlds 0..N-1 and a dense accessibility relation.
class Frame {
 public:
  Frame() = default;
  explicit Frame(int worlds);

  /// Builds a frame from related pairs; throws unless the result is
  /// reflexive and transitive.
  static Frame from_pairs(int worlds, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }
  bool related(int x, int y) const { return succ_[x].test(y); }
  void relate(int x, int y);
  const WorldSet& successors(int x) const { return succ_[x]; }
  WorldSet predecessors(int x) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  /// Closes the relation under reflexivity and transitivity.
  void close();

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.n_ == b.n_ && a.succ_ == b.succ_;
  }

 private:
  int n_ = 0;
  std::vector<WorldSet> succ_;
};

using Valuation = std::map<std::string, WorldSet>;

struct FrameModel {
  Frame frame;
  Valuation valuation;  // unlisted variables are false everywhere
};

using Cluster = std::vector<int>;

class UnknownWorldError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Direct recursive Kripke truth at one world.
bool eval(const FrameModel& model, int world, const Formula& phi);

/// Truth set of `phi` over the whole model (compiled evaluation).
WorldSet truth_set(const FrameModel& model, const Formula& phi);

/// Straight-line program over the distinct subformulas of a formula, used
/// by every search that evaluates one formula under many valuations.
class CompiledFormula {
 public:
  struct Instr {
    Op op;
    int a = -1;
    int b = -1;
    int var = -1;  // index into vars() for Op::Var
  };

  explicit CompiledFormula(const Formula& phi);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Instr>& code() const { return code_; }
  const std::vector<Formula>& nodes() const { return nodes_; }
  int root() const { return static_cast<int>(code_.size()) - 1; }

  /// Truth sets for every instruction; `var_sets[i]` is the extension of vars()[i].
  std::vector<WorldSet> run(const Frame& frame, const std::vector<WorldSet>& var_sets) const;
  WorldSet run_root(const Frame& frame, const std::vector<WorldSet>& var_sets) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Instr> code_;
  std::vector<Formula> nodes_;
};

struct FrameCheckOptions {
  /// Maximum number of valuations examined before giving up.
  std::uint64_t budget = 20'000'000;
  /// Skip valuations giving two interchangeable worlds the same type. Only
  /// sound when those valuations are covered by a smaller frame of the same
  /// family, as in the membership search.
  bool distinct_twins = false;
};

struct FrameCheck {
  enum class Status { Valid, Refuted, BudgetExceeded };
  Status status = Status::Valid;
  std::optional<Valuation> witness;
  int world = -1;
  std::uint64_t valuations_examined = 0;
};

/// Validity of `phi` on `frame` under every valuation of Var(phi):
/// refutation search over valuations canonicalised by twin-world symmetry.
/// Returns the counter-valuation and the lowest refuted world on failure.
FrameCheck valid_on_frame(const Frame& frame, const Formula& phi,
                          const FrameCheckOptions& options = {});

/// Frame of the characteristic family of `logic` with size parameter `m`.
Frame make_frame(Logic logic, int m);

/// Maximal mutual-reachability classes, ordered by least member.
std::vector<Cluster> clusters(const Frame& frame);

/// Classes of pairwise interchangeable worlds (swapping any two members is
/// a frame automorphism), ordered by least member.
std::vector<std::vector<int>> twin_classes(const Frame& frame);

/// Whether adding a reflexive co-cover of `antichain` (clusters of
/// make_frame(logic, m) other than the root cluster) keeps the generated
/// frame inside the family, up to isomorphism with some make_frame(logic, k).
bool has_weak_cocover_closure(Logic logic, int m, const std::vector<Cluster>& antichain);

/// Brute-force isomorphism test for small frames.
bool isomorphic(const Frame& a, const Frame& b);

/// Subframe generated by `roots` (upward closure), renumbered in id order.
Frame generated_subframe(const Frame& frame, const WorldSet& roots);

/// `worlds: N` followed by one `u -> v` line per related pair.
void write_frame(std::ostream& os, const Frame& frame);
Frame read_frame(std::istream& is);

/// Frame followed by `valuation <var>: {w,...}` lines.
void write_model(std::ostream& os, const FrameModel& model);

std::string format_world_set(const WorldSet& set);

}  // namespace pretab

#endif  // PRETAB_KRIPKE_HPP_
