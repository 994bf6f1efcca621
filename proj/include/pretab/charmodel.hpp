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

#ifndef PRETAB_CHARMODEL_HPP_
#define PRETAB_CHARMODEL_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pretab/formula.hpp"
#include "pretab/kripke.hpp"

namespace pretab {

/// One point of a layered characteristic model. Points are singleton
/// clusters; the world id equals the cluster id.
struct CharCluster {
  int id = 0;
  int layer = 1;              // 1 = top layer
  unsigned valuation = 0;     // bit i set iff vars[i] is true
  std::vector<int> antichain; // co-covered points of the layer above
};

struct CharModel {
  int n = 0;
  int layers = 2;
  std::vector<std::string> vars;
  std::vector<CharCluster> clusters;
  FrameModel model;

  int size() const { return static_cast<int>(clusters.size()); }
  std::vector<int> layer(int l) const;
};

struct CharModelLimits {
  int max_n_two_layers = 3;
  int max_n_three_layers = 2;
};

class CharModelTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two layers: the n-characteristic model for PM2. Three layers: the one for
/// PM3, built as a disjoint union of components with a single top each.
CharModel build_char_model(const std::vector<std::string>& vars, int layers,
                           const CharModelLimits& limits = {});
/// Variables p1..pn.
CharModel build_char_model(int n, int layers, const CharModelLimits& limits = {});

/// Formula true in the model at exactly the point `id`.
Formula cluster_defining_formula(const CharModel& model, int id);

/// Truth of `phi` at every point; variables outside model.vars are false.
bool valid_in_char_model(const CharModel& model, const Formula& phi);

/// Frame serialization followed by one `cluster: {..}` line per point.
void write_char_model(std::ostream& os, const CharModel& model);

}  // namespace pretab

#endif  // PRETAB_CHARMODEL_HPP_
