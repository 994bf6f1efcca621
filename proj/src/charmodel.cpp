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

#include "pretab/charmodel.hpp"

#include <map>
#include <ostream>

namespace pretab {

namespace {

void add_point(CharModel& cm, int layer, unsigned val, std::vector<int> antichain) {
  CharCluster c;
  c.id = static_cast<int>(cm.clusters.size());
  c.layer = layer;
  c.valuation = val;
  c.antichain = std::move(antichain);
  cm.clusters.push_back(std::move(c));
}

// Points co-covering every nonempty subset of `below`, with every valuation,
// except a singleton {u} carrying u's own valuation (it would duplicate u).
void add_cover_layer(CharModel& cm, int layer, const std::vector<int>& below) {
  const unsigned vals = 1U << cm.n;
  const std::size_t k = below.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> antichain;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) antichain.push_back(below[i]);
    }
    for (unsigned v = 0; v < vals; ++v) {
      if (antichain.size() == 1 && cm.clusters[antichain[0]].valuation == v) continue;
      add_point(cm, layer, v, antichain);
    }
  }
}

}  // namespace

std::vector<int> CharModel::layer(int l) const {
  std::vector<int> out;
  for (const auto& c : clusters) {
    if (c.layer == l) out.push_back(c.id);
  }
  return out;
}

CharModel build_char_model(const std::vector<std::string>& vars, int layers,
                           const CharModelLimits& limits) {
  const int n = static_cast<int>(vars.size());
  if (layers != 2 && layers != 3) throw std::invalid_argument("layers must be 2 or 3");
  const int cap = layers == 2 ? limits.max_n_two_layers : limits.max_n_three_layers;
  if (n > cap) {
    throw CharModelTooLarge("characteristic model with " + std::to_string(n) + " variables and " +
                            std::to_string(layers) + " layers exceeds the limit n <= " +
                            std::to_string(cap));
  }
  CharModel cm;
  cm.n = n;
  cm.layers = layers;
  cm.vars = vars;
  const unsigned vals = 1U << n;
  for (unsigned v = 0; v < vals; ++v) add_point(cm, 1, v, {});

  if (layers == 2) {
    add_cover_layer(cm, 2, cm.layer(1));
  } else {
    // One component per top: the points below the top that are not
    // bisimilar to it, then covers of those.
    std::vector<std::vector<int>> middles(vals);
    for (unsigned t = 0; t < vals; ++t) {
      for (unsigned v = 0; v < vals; ++v) {
        if (v == t) continue;
        middles[t].push_back(static_cast<int>(cm.clusters.size()));
        add_point(cm, 2, v, {static_cast<int>(t)});
      }
    }
    for (unsigned t = 0; t < vals; ++t) add_cover_layer(cm, 3, middles[t]);
  }

  const int size = cm.size();
  Frame frame(size);
  for (const auto& c : cm.clusters) {
    frame.relate(c.id, c.id);
    for (int u : c.antichain) {
      for (int w : frame.successors(u).members()) frame.relate(c.id, w);
    }
  }
  Valuation val;
  for (int i = 0; i < n; ++i) {
    WorldSet s(size);
    for (const auto& c : cm.clusters) {
      if ((c.valuation >> i) & 1U) s.set(c.id);
    }
    val.emplace(vars[i], s);
  }
  cm.model = FrameModel{std::move(frame), std::move(val)};
  return cm;
}

CharModel build_char_model(int n, int layers, const CharModelLimits& limits) {
  if (n < 0) throw std::invalid_argument("variable count must be non-negative");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("p" + std::to_string(i));
  return build_char_model(vars, layers, limits);
}

Formula cluster_defining_formula(const CharModel& cm, int id) {
  if (id < 0 || id >= cm.size()) throw UnknownWorldError("no point " + std::to_string(id));
  // delta(w) = chi & [](chi | delta(u) for u strictly above),
  // chi = literals of w & <>delta(u) for u strictly above.
  std::map<int, Formula> memo;
  auto delta = [&](auto&& self, int w) -> Formula {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    const auto& c = cm.clusters[w];
    std::vector<Formula> chi;
    for (int i = 0; i < cm.n; ++i) {
      const Formula x = Formula::var(cm.vars[i]);
      chi.push_back((c.valuation >> i) & 1U ? x : Formula::neg(x));
    }
    std::vector<Formula> above;
    for (int u : cm.model.frame.successors(w).members()) {
      if (u != w) above.push_back(self(self, u));
    }
    for (const auto& d : above) chi.push_back(Formula::diamond(d));
    const Formula chi_f = Formula::conj_all(chi);
    std::vector<Formula> allowed{chi_f};
    allowed.insert(allowed.end(), above.begin(), above.end());
    const Formula out = Formula::conj(chi_f, Formula::box(Formula::disj_all(allowed)));
    memo.emplace(w, out);
    return out;
  };
  return delta(delta, id);
}

bool valid_in_char_model(const CharModel& cm, const Formula& phi) {
  return truth_set(cm.model, phi).count() == cm.size();
}

void write_char_model(std::ostream& os, const CharModel& cm) {
  write_frame(os, cm.model.frame);
  for (const auto& c : cm.clusters) {
    os << "cluster: {";
    bool first = true;
    for (int i = 0; i < cm.n; ++i) {
      if (!((c.valuation >> i) & 1U)) continue;
      if (!first) os << ',';
      os << cm.vars[i];
      first = false;
    }
    os << "}\n";
  }
}

}  // namespace pretab
