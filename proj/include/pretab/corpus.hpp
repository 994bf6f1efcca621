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

#ifndef PRETAB_CORPUS_HPP_
#define PRETAB_CORPUS_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "pretab/decision.hpp"
#include "pretab/finitary.hpp"
#include "pretab/formula.hpp"
#include "pretab/unify.hpp"

namespace pretab {

struct RandomFormulaOptions {
  std::vector<std::string> vars = {"x", "y"};
  int max_modal_depth = 2;
  /// Nesting depth of connectives, modal or not.
  int max_height = 4;
};

/// Seeded random formula; the same engine state gives the same formula.
Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options = {});

/// Twenty classically unsatisfiable formulas, so without ground unifiers.
std::vector<Formula> contradiction_corpus();

struct CorpusOptions {
  MemberOptions member;
  GeneralityOptions generality;
  FinitaryOptions finitary;
  /// Largest frame parameter in the axiom suite.
  int max_frame = 6;
};

struct CorpusEntry {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suite names in report order.
const std::vector<std::string>& corpus_suites();

/// Runs one suite, or all when `suite` is empty. Throws invalid_argument for
/// an unknown suite name.
std::vector<CorpusEntry> run_corpus(const std::string& suite, const CorpusOptions& options = {});

/// One line per entry and a closing count; no timings, so reruns compare
/// byte for byte.
void write_corpus_report(std::ostream& os, const std::vector<CorpusEntry>& entries);

}  // namespace pretab

#endif  // PRETAB_CORPUS_HPP_
