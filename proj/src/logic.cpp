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

#include "pretab/logic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pretab/formula.hpp"

namespace pretab {

namespace {

constexpr const char* kGrz = "[]([](p -> []p) -> p) -> p";
constexpr const char* kS43 = "[]([]p -> q) | []([]q -> p)";
constexpr const char* kSigma2 = "[]p | []([]p -> []q | []<>~q)";
constexpr const char* kMcKinsey = "[]<>p <-> <>[]p";
constexpr const char* kFive = "p -> []<>p";

std::vector<Axiom> s4() {
  return {{"K", "[](p -> q) -> []p -> []q"}, {"T", "[]p -> p"}, {"4", "[]p -> [][]p"}};
}

}  // namespace

std::string to_string(Logic logic) {
  switch (logic) {
    case Logic::PM1: return "PM1";
    case Logic::PM2: return "PM2";
    case Logic::PM3: return "PM3";
    case Logic::PM4: return "PM4";
    case Logic::PM5: return "PM5";
  }
  return "?";
}

Logic parse_logic(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pm1") return Logic::PM1;
  if (lower == "pm2") return Logic::PM2;
  if (lower == "pm3") return Logic::PM3;
  if (lower == "pm4") return Logic::PM4;
  if (lower == "pm5") return Logic::PM5;
  throw std::invalid_argument("unknown logic '" + std::string(text) + "' (expected pm1..pm5)");
}

std::vector<Axiom> axioms(Logic logic) {
  std::vector<Axiom> out = s4();
  switch (logic) {
    case Logic::PM1:
      out.push_back({"S4.3", kS43});
      out.push_back({"Grz", kGrz});
      break;
    case Logic::PM2:
      out.push_back({"Grz", kGrz});
      out.push_back({"sigma2", kSigma2});
      break;
    case Logic::PM3:
      out.push_back({"Grz", kGrz});
      // sigma2 with its variables kept apart from r.
      out.push_back({"r|[]([]r->sigma2)", "[]r | []([]r -> []p | []([]p -> []q | []<>~q))"});
      out.push_back({"M", kMcKinsey});
      break;
    case Logic::PM4:
      out.push_back({"sigma2", kSigma2});
      out.push_back({"M", kMcKinsey});
      break;
    case Logic::PM5:
      out.push_back({"5", kFive});
      break;
  }
  return out;
}

namespace schema {
Formula grz() { return parse(kGrz); }
Formula lemmon() { return parse("[]([]x1 -> x2) | []([]x2 -> x1)"); }
Formula mckinsey() { return parse(kMcKinsey); }
Formula s43() { return parse(kS43); }
Formula sigma2() { return parse(kSigma2); }
Formula five() { return parse(kFive); }
}  // namespace schema

}  // namespace pretab
