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

#ifndef PRETAB_LOGIC_HPP_
#define PRETAB_LOGIC_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace pretab {

class Formula;

/// The five pretabular extensions of S4.
enum class Logic { PM1, PM2, PM3, PM4, PM5 };

inline constexpr std::array<Logic, 5> kAllLogics = {Logic::PM1, Logic::PM2, Logic::PM3,
                                                     Logic::PM4, Logic::PM5};

std::string to_string(Logic logic);
/// Accepts `pm1`..`pm5`, case-insensitive.
Logic parse_logic(std::string_view text);

/// Named axiom of an axiomatisation.
struct Axiom {
  std::string name;
  std::string text;
};

/// Axioms of `logic` (S4 base included).
std::vector<Axiom> axioms(Logic logic);

/// Frequently used schemata.
namespace schema {
Formula grz();       // [](]([](p -> []p) -> p) -> p
Formula lemmon();    // []([]x1 -> x2) | []([]x2 -> x1)
Formula mckinsey();  // []<>p <-> <>[]p
Formula s43();       // []([]p -> q) | []([]q -> p)
Formula sigma2();    // []p | []([]p -> []q | []<>~q)
Formula five();      // p -> []<>p
}  // namespace schema

}  // namespace pretab

#endif  // PRETAB_LOGIC_HPP_
