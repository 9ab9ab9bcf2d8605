// Copyright 2026 the nilmetric authors
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

#ifndef NILMETRIC_TEXTIO_HPP
#define NILMETRIC_TEXTIO_HPP

#include <string>

#include "group.hpp"

namespace nilmetric {

// Word token syntax: whitespace-separated `a[i,j]^e` tokens, `^e` optional
// (defaults to 1), e a signed decimal of any size. With heis_k > 0 the
// Heisenberg aliases `a_i`, `b_i`, `c` (optionally with `^e`) are accepted
// too and resolve inside T_{heis_k + 2}.
Word parse_word(const std::string& text, int dim, int heis_k = 0);

// Prints every letter as `a[i,j]^e`; with heis_k > 0, letters matching the
// Heisenberg generator aliases print as `a_i^e`, `b_i^e`, `c^e`.
// parse_word(format_word(w)) == w for every word.
std::string format_word(const Word& w, int heis_k = 0);

// Element documents: {"dim":3,"entries":[[1,3,9]]}. Entry values outside the
// exact double range are written as decimal strings; both forms are accepted
// on input.
GroupElement element_from_json(const std::string& text);
std::string element_to_json(const GroupElement& x);

// {"k":2,"a":[...],"b":[...],"p":...} with the same number policy.
std::string heisenberg_to_json(const HeisenbergForm& h);
HeisenbergForm heisenberg_from_json(const std::string& text);

std::string hex_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> hex_decode(const std::string& s);

}  // namespace nilmetric

#endif
