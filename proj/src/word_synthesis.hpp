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

#ifndef NILMETRIC_WORD_SYNTHESIS_HPP
#define NILMETRIC_WORD_SYNTHESIS_HPP

#include <cstdint>
#include <vector>

#include "group.hpp"

namespace nilmetric {

inline constexpr std::int64_t kDefaultWaringCap = 10000000;     // k >= 2
inline constexpr std::int64_t kFourSquaresCap = 1000000000000;  // 10^12

// |target| = sum of parts[t]^k, parts positive and descending, count minimal.
struct PowerDecomposition {
    BigInt target;
    unsigned k = 1;
    std::vector<BigInt> parts;
    int sign = 1;

    BigInt reconstruct() const;  // sign * sum parts^k
};

// Minimal decomposition of p >= 0 into at most four squares.
PowerDecomposition four_squares(const BigInt& p);

// Minimal decomposition of m >= 0 into k-th powers, k <= 6, m <= cap
// (cap = 0 picks the default). Throws resource_limit above the cap.
PowerDecomposition waring_decompose(const BigInt& m, unsigned k, std::int64_t cap = 0);

// Fully expanded iterated commutator [a_{i,i+1}^q, ..., a_{j-1,j}^q], which
// evaluates to the single entry sign * q^(j-i) at (i,j). A negative sign
// switches the first two arguments, inverting the value. Requires j-i >= 2.
Word commutator_word(int i, int j, const BigInt& q, int sign, int dim);

// Word evaluating to x whose length is within a dimension-dependent constant
// factor of the T estimate: first-diagonal terms stay literal, every deeper
// term is split into k-th powers and expanded through commutators.
Word short_word(const GroupElement& x);

// Same construction for a Heisenberg element, in the alias generators of
// T_{k+2}: the central power becomes at most four commutators
// [a_1^q, b_1^q], so its contribution is at most 16 sqrt|p|.
Word short_word_H(const HeisenbergForm& h);

}  // namespace nilmetric

#endif
