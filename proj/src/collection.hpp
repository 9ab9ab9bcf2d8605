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

#ifndef NILMETRIC_COLLECTION_HPP
#define NILMETRIC_COLLECTION_HPP

#include <random>
#include <vector>

#include "group.hpp"

namespace nilmetric {

// Record of one collection run. max_counts[(i,j)] is the total number of
// signed instances of a_ij introduced over the whole process (input letters
// plus correction letters, counted with multiplicity |exp|); since the
// process never needs to destroy an instance to make progress, this is the
// peak instance count of the rewriting and the quantity the counting bound
// C_ij * L^(j-i) constrains.
struct CollectionTrace {
    BigInt input_length;
    std::map<GeneratorIndex, BigInt, GeneratorDecreasing> max_counts;
    BigInt swap_count;  // adjacent transpositions, counted letter-by-letter
    NormalForm result;

    const BigInt& max_count(GeneratorIndex g) const;
};

// Rewrites w into the decreasing-order normal form using only the relations
// of the presentation: commuting swaps, and head-to-tail swaps that emit one
// correction generator. Deterministic leftmost strategy: always resolve the
// leftmost out-of-order adjacent pair. Runs of equal generators are moved as
// one block; the trace counts them letter-by-letter.
CollectionTrace collect(const Word& w, int dim);

struct LemmaFit {
    GeneratorIndex gen;
    double min_constant;   // minimal C with count <= C * L^span over samples
    double slope;          // log-log growth of counts against input length
    bool slope_violation;  // slope exceeds span by more than 0.2
};

// Fits the counting bound over a sample of words: for each generator the
// minimal admissible constant, and the fitted log-log slope of the counts
// against input length (requires samples of at least two distinct lengths
// for a meaningful slope; otherwise slope is reported as 0).
std::vector<LemmaFit> verify_lemma_bound(const std::vector<Word>& samples, int dim);

// Uniform random word of `length` unit letters over all generators of T_dim.
Word random_word(int dim, int length, std::mt19937_64& rng);

// Least-squares slope of y against x; helper shared by the experiment code.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nilmetric

#endif
