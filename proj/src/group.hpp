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

#ifndef NILMETRIC_GROUP_HPP
#define NILMETRIC_GROUP_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace nilmetric {

enum class ErrorCode {
    invalid_argument,
    invalid_dimension,
    invalid_generator,
    invalid_span,
    invalid_embedding,
    dimension_mismatch,
    not_in_subgroup,
    parse_error,
    resource_limit,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Index of the elementary generator a_{ij}, 1 <= i < j <= dim.
struct GeneratorIndex {
    int i = 0;
    int j = 0;

    int span() const { return j - i; }
    bool operator==(const GeneratorIndex& o) const { return i == o.i && j == o.j; }
    bool operator!=(const GeneratorIndex& o) const { return !(*this == o); }
};

// Total order on generators: larger column first; within a column, farther
// from the diagonal first. Decreasing-order products are entry-exact: no
// generator in such a product feeds the row of a later one, so the matrix of
// prod a_ij^{m_ij} has exactly entry m_ij at (i,j).
// Returns -1 / 0 / +1 for g1 < g2 / equal / g1 > g2.
int generator_order(const GeneratorIndex& g1, const GeneratorIndex& g2);

// Comparator putting the largest generator first, for ordered entry maps.
struct GeneratorDecreasing {
    bool operator()(const GeneratorIndex& a, const GeneratorIndex& b) const {
        return generator_order(a, b) > 0;
    }
};

using EntryMap = std::map<GeneratorIndex, BigInt, GeneratorDecreasing>;

// Unipotent upper-triangular integer matrix: implicit unit diagonal, sparse
// strictly-upper entries, exact arithmetic. Immutable once built.
class GroupElement {
public:
    explicit GroupElement(int dim);
    GroupElement(int dim, EntryMap entries);

    int dim() const { return dim_; }
    const EntryMap& entries() const { return entries_; }
    const BigInt& entry(int i, int j) const;  // zero if absent
    bool is_identity() const { return entries_.empty(); }

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    // Canonical injective byte encoding: dim, then nonzero entries in
    // decreasing generator order, each as (i, j, signed value), LEB128
    // variable-length coded. Used as a hash key and in ball files.
    std::vector<std::uint8_t> canonical_encoding() const;
    static GroupElement from_encoding(const std::vector<std::uint8_t>& bytes);

private:
    int dim_;
    EntryMap entries_;  // nonzero values only
};

GroupElement identity(int dim);
GroupElement generator(int dim, GeneratorIndex g, const BigInt& e);
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

struct Letter {
    GeneratorIndex gen;
    BigInt exp;  // nonzero
};

// Word over the elementary generators, run-length encoded: adjacent letters
// with the same generator are merged and zero exponents dropped, so the
// stored form is canonical. length() is the generating-set word length
// sum |exp|.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);  // normalizes

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    BigInt length() const;

    void append(const GeneratorIndex& g, const BigInt& e);  // merges with tail
    void append(const Word& w);

    Word inverse() const;

    bool operator==(const Word& o) const;

private:
    std::vector<Letter> letters_;
};

GroupElement evaluate_word(const Word& w, int dim);

// Exponents of the unique ordered product over decreasing generators; by the
// normal form correspondence these are exactly the matrix entries.
struct NormalForm {
    int dim = 0;
    EntryMap exponents;

    Word word() const;  // letters in decreasing generator order
    bool operator==(const NormalForm& o) const { return dim == o.dim && exponents == o.exponents; }
};

NormalForm normal_form(const GroupElement& x);

// Heisenberg coordinates: the (k+2)x(k+2) matrix with first row
// (1, n_1, ..., n_k, p) and last column (p, m_1, ..., m_k, 1).
struct HeisenbergForm {
    int k = 0;
    std::vector<BigInt> a_exps;  // n_1..n_k
    std::vector<BigInt> b_exps;  // m_1..m_k
    BigInt c_exp;                // p

    bool operator==(const HeisenbergForm& o) const;
};

GroupElement heisenberg_to_matrix(const HeisenbergForm& h);
// Requires x of dim k+2 with zero entries outside the first row and last
// column; throws not_in_subgroup otherwise.
HeisenbergForm matrix_to_heisenberg(const GroupElement& x, int k);

// Generator aliases of the Heisenberg presentation inside T_{k+2}.
GeneratorIndex heis_a(int i, int k);  // a_i -> (1, i+1)
GeneratorIndex heis_b(int i, int k);  // b_i -> (i+1, k+2)
GeneratorIndex heis_c(int k);         // c   -> (1, k+2)

// Commutator with the convention [x, y] = x^-1 y^-1 x y.
GroupElement commutator(const GroupElement& x, const GroupElement& y);

// Relators of the two presentations, as words that must evaluate to the
// identity. Used by presentation-soundness checks and homomorphism tests.
std::vector<Word> t_relators(int n);
std::vector<Word> h_relators(int k);

// All generator indices of T_n ordered decreasingly, or the first diagonal only.
std::vector<GeneratorIndex> all_generators(int dim);
std::vector<GeneratorIndex> first_diagonal_generators(int dim);

void check_dim(int dim);                        // dim >= 2
void check_generator(int dim, GeneratorIndex g);  // 1 <= i < j <= dim

}  // namespace nilmetric

#endif
