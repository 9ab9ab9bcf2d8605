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

#include <doctest.h>

#include "group.hpp"
#include "test_helpers.hpp"
#include "textio.hpp"

using namespace nilmetric;
using namespace nilmetric::testing;

namespace {

GroupElement make(int dim, std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
    EntryMap m;
    for (const auto& [i, j, v] : entries) {
        if (v != 0) m.emplace(GeneratorIndex{i, j}, BigInt(v));
    }
    return GroupElement(dim, std::move(m));
}

}  // namespace

// The commutator convention [x,y] = x^-1 y^-1 x y underpins every identity
// downstream; it is pinned by this matrix computation before anything else.
TEST_CASE("commutator convention gate") {
    for (int dim = 3; dim <= 6; ++dim) {
        for (int i = 1; i < dim; ++i) {
            for (int k = i + 1; k < dim; ++k) {
                for (int j = k + 1; j <= dim; ++j) {
                    GroupElement a = generator(dim, {i, k}, BigInt(1));
                    GroupElement b = generator(dim, {k, j}, BigInt(1));
                    GroupElement c = commutator(a, b);
                    CHECK(c == generator(dim, {i, j}, BigInt(1)));
                    // dense-oracle cross check of the same identity
                    Dense lhs = dense_mul(dense_mul(dense_of(inverse(a)), dense_of(inverse(b))),
                                          dense_mul(dense_of(a), dense_of(b)));
                    CHECK(element_of(lhs) == c);
                }
            }
        }
    }
}

TEST_CASE("identity and generator basics") {
    CHECK(identity(3).is_identity());
    CHECK(identity(3).dim() == 3);
    CHECK_THROWS_AS(identity(1), Error);
    CHECK(normal_form(identity(4)).exponents.empty());

    GroupElement g = generator(3, {1, 2}, BigInt(1));
    CHECK(g.entry(1, 2) == BigInt(1));
    CHECK(g.entries().size() == 1);
    CHECK(generator(3, {1, 3}, BigInt(-5)).entry(1, 3) == BigInt(-5));
    CHECK_THROWS_AS(generator(3, {2, 2}, BigInt(1)), Error);
    CHECK_THROWS_AS(generator(3, {0, 2}, BigInt(1)), Error);
    CHECK_THROWS_AS(generator(3, {1, 4}, BigInt(1)), Error);

    // a_{24}^2 as a product of two copies
    GroupElement g24 = generator(4, {2, 4}, BigInt(1));
    CHECK(multiply(g24, g24) == generator(4, {2, 4}, BigInt(2)));
}

TEST_CASE("multiply examples") {
    GroupElement e12 = generator(3, {1, 2}, BigInt(1));
    GroupElement e23 = generator(3, {2, 3}, BigInt(1));
    CHECK(multiply(e12, e23) == make(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}));
    CHECK(multiply(e23, e12) == make(3, {{1, 2, 1}, {2, 3, 1}}));
    CHECK_THROWS_AS(multiply(identity(3), identity(4)), Error);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        GroupElement x = random_element(5, 1000000, rng);
        CHECK(multiply(identity(5), x) == x);
        CHECK(multiply(x, identity(5)) == x);
        CHECK(multiply(x, inverse(x)) == identity(5));
        CHECK(multiply(inverse(x), x) == identity(5));
    }
}

TEST_CASE("multiply agrees with the dense oracle") {
    std::mt19937_64 rng(29);
    for (int dim = 2; dim <= 6; ++dim) {
        for (int t = 0; t < 100; ++t) {
            GroupElement x = random_element(dim, 1000000, rng);
            GroupElement y = random_element(dim, 1000000, rng);
            CHECK(multiply(x, y) == element_of(dense_mul(dense_of(x), dense_of(y))));
        }
    }
}

TEST_CASE("group axioms on random samples") {
    std::mt19937_64 rng(31);
    for (int dim = 2; dim <= 6; ++dim) {
        for (int t = 0; t < 60; ++t) {
            GroupElement x = random_element(dim, 1000000, rng);
            GroupElement y = random_element(dim, 1000000, rng);
            GroupElement z = random_element(dim, 1000000, rng);
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
    }
}

TEST_CASE("inverse examples") {
    CHECK(inverse(generator(3, {1, 2}, BigInt(1))) == generator(3, {1, 2}, BigInt(-1)));
    CHECK(inverse(identity(5)) == identity(5));
    CHECK(inverse(make(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}})) ==
          make(3, {{1, 2, -1}, {2, 3, -1}}));
}

TEST_CASE("word normalization and length") {
    Word w;
    w.append({1, 2}, BigInt(2));
    w.append({1, 2}, BigInt(3));
    w.append({2, 3}, BigInt(-1));
    w.append({2, 3}, BigInt(1));
    w.append({1, 3}, BigInt(4));
    CHECK(w.letters().size() == 2);  // merged, cancelled
    CHECK(w.length() == BigInt(9));
    CHECK(w.inverse().length() == BigInt(9));
    CHECK(evaluate_word(w.inverse(), 3) == inverse(evaluate_word(w, 3)));
    CHECK(evaluate_word(Word(), 3) == identity(3));

    Word ab;
    ab.append({1, 2}, BigInt(1));
    ab.append({2, 3}, BigInt(1));
    CHECK(evaluate_word(ab, 3) == make(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}));
    CHECK_THROWS_AS(evaluate_word(ab, 2), Error);
}

TEST_CASE("generator order") {
    CHECK(generator_order({1, 3}, {2, 3}) > 0);
    CHECK(generator_order({2, 3}, {1, 2}) > 0);
    CHECK(generator_order({1, 2}, {1, 2}) == 0);
    CHECK(generator_order({1, 2}, {2, 4}) < 0);
    // all_generators comes back strictly decreasing
    for (int dim = 2; dim <= 6; ++dim) {
        auto gens = all_generators(dim);
        CHECK(static_cast<int>(gens.size()) == dim * (dim - 1) / 2);
        for (std::size_t t = 1; t < gens.size(); ++t) {
            CHECK(generator_order(gens[t - 1], gens[t]) > 0);
        }
    }
}

TEST_CASE("normal form round trip") {
    CHECK(normal_form(make(3, {{1, 3, 7}})).exponents ==
          make(3, {{1, 3, 7}}).entries());
    std::mt19937_64 rng(37);
    for (int t = 0; t < 1000; ++t) {
        int dim = 3 + static_cast<int>(rng() % 3);
        GroupElement x = random_element(dim, 1000000000, rng);
        NormalForm nf = normal_form(x);
        CHECK(evaluate_word(nf.word(), dim) == x);
    }
}

TEST_CASE("Heisenberg matrix correspondence") {
    HeisenbergForm h1;
    h1.k = 1;
    h1.a_exps = {BigInt(1)};
    h1.b_exps = {BigInt(0)};
    CHECK(heisenberg_to_matrix(h1) == generator(3, {1, 2}, BigInt(1)));

    HeisenbergForm h2;
    h2.k = 2;
    h2.a_exps = {BigInt(0), BigInt(0)};
    h2.b_exps = {BigInt(0), BigInt(0)};
    h2.c_exp = BigInt(3);
    CHECK(heisenberg_to_matrix(h2) == make(4, {{1, 4, 3}}));

    CHECK(matrix_to_heisenberg(identity(4), 2) == HeisenbergForm{2,
          {BigInt(0), BigInt(0)}, {BigInt(0), BigInt(0)}, BigInt(0)});
    HeisenbergForm m1 = matrix_to_heisenberg(make(4, {{2, 4, 5}}), 2);
    CHECK(m1.b_exps[0] == BigInt(5));
    CHECK_THROWS_AS(matrix_to_heisenberg(make(4, {{2, 3, 1}}), 2), Error);
    CHECK_THROWS_AS(matrix_to_heisenberg(identity(4), 3), Error);

    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        int k = 1 + static_cast<int>(rng() % 4);
        HeisenbergForm h;
        h.k = k;
        std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
        for (int i = 0; i < k; ++i) {
            h.a_exps.push_back(BigInt(dist(rng)));
            h.b_exps.push_back(BigInt(dist(rng)));
        }
        h.c_exp = BigInt(dist(rng));
        CHECK(matrix_to_heisenberg(heisenberg_to_matrix(h), k) == h);
    }
}

TEST_CASE("presentation relations hold as matrices") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& rel : t_relators(n)) {
            CHECK(evaluate_word(rel, n) == identity(n));
        }
    }
    for (int k = 1; k <= 4; ++k) {
        for (const auto& rel : h_relators(k)) {
            CHECK(evaluate_word(rel, k + 2) == identity(k + 2));
        }
    }
}

TEST_CASE("canonical encoding round trip and injectivity") {
    std::mt19937_64 rng(43);
    std::map<std::vector<std::uint8_t>, GroupElement> seen;
    for (int t = 0; t < 500; ++t) {
        int dim = 2 + static_cast<int>(rng() % 5);
        GroupElement x = random_element(dim, 1000000000000LL, rng);
        auto enc = x.canonical_encoding();
        CHECK(GroupElement::from_encoding(enc) == x);
        auto it = seen.find(enc);
        if (it != seen.end()) CHECK(it->second == x);
        seen.emplace(std::move(enc), x);
    }
    // negative vs positive values must encode differently
    CHECK(generator(3, {1, 2}, BigInt(1)).canonical_encoding() !=
          generator(3, {1, 2}, BigInt(-1)).canonical_encoding());
}

TEST_CASE("word text round trip") {
    Word w = parse_word("a[1,2]^1 a[2,3]^1", 3);
    CHECK(evaluate_word(w, 3) == make(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}));
    CHECK(parse_word(format_word(w), 3) == w);
    CHECK(format_word(normal_form(evaluate_word(w, 3)).word()) == "a[1,3]^1 a[2,3]^1 a[1,2]^1");

    Word hw = parse_word("c^3", 3, 1);
    CHECK(evaluate_word(hw, 3) == make(3, {{1, 3, 3}}));
    CHECK(format_word(hw, 1) == "c^3");
    Word hw2 = parse_word("a_1^2 b_1^-1 c", 4, 2);
    CHECK(format_word(hw2, 2) == "a_1^2 b_1^-1 c^1");
    CHECK(parse_word(format_word(hw2, 2), 4, 2) == hw2);

    CHECK_THROWS_AS(parse_word("a[1,2", 3), Error);
    CHECK_THROWS_AS(parse_word("b_1", 3, 0), Error);
    CHECK_THROWS_AS(parse_word("a[1,2]^x", 3), Error);
    CHECK_THROWS_AS(parse_word("a[1,5]", 3), Error);
    CHECK_THROWS_AS(parse_word("a[999999999999,2]", 3), Error);
    CHECK(parse_word("", 3).empty());
    // exponents beyond int64 parse exactly
    Word big = parse_word("a[1,2]^123456789012345678901234567890", 3);
    CHECK(big.length() == BigInt::from_string("123456789012345678901234567890"));
}

TEST_CASE("element json round trip") {
    GroupElement x = make(3, {{1, 3, 9}});
    CHECK(element_from_json(element_to_json(x)) == x);
    CHECK(element_from_json("{\"dim\":3,\"entries\":[[1,3,9]]}") == x);
    // big values survive through the string form
    GroupElement big(4, [] {
        EntryMap m;
        m.emplace(GeneratorIndex{1, 4}, BigInt::from_string("123456789012345678901234567890"));
        return m;
    }());
    CHECK(element_from_json(element_to_json(big)) == big);
    CHECK_THROWS_AS(element_from_json("{\"dim\":3,\"entries\":[[1,3,9],[1,3,2]]}"), Error);
    CHECK_THROWS_AS(element_from_json("{\"entries\":[]}"), Error);
    CHECK_THROWS_AS(element_from_json("not json"), Error);
    CHECK_THROWS_AS(element_from_json("{\"dim\":3,\"entries\":[[3,1,9]]}"), Error);
}
