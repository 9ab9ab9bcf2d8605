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

#include <cmath>

#include "collection.hpp"
#include "quasimetric.hpp"
#include "test_helpers.hpp"
#include "word_synthesis.hpp"

using namespace nilmetric;
using namespace nilmetric::testing;

namespace {

// exhaustive DP for the minimal number of k-th powers; the independent
// oracle for the decomposition routines
std::vector<int> waring_dp(int max_m, int k) {
    std::vector<int> dp(max_m + 1, 1 << 20);
    dp[0] = 0;
    for (int q = 1;; ++q) {
        std::int64_t p = 1;
        for (int t = 0; t < k; ++t) p *= q;
        if (p > max_m) break;
        for (int v = static_cast<int>(p); v <= max_m; ++v) {
            dp[v] = std::min(dp[v], dp[v - p] + 1);
        }
    }
    return dp;
}

BigInt word_length(const Word& w) { return w.length(); }

}  // namespace

TEST_CASE("four squares examples") {
    PowerDecomposition d7 = four_squares(BigInt(7));
    CHECK(d7.parts == std::vector<BigInt>{BigInt(2), BigInt(1), BigInt(1), BigInt(1)});
    CHECK(four_squares(BigInt(4)).parts == std::vector<BigInt>{BigInt(2)});
    CHECK(four_squares(BigInt(0)).parts.empty());
    CHECK(four_squares(BigInt(1)).parts == std::vector<BigInt>{BigInt(1)});
    CHECK_THROWS_AS(four_squares(BigInt(-1)), Error);
}

TEST_CASE("four squares is exact and minimal against the DP oracle") {
    std::vector<int> dp = waring_dp(4000, 2);
    for (int p = 0; p <= 4000; ++p) {
        PowerDecomposition d = four_squares(BigInt(p));
        CHECK(d.reconstruct() == BigInt(p));
        CHECK(static_cast<int>(d.parts.size()) == dp[p]);
        for (const auto& q : d.parts) {
            CHECK(q.sign() > 0);
            CHECK(q * q <= BigInt(p));
        }
        // descending
        for (std::size_t t = 1; t < d.parts.size(); ++t) CHECK(d.parts[t] <= d.parts[t - 1]);
    }
}

TEST_CASE("four squares on larger inputs") {
    std::mt19937_64 rng(89);
    for (int t = 0; t < 300; ++t) {
        std::int64_t p = static_cast<std::int64_t>(rng() % 1000000000000LL);
        PowerDecomposition d = four_squares(BigInt(p));
        CHECK(d.reconstruct() == BigInt(p));
        CHECK(d.parts.size() <= 4);
    }
    CHECK_THROWS_AS(four_squares(BigInt::from_string("10000000000000")), Error);
}

TEST_CASE("waring decomposition examples and oracle agreement") {
    // 23 is the classical worst case for cubes
    PowerDecomposition d23 = waring_decompose(BigInt(23), 3);
    CHECK(d23.parts.size() == 9);
    CHECK(d23.parts[0] == BigInt(2));
    CHECK(d23.parts[1] == BigInt(2));
    for (std::size_t t = 2; t < 9; ++t) CHECK(d23.parts[t] == BigInt(1));
    CHECK(d23.reconstruct() == BigInt(23));

    CHECK(waring_decompose(BigInt(5), 1).parts == std::vector<BigInt>{BigInt(5)});
    CHECK(waring_decompose(BigInt(16), 4).parts == std::vector<BigInt>{BigInt(2)});
    CHECK(waring_decompose(BigInt(0), 3).parts.empty());

    for (int k = 2; k <= 4; ++k) {
        std::vector<int> dp = waring_dp(2000, k);
        for (int m = 0; m <= 2000; ++m) {
            PowerDecomposition d = waring_decompose(BigInt(m), static_cast<unsigned>(k));
            CHECK(d.reconstruct() == BigInt(m));
            CHECK(static_cast<int>(d.parts.size()) == dp[m]);
        }
    }

    CHECK_THROWS_AS(waring_decompose(BigInt(10), 7), Error);
    CHECK_THROWS_AS(waring_decompose(BigInt::from_string("100000000"), 3), Error);
    CHECK_THROWS_AS(waring_decompose(BigInt(-3), 2), Error);
}

TEST_CASE("commutator word examples") {
    Word w = commutator_word(1, 3, BigInt(2), 1, 3);
    CHECK(word_length(w) == BigInt(8));
    REQUIRE(w.letters().size() == 4);
    CHECK(w.letters()[0].gen == GeneratorIndex{1, 2});
    CHECK(w.letters()[0].exp == BigInt(-2));
    CHECK(w.letters()[1].gen == GeneratorIndex{2, 3});
    CHECK(w.letters()[1].exp == BigInt(-2));
    CHECK(w.letters()[2].exp == BigInt(2));
    CHECK(w.letters()[3].exp == BigInt(2));
    CHECK(evaluate_word(w, 3) == generator(3, {1, 3}, BigInt(4)));

    CHECK(evaluate_word(commutator_word(1, 3, BigInt(1), 1, 3), 3) ==
          generator(3, {1, 3}, BigInt(1)));
    CHECK(evaluate_word(commutator_word(1, 4, BigInt(2), 1, 4), 4) ==
          generator(4, {1, 4}, BigInt(8)));

    CHECK_THROWS_AS(commutator_word(1, 2, BigInt(2), 1, 3), Error);
    CHECK_THROWS_AS(commutator_word(1, 3, BigInt(0), 1, 3), Error);
    CHECK_THROWS_AS(commutator_word(1, 3, BigInt(2), 0, 3), Error);
    CHECK_THROWS_AS(commutator_word(1, 5, BigInt(2), 1, 4), Error);
}

TEST_CASE("commutator identity over all spans, bases and signs") {
    for (int span = 2; span <= 5; ++span) {
        int dim = span + 1;
        for (int q = 1; q <= 30; ++q) {
            BigInt target = BigInt(q).pow_u(static_cast<unsigned>(span));
            for (int sign : {1, -1}) {
                Word w = commutator_word(1, dim, BigInt(q), sign, dim);
                GroupElement expect =
                    generator(dim, {1, dim}, sign > 0 ? target : -target);
                CHECK(evaluate_word(w, dim) == expect);
            }
        }
    }
    // off-corner spans too
    CHECK(evaluate_word(commutator_word(2, 5, BigInt(3), -1, 6), 6) ==
          generator(6, {2, 5}, BigInt(-27)));
}

TEST_CASE("commutator word length is linear in q") {
    for (int span = 2; span <= 5; ++span) {
        int dim = span + 1;
        // L(q) = c_span * q with c_span = 6 * 2^(span-2) - 2
        std::int64_t c = 6 * (1LL << (span - 2)) - 2;
        for (int q : {1, 5, 30}) {
            CHECK(word_length(commutator_word(1, dim, BigInt(q), 1, dim)) ==
                  BigInt(c * q));
        }
    }
}

TEST_CASE("short word examples") {
    // 100 = 10^2: a single commutator of length 40
    GroupElement x = generator(3, {1, 3}, BigInt(100));
    Word w = short_word(x);
    CHECK(word_length(w) == BigInt(40));
    CHECK(evaluate_word(w, 3) == x);

    GroupElement g = generator(4, {2, 4}, BigInt(1));
    CHECK(short_word(g) == normal_form(g).word());
    CHECK(short_word(identity(5)).empty());
}

TEST_CASE("short central words stay within sixteen square roots") {
    // {(1,3): p} in T_3: at most four squares, each commutator 4q letters
    for (std::int64_t p = 0; p <= 2000; ++p) {
        GroupElement x = generator(3, {1, 3}, BigInt(p));
        Word w = short_word(x);
        REQUIRE(evaluate_word(w, 3) == x);
        BigInt len = w.length();
        CHECK(len * len <= BigInt(256) * BigInt(p));
    }
}

TEST_CASE("short word soundness on random elements") {
    std::mt19937_64 rng(97);
    for (int dim = 2; dim <= 6; ++dim) {
        for (int t = 0; t < 1000 / (dim - 1); ++t) {
            GroupElement x = random_element(dim, 1000000, rng);
            CHECK(evaluate_word(short_word(x), dim) == x);
        }
    }
}

TEST_CASE("short word length tracks the estimate across magnitudes") {
    std::mt19937_64 rng(101);
    std::vector<double> lx, ly;
    double worst_ratio = 0;
    for (std::int64_t mag : {100LL, 10000LL, 1000000LL}) {
        for (int dim = 3; dim <= 5; ++dim) {
            for (int t = 0; t < 40; ++t) {
                GroupElement x = random_element(dim, mag, rng);
                if (x.is_identity()) continue;
                double len = word_length(short_word(x)).to_double();
                double e = estimate_T(x).value;
                worst_ratio = std::max(worst_ratio, len / std::max(e, 1.0));
                lx.push_back(std::log(std::max(e, 1.0)));
                ly.push_back(std::log(std::max(len, 1.0)));
            }
        }
    }
    double slope = fit_slope(lx, ly);
    CHECK(slope < 1.05);
    CHECK(worst_ratio < 50.0);  // dimension-dependent constant, no growth
}

TEST_CASE("short word H examples") {
    HeisenbergForm h;
    h.k = 1;
    h.a_exps = {BigInt(0)};
    h.b_exps = {BigInt(0)};
    h.c_exp = BigInt(4);
    Word w = short_word_H(h);
    CHECK(word_length(w) == BigInt(8));
    CHECK(evaluate_word(w, 3) == heisenberg_to_matrix(h));

    HeisenbergForm zero;
    zero.k = 2;
    zero.a_exps = {BigInt(0), BigInt(0)};
    zero.b_exps = {BigInt(0), BigInt(0)};
    CHECK(short_word_H(zero).empty());

    HeisenbergForm h2;
    h2.k = 2;
    h2.a_exps = {BigInt(3), BigInt(0)};
    h2.b_exps = {BigInt(0), BigInt(0)};
    h2.c_exp = BigInt(7);
    Word w2 = short_word_H(h2);
    CHECK(evaluate_word(w2, 4) == heisenberg_to_matrix(h2));
    CHECK(word_length(w2).to_double() <= 3 + 16 * std::sqrt(7.0));
}

TEST_CASE("short word H respects the 16 sqrt p bound, both signs") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 400; ++t) {
        int k = 1 + static_cast<int>(rng() % 3);
        std::uniform_int_distribution<std::int64_t> small(-50, 50);
        std::uniform_int_distribution<std::int64_t> pd(-100000, 100000);
        HeisenbergForm h;
        h.k = k;
        BigInt nm_sum;
        for (int i = 0; i < k; ++i) {
            h.a_exps.push_back(BigInt(small(rng)));
            h.b_exps.push_back(BigInt(small(rng)));
            nm_sum += h.a_exps.back().abs() + h.b_exps.back().abs();
        }
        h.c_exp = BigInt(pd(rng));
        Word w = short_word_H(h);
        CHECK(evaluate_word(w, k + 2) == heisenberg_to_matrix(h));
        // length^2 <= (sum + 16 sqrt|p|)^2, checked in exact arithmetic via
        // (len - sum)^2 <= 256 |p|
        BigInt len = word_length(w);
        BigInt excess = len - nm_sum;
        CHECK(excess * excess <= BigInt(256) * h.c_exp.abs());
    }
}
