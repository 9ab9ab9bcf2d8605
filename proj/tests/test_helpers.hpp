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

// Test-only oracles, deliberately independent of the code under test:
// dense matrix arithmetic for the group operations, and a literal
// unit-letter implementation of the collection rewriting.

#ifndef NILMETRIC_TEST_HELPERS_HPP
#define NILMETRIC_TEST_HELPERS_HPP

#include <list>
#include <random>
#include <utility>
#include <vector>

#include "collection.hpp"
#include "group.hpp"

namespace nilmetric::testing {

using Dense = std::vector<std::vector<BigInt>>;

inline Dense dense_identity(int dim) {
    Dense m(dim, std::vector<BigInt>(dim));
    for (int i = 0; i < dim; ++i) m[i][i] = BigInt(1);
    return m;
}

inline Dense dense_of(const GroupElement& x) {
    Dense m = dense_identity(x.dim());
    for (const auto& [g, v] : x.entries()) m[g.i - 1][g.j - 1] = v;
    return m;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    int n = static_cast<int>(a.size());
    Dense r(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < n; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return r;
}

inline GroupElement element_of(const Dense& m) {
    int n = static_cast<int>(m.size());
    EntryMap entries;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!m[i][j].is_zero()) entries.emplace(GeneratorIndex{i + 1, j + 1}, m[i][j]);
        }
    }
    return GroupElement(n, std::move(entries));
}

inline bool dense_equal(const Dense& a, const Dense& b) { return a == b; }

// random element with entries in [-magnitude, magnitude]
inline GroupElement random_element(int dim, std::int64_t magnitude, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-magnitude, magnitude);
    EntryMap entries;
    for (int i = 1; i < dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) {
            BigInt v(dist(rng));
            if (!v.is_zero()) entries.emplace(GeneratorIndex{i, j}, v);
        }
    }
    return GroupElement(dim, std::move(entries));
}

struct UnitCollectResult {
    NormalForm result;
    std::map<GeneratorIndex, BigInt, GeneratorDecreasing> counts;  // instances introduced
    std::uint64_t swaps = 0;
};

// Literal reference collection: every letter expanded to unit exponents, no
// cancellation, leftmost out-of-order adjacent pair swapped one step at a
// time. Only usable for small inputs.
inline UnitCollectResult collect_unit_reference(const Word& w, int dim) {
    UnitCollectResult out;
    std::list<std::pair<GeneratorIndex, int>> letters;
    for (const auto& l : w.letters()) {
        std::int64_t e = l.exp.to_int64();
        int sign = e >= 0 ? 1 : -1;
        for (std::int64_t t = 0; t < (e >= 0 ? e : -e); ++t) {
            letters.push_back({l.gen, sign});
            out.counts[l.gen] += BigInt(1);
        }
    }
    auto cur = letters.begin();
    while (cur != letters.end()) {
        auto next = std::next(cur);
        if (next == letters.end()) break;
        int ord = generator_order(cur->first, next->first);
        if (ord < 0) {
            // u v -> v u [u,v]
            auto u = *cur;
            auto v = *next;
            std::swap(*cur, *next);
            ++out.swaps;
            if (u.first.j == v.first.i) {
                GeneratorIndex c{u.first.i, v.first.j};
                letters.insert(std::next(next), {c, u.second * v.second});
                out.counts[c] += BigInt(1);
            } else if (u.first.i == v.first.j) {
                GeneratorIndex c{v.first.i, u.first.j};
                letters.insert(std::next(next), {c, -u.second * v.second});
                out.counts[c] += BigInt(1);
            }
            if (cur != letters.begin()) --cur;
        } else {
            ++cur;
        }
    }
    EntryMap exps;
    for (const auto& [g, sign] : letters) {
        auto [it, inserted] = exps.emplace(g, BigInt(sign));
        if (!inserted) it->second += BigInt(sign);
    }
    for (auto it = exps.begin(); it != exps.end();) {
        it = it->second.is_zero() ? exps.erase(it) : std::next(it);
    }
    out.result = NormalForm{dim, std::move(exps)};
    return out;
}

}  // namespace nilmetric::testing

#endif
