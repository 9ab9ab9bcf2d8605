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

#include "collection.hpp"

#include <cassert>
#include <cmath>
#include <list>

namespace nilmetric {

namespace {

struct Block {
    GeneratorIndex gen;
    BigInt exp;  // nonzero
};

// Correction letter for rewriting u v -> v u [u,v], with u = a_{ij}^alpha on
// the left and v = a_{kl}^beta on the right. The two head-to-tail cases are
//   j == k:  [u,v] = a_{il}^{alpha beta}
//   i == l:  [u,v] = a_{kj}^{-alpha beta}
// and every other pair commutes.
bool swap_correction(const Block& u, const Block& v, Block& out) {
    if (u.gen.j == v.gen.i) {
        out.gen = GeneratorIndex{u.gen.i, v.gen.j};
        out.exp = u.exp * v.exp;
        return true;
    }
    if (u.gen.i == v.gen.j) {
        out.gen = GeneratorIndex{v.gen.i, u.gen.j};
        out.exp = -(u.exp * v.exp);
        return true;
    }
    return false;
}

#ifndef NDEBUG
// Soundness of one swap as a matrix identity, checked per swap in debug
// builds: u v == v u c.
bool swap_sound(int dim, const Block& u, const Block& v, const Block* c) {
    GroupElement lhs = multiply(generator(dim, u.gen, u.exp), generator(dim, v.gen, v.exp));
    GroupElement rhs = multiply(generator(dim, v.gen, v.exp), generator(dim, u.gen, u.exp));
    if (c != nullptr) rhs = multiply(rhs, generator(dim, c->gen, c->exp));
    return lhs == rhs;
}
#endif

}  // namespace

const BigInt& CollectionTrace::max_count(GeneratorIndex g) const {
    static const BigInt zero;
    auto it = max_counts.find(g);
    return it == max_counts.end() ? zero : it->second;
}

CollectionTrace collect(const Word& w, int dim) {
    check_dim(dim);
    CollectionTrace trace;
    trace.input_length = w.length();

    std::list<Block> blocks;
    for (const auto& l : w.letters()) {
        check_generator(dim, l.gen);
        blocks.push_back(Block{l.gen, l.exp});
        trace.max_counts[l.gen] += l.exp.abs();
    }

    auto cur = blocks.begin();
    while (cur != blocks.end()) {
        auto next = std::next(cur);
        if (next == blocks.end()) break;
        if (cur->gen == next->gen) {
            cur->exp += next->exp;
            blocks.erase(next);
            if (cur->exp.is_zero()) {
                cur = blocks.erase(cur);
            }
            if (cur != blocks.begin()) --cur;
            continue;
        }
        int ord = generator_order(cur->gen, next->gen);
        if (ord < 0) {
            // leftmost inversion: rewrite u v -> v u c
            Block correction;
            bool has_correction = swap_correction(*cur, *next, correction);
#ifndef NDEBUG
            assert(swap_sound(dim, *cur, *next, has_correction ? &correction : nullptr));
#endif
            trace.swap_count += cur->exp.abs() * next->exp.abs();
            std::swap(cur->gen, next->gen);
            std::swap(cur->exp, next->exp);
            if (has_correction) {
                trace.max_counts[correction.gen] += correction.exp.abs();
                blocks.insert(std::next(next), std::move(correction));
            }
            if (cur != blocks.begin()) --cur;
            continue;
        }
        ++cur;
    }

    EntryMap exps;
    for (const auto& b : blocks) exps.emplace(b.gen, b.exp);
    trace.result = NormalForm{dim, std::move(exps)};
    return trace;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2 || x.size() != y.size()) return 0.0;
    double xm = 0, ym = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(x.size());
    ym /= static_cast<double>(x.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - xm) * (y[i] - ym);
        den += (x[i] - xm) * (x[i] - xm);
    }
    return den == 0.0 ? 0.0 : num / den;
}

std::vector<LemmaFit> verify_lemma_bound(const std::vector<Word>& samples, int dim) {
    if (samples.empty()) {
        throw Error(ErrorCode::invalid_argument, "verify_lemma_bound needs at least one sample");
    }
    // per generator: pairs (L, count) over all runs
    std::map<GeneratorIndex, std::vector<std::pair<double, double>>, GeneratorDecreasing> data;
    for (const auto& w : samples) {
        CollectionTrace t = collect(w, dim);
        double len = t.input_length.to_double();
        for (const auto& g : all_generators(dim)) {
            data[g].push_back({len, t.max_count(g).to_double()});
        }
    }
    std::vector<LemmaFit> fits;
    for (const auto& [g, points] : data) {
        LemmaFit f;
        f.gen = g;
        f.min_constant = 0.0;
        std::vector<double> lx, ly;
        for (const auto& [len, count] : points) {
            if (len > 0) {
                f.min_constant = std::max(f.min_constant, count / std::pow(len, g.span()));
            }
            if (len > 1 && count >= 1) {
                lx.push_back(std::log(len));
                ly.push_back(std::log(count));
            }
        }
        f.slope = fit_slope(lx, ly);
        f.slope_violation = f.slope > static_cast<double>(g.span()) + 0.2;
        fits.push_back(f);
    }
    return fits;
}

Word random_word(int dim, int length, std::mt19937_64& rng) {
    std::vector<GeneratorIndex> gens = all_generators(dim);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    Word w;
    int emitted = 0;
    while (emitted < length) {
        GeneratorIndex g = gens[pick(rng)];
        int sign = coin(rng) ? 1 : -1;
        // skip picks that would cancel against the tail, so the word length
        // is exactly the requested one
        if (!w.letters().empty() && w.letters().back().gen == g &&
            w.letters().back().exp.sign() != sign) {
            continue;
        }
        w.append(g, BigInt(sign));
        ++emitted;
    }
    return w;
}

}  // namespace nilmetric
