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

#include "group.hpp"

#include <algorithm>

namespace nilmetric {

namespace {

void push_uvarint(std::vector<std::uint8_t>& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<std::uint8_t>(v) | 0x80);
        v >>= 7;
    }
    out.push_back(static_cast<std::uint8_t>(v));
}

// zigzag-style signed coding for unbounded values: low bit is the sign,
// higher bits are the magnitude bytes, 7 bits at a time.
void push_svarint_big(std::vector<std::uint8_t>& out, const BigInt& v) {
    std::vector<std::uint8_t> mag = v.abs().magnitude_bytes();
    // shift magnitude left by one bit and place the sign bit at the bottom
    std::vector<std::uint8_t> shifted;
    std::uint16_t carry = v.sign() < 0 ? 1 : 0;
    for (std::uint8_t b : mag) {
        std::uint16_t cur = (static_cast<std::uint16_t>(b) << 1) | carry;
        shifted.push_back(static_cast<std::uint8_t>(cur & 0xff));
        carry = cur >> 8;
    }
    if (carry) shifted.push_back(static_cast<std::uint8_t>(carry));
    while (!shifted.empty() && shifted.back() == 0) shifted.pop_back();
    if (shifted.empty()) shifted.push_back(0);
    // 7-bit groups, little endian
    std::uint32_t acc = 0;
    int bits = 0;
    std::vector<std::uint8_t> groups;
    for (std::uint8_t b : shifted) {
        acc |= static_cast<std::uint32_t>(b) << bits;
        bits += 8;
        while (bits >= 7) {
            groups.push_back(static_cast<std::uint8_t>(acc & 0x7f));
            acc >>= 7;
            bits -= 7;
        }
    }
    if (bits > 0) groups.push_back(static_cast<std::uint8_t>(acc & 0x7f));
    while (groups.size() > 1 && groups.back() == 0) groups.pop_back();
    for (std::size_t i = 0; i + 1 < groups.size(); ++i) out.push_back(groups[i] | 0x80);
    out.push_back(groups.back());
}

}  // namespace

void check_dim(int dim) {
    if (dim < 2) throw Error(ErrorCode::invalid_dimension, "matrix dimension must be at least 2");
}

void check_generator(int dim, GeneratorIndex g) {
    if (g.i < 1 || g.j <= g.i || g.j > dim) {
        throw Error(ErrorCode::invalid_generator,
                    "generator (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                        ") invalid in dimension " + std::to_string(dim));
    }
}

int generator_order(const GeneratorIndex& g1, const GeneratorIndex& g2) {
    // Largest column first; within a column, farther from the diagonal first.
    // For u before v this rules out u.j == v.i (u.j >= v.j > v.i), so a
    // product of generator powers taken in decreasing order multiplies out
    // with every exponent landing exactly on its matrix entry.
    if (g1.j != g2.j) return g1.j < g2.j ? -1 : 1;
    if (g1.i != g2.i) return g1.i > g2.i ? -1 : 1;
    return 0;
}

GroupElement::GroupElement(int dim) : dim_(dim) { check_dim(dim); }

GroupElement::GroupElement(int dim, EntryMap entries) : dim_(dim) {
    check_dim(dim);
    for (auto it = entries.begin(); it != entries.end();) {
        check_generator(dim, it->first);
        if (it->second.is_zero()) {
            it = entries.erase(it);
        } else {
            ++it;
        }
    }
    entries_ = std::move(entries);
}

const BigInt& GroupElement::entry(int i, int j) const {
    static const BigInt zero;
    auto it = entries_.find(GeneratorIndex{i, j});
    return it == entries_.end() ? zero : it->second;
}

bool GroupElement::operator==(const GroupElement& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
}

std::vector<std::uint8_t> GroupElement::canonical_encoding() const {
    std::vector<std::uint8_t> out;
    push_uvarint(out, static_cast<std::uint64_t>(dim_));
    for (const auto& [g, v] : entries_) {
        push_uvarint(out, static_cast<std::uint64_t>(g.i));
        push_uvarint(out, static_cast<std::uint64_t>(g.j));
        push_svarint_big(out, v);
    }
    return out;
}

namespace {

std::uint64_t read_uvarint(const std::vector<std::uint8_t>& in, std::size_t& pos) {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
        if (pos >= in.size()) throw Error(ErrorCode::parse_error, "truncated encoding");
        std::uint8_t b = in[pos++];
        v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
        if (!(b & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw Error(ErrorCode::parse_error, "index varint too large");
    }
}

BigInt read_svarint_big(const std::vector<std::uint8_t>& in, std::size_t& pos) {
    // collect 7-bit groups, little endian
    std::vector<std::uint8_t> groups;
    while (true) {
        if (pos >= in.size()) throw Error(ErrorCode::parse_error, "truncated encoding");
        std::uint8_t b = in[pos++];
        groups.push_back(b & 0x7f);
        if (!(b & 0x80)) break;
    }
    BigInt value;
    BigInt scale(1);
    const BigInt b128(128);
    for (std::uint8_t g : groups) {
        value += BigInt(static_cast<std::int64_t>(g)) * scale;
        scale *= b128;
    }
    // low bit is the sign, the rest is the magnitude
    BigInt mag = value.half();
    bool neg = (value - (mag + mag)) == BigInt(1);
    return neg ? -mag : mag;
}

}  // namespace

GroupElement GroupElement::from_encoding(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    int dim = static_cast<int>(read_uvarint(bytes, pos));
    EntryMap entries;
    while (pos < bytes.size()) {
        int i = static_cast<int>(read_uvarint(bytes, pos));
        int j = static_cast<int>(read_uvarint(bytes, pos));
        BigInt v = read_svarint_big(bytes, pos);
        if (!v.is_zero()) entries.emplace(GeneratorIndex{i, j}, v);
    }
    return GroupElement(dim, std::move(entries));
}

GroupElement identity(int dim) { return GroupElement(dim); }

GroupElement generator(int dim, GeneratorIndex g, const BigInt& e) {
    check_dim(dim);
    check_generator(dim, g);
    EntryMap m;
    if (!e.is_zero()) m.emplace(g, e);
    return GroupElement(dim, std::move(m));
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorCode::dimension_mismatch, "multiply: dimension mismatch");
    }
    // (XY)_{ij} = X_{ij} + Y_{ij} + sum_{i<t<j} X_{it} Y_{tj}
    EntryMap r = x.entries();
    for (const auto& [g, v] : y.entries()) {
        auto [it, inserted] = r.emplace(g, v);
        if (!inserted) it->second += v;
    }
    for (const auto& [gx, vx] : x.entries()) {
        for (const auto& [gy, vy] : y.entries()) {
            if (gx.j != gy.i) continue;
            GeneratorIndex g{gx.i, gy.j};
            BigInt prod = vx * vy;
            auto [it, inserted] = r.emplace(g, prod);
            if (!inserted) it->second += prod;
        }
    }
    for (auto it = r.begin(); it != r.end();) {
        if (it->second.is_zero()) {
            it = r.erase(it);
        } else {
            ++it;
        }
    }
    return GroupElement(x.dim(), std::move(r));
}

GroupElement inverse(const GroupElement& x) {
    // X = I + N with N strictly upper triangular, so
    // X^-1 = I - N + N^2 - ... terminates after dim-1 powers.
    EntryMap npow = x.entries();
    EntryMap acc;
    int sign = -1;
    for (int t = 1; t < x.dim() && !npow.empty(); ++t) {
        for (const auto& [g, v] : npow) {
            BigInt term = sign < 0 ? -v : v;
            auto [it, inserted] = acc.emplace(g, term);
            if (!inserted) it->second += term;
        }
        // npow = npow * N
        EntryMap next;
        for (const auto& [ga, va] : npow) {
            for (const auto& [gb, vb] : x.entries()) {
                if (ga.j != gb.i) continue;
                GeneratorIndex g{ga.i, gb.j};
                BigInt prod = va * vb;
                auto [it, inserted] = next.emplace(g, prod);
                if (!inserted) it->second += prod;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) {
                it = next.erase(it);
            } else {
                ++it;
            }
        }
        npow = std::move(next);
        sign = -sign;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.is_zero()) {
            it = acc.erase(it);
        } else {
            ++it;
        }
    }
    return GroupElement(x.dim(), std::move(acc));
}

Word::Word(std::vector<Letter> letters) {
    for (auto& l : letters) append(l.gen, l.exp);
}

void Word::append(const GeneratorIndex& g, const BigInt& e) {
    if (e.is_zero()) return;
    if (!letters_.empty() && letters_.back().gen == g) {
        letters_.back().exp += e;
        if (letters_.back().exp.is_zero()) letters_.pop_back();
        return;
    }
    letters_.push_back(Letter{g, e});
}

void Word::append(const Word& w) {
    for (const auto& l : w.letters_) append(l.gen, l.exp);
}

BigInt Word::length() const {
    BigInt total;
    for (const auto& l : letters_) total += l.exp.abs();
    return total;
}

Word Word::inverse() const {
    Word r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        r.append(it->gen, -it->exp);
    }
    return r;
}

bool Word::operator==(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].gen != o.letters_[i].gen || letters_[i].exp != o.letters_[i].exp)
            return false;
    }
    return true;
}

GroupElement evaluate_word(const Word& w, int dim) {
    check_dim(dim);
    GroupElement acc = identity(dim);
    for (const auto& l : w.letters()) {
        check_generator(dim, l.gen);
        acc = multiply(acc, generator(dim, l.gen, l.exp));
    }
    return acc;
}

Word NormalForm::word() const {
    Word w;
    for (const auto& [g, e] : exponents) w.append(g, e);  // map is in decreasing order
    return w;
}

NormalForm normal_form(const GroupElement& x) {
    // The ordered product over decreasing generators reproduces the matrix
    // entry-for-entry, so the exponent map is the entry map.
    return NormalForm{x.dim(), x.entries()};
}

bool HeisenbergForm::operator==(const HeisenbergForm& o) const {
    return k == o.k && a_exps == o.a_exps && b_exps == o.b_exps && c_exp == o.c_exp;
}

GeneratorIndex heis_a(int i, int k) {
    (void)k;
    return GeneratorIndex{1, i + 1};
}

GeneratorIndex heis_b(int i, int k) { return GeneratorIndex{i + 1, k + 2}; }

GeneratorIndex heis_c(int k) { return GeneratorIndex{1, k + 2}; }

GroupElement heisenberg_to_matrix(const HeisenbergForm& h) {
    if (h.k < 1) throw Error(ErrorCode::invalid_argument, "Heisenberg rank must be at least 1");
    if (static_cast<int>(h.a_exps.size()) != h.k || static_cast<int>(h.b_exps.size()) != h.k) {
        throw Error(ErrorCode::invalid_argument, "Heisenberg form has wrong exponent count");
    }
    EntryMap m;
    for (int i = 1; i <= h.k; ++i) {
        if (!h.a_exps[i - 1].is_zero()) m.emplace(heis_a(i, h.k), h.a_exps[i - 1]);
        if (!h.b_exps[i - 1].is_zero()) m.emplace(heis_b(i, h.k), h.b_exps[i - 1]);
    }
    if (!h.c_exp.is_zero()) m.emplace(heis_c(h.k), h.c_exp);
    return GroupElement(h.k + 2, std::move(m));
}

HeisenbergForm matrix_to_heisenberg(const GroupElement& x, int k) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "Heisenberg rank must be at least 1");
    if (x.dim() != k + 2) {
        throw Error(ErrorCode::dimension_mismatch,
                    "expected dimension " + std::to_string(k + 2) + ", got " + std::to_string(x.dim()));
    }
    HeisenbergForm h;
    h.k = k;
    h.a_exps.assign(k, BigInt());
    h.b_exps.assign(k, BigInt());
    for (const auto& [g, v] : x.entries()) {
        if (g.i == 1 && g.j == k + 2) {
            h.c_exp = v;
        } else if (g.i == 1 && g.j >= 2 && g.j <= k + 1) {
            h.a_exps[g.j - 2] = v;
        } else if (g.j == k + 2 && g.i >= 2 && g.i <= k + 1) {
            h.b_exps[g.i - 2] = v;
        } else {
            throw Error(ErrorCode::not_in_subgroup,
                        "nonzero entry (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                            ") outside the Heisenberg pattern");
        }
    }
    return h;
}

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

std::vector<GeneratorIndex> all_generators(int dim) {
    check_dim(dim);
    std::vector<GeneratorIndex> gens;
    for (int i = 1; i < dim; ++i) {
        for (int j = i + 1; j <= dim; ++j) gens.push_back(GeneratorIndex{i, j});
    }
    std::sort(gens.begin(), gens.end(),
              [](const GeneratorIndex& a, const GeneratorIndex& b) { return generator_order(a, b) > 0; });
    return gens;
}

std::vector<GeneratorIndex> first_diagonal_generators(int dim) {
    check_dim(dim);
    std::vector<GeneratorIndex> gens;
    for (int i = 1; i < dim; ++i) gens.push_back(GeneratorIndex{i, i + 1});
    return gens;
}

namespace {

Word commutator_relator_word(GeneratorIndex x, GeneratorIndex y) {
    Word w;
    w.append(x, BigInt(-1));
    w.append(y, BigInt(-1));
    w.append(x, BigInt(1));
    w.append(y, BigInt(1));
    return w;
}

}  // namespace

std::vector<Word> t_relators(int n) {
    check_dim(n);
    std::vector<GeneratorIndex> gens = all_generators(n);
    std::vector<Word> rel;
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            if (x == y) continue;
            if (x.j == y.i) {
                // [a_ik, a_kj] a_ij^-1
                Word w = commutator_relator_word(x, y);
                w.append(GeneratorIndex{x.i, y.j}, BigInt(-1));
                rel.push_back(w);
            } else if (x.i != y.j) {
                rel.push_back(commutator_relator_word(x, y));
            }
            // pairs with x.i == y.j are the mirror image of the x.j == y.i case
        }
    }
    return rel;
}

std::vector<Word> h_relators(int k) {
    if (k < 1) throw Error(ErrorCode::invalid_argument, "Heisenberg rank must be at least 1");
    std::vector<Word> rel;
    GeneratorIndex c = heis_c(k);
    for (int i = 1; i <= k; ++i) {
        GeneratorIndex ai = heis_a(i, k), bi = heis_b(i, k);
        // [a_i, b_i] c^-1
        Word w = commutator_relator_word(ai, bi);
        w.append(c, BigInt(-1));
        rel.push_back(w);
        rel.push_back(commutator_relator_word(ai, c));
        rel.push_back(commutator_relator_word(bi, c));
        for (int j = 1; j <= k; ++j) {
            if (j != i) rel.push_back(commutator_relator_word(ai, heis_b(j, k)));
            if (j > i) {
                rel.push_back(commutator_relator_word(ai, heis_a(j, k)));
                rel.push_back(commutator_relator_word(bi, heis_b(j, k)));
            }
        }
    }
    return rel;
}

}  // namespace nilmetric
