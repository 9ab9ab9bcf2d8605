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

#include "word_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace nilmetric {

namespace {

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::int64_t n, std::int64_t& root) {
    if (n < 0) return false;
    root = isqrt64(n);
    return root * root == n;
}

// minimal count of squares by the classical classification: 1 for squares,
// 2 when a representation x^2 + y^2 exists, 4 exactly for 4^a(8b+7), else 3
int min_square_count(std::int64_t n) {
    std::int64_t root;
    if (n == 0) return 0;
    if (is_square(n, root)) return 1;
    std::int64_t stripped = n;
    while (stripped % 4 == 0) stripped /= 4;
    if (stripped % 8 == 7) return 4;
    for (std::int64_t a = isqrt64(n); a * a * 2 >= n; --a) {
        if (is_square(n - a * a, root)) return 2;
    }
    return 3;
}

// descending search for an exact c-square representation; c is attainable
bool square_rep(std::int64_t n, int c, std::vector<std::int64_t>& out) {
    if (n == 0) return true;
    if (c == 0) return false;
    if (c == 1) {
        std::int64_t root;
        if (!is_square(n, root)) return false;
        out.push_back(root);
        return true;
    }
    for (std::int64_t a = isqrt64(n); a >= 1; --a) {
        if (a * a * c < n) break;  // even c copies of a^2 cannot reach n
        out.push_back(a);
        if (square_rep(n - a * a, c - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

std::int64_t ipow(std::int64_t base, unsigned k) {
    std::int64_t r = 1;
    for (unsigned t = 0; t < k; ++t) r *= base;
    return r;
}

std::int64_t iroot64(std::int64_t n, unsigned k) {
    if (n <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    while (r > 0 && ipow(r, k) > n) --r;
    while (ipow(r + 1, k) <= n) ++r;
    return r;
}

// Minimal-count tables for k-th powers, k >= 3, grown lazily to the largest
// requested value. Entries fit easily in 8 bits at desk scale.
class WaringTable {
public:
    int min_count(std::int64_t m, unsigned k) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& table = tables_[k];
        if (static_cast<std::int64_t>(table.size()) <= m) {
            std::size_t new_size = std::max<std::size_t>(1024, table.size() * 2);
            new_size = std::max(new_size, static_cast<std::size_t>(m) + 1);
            std::size_t old = table.size();
            table.resize(new_size, 255);
            if (old == 0) {
                table[0] = 0;
                old = 1;
            }
            for (std::size_t v = old; v < new_size; ++v) {
                std::uint8_t best = 255;
                for (std::int64_t q = iroot64(static_cast<std::int64_t>(v), k); q >= 1; --q) {
                    std::uint8_t cand = table[v - static_cast<std::size_t>(ipow(q, k))];
                    if (cand + 1 < best) best = static_cast<std::uint8_t>(cand + 1);
                    if (best == 1) break;
                }
                table[v] = best;
            }
        }
        return table[static_cast<std::size_t>(m)];
    }

    std::vector<std::int64_t> decompose(std::int64_t m, unsigned k) {
        int total = min_count(m, k);
        std::vector<std::int64_t> parts;
        std::lock_guard<std::mutex> lock(mu_);
        const auto& table = tables_[k];
        std::int64_t rem = m;
        int left = total;
        while (rem > 0) {
            // largest base consistent with a minimal completion
            for (std::int64_t q = iroot64(rem, k); q >= 1; --q) {
                if (table[static_cast<std::size_t>(rem - ipow(q, k))] == left - 1) {
                    parts.push_back(q);
                    rem -= ipow(q, k);
                    --left;
                    break;
                }
            }
        }
        return parts;
    }

private:
    std::mutex mu_;
    std::map<unsigned, std::vector<std::uint8_t>> tables_;
};

WaringTable& waring_table() {
    static WaringTable t;
    return t;
}

std::vector<std::int64_t> four_squares_i64(std::int64_t p) {
    if (p == 0) return {};
    // factor out powers of 4 to keep the classification simple
    std::int64_t scale = 1;
    while (p % 4 == 0) {
        p /= 4;
        scale *= 2;
    }
    int count = min_square_count(p);
    std::vector<std::int64_t> parts;
    if (count <= 3) {
        square_rep(p, count, parts);
    } else {
        // peel one square so the remainder is three-square representable
        for (std::int64_t a = isqrt64(p); a >= 1; --a) {
            std::int64_t rem = p - a * a;
            int rem_count = min_square_count(rem);
            if (rem_count <= 3) {
                parts.push_back(a);
                if (square_rep(rem, rem_count, parts)) break;
                parts.clear();
            }
        }
    }
    for (auto& q : parts) q *= scale;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

}  // namespace

BigInt PowerDecomposition::reconstruct() const {
    BigInt sum;
    for (const auto& q : parts) sum += q.pow_u(k);
    return sign < 0 ? -sum : sum;
}

PowerDecomposition four_squares(const BigInt& p) {
    if (p.sign() < 0) throw Error(ErrorCode::invalid_argument, "four_squares needs p >= 0");
    if (p > BigInt(kFourSquaresCap)) {
        throw Error(ErrorCode::resource_limit,
                    "four_squares input above the supported cap " + std::to_string(kFourSquaresCap));
    }
    PowerDecomposition d;
    d.target = p;
    d.k = 2;
    for (std::int64_t q : four_squares_i64(p.to_int64())) d.parts.push_back(BigInt(q));
    return d;
}

PowerDecomposition waring_decompose(const BigInt& m, unsigned k, std::int64_t cap) {
    if (m.sign() < 0) throw Error(ErrorCode::invalid_argument, "waring_decompose needs m >= 0");
    if (k < 1 || k > 6) {
        throw Error(ErrorCode::invalid_argument, "waring_decompose supports 1 <= k <= 6");
    }
    PowerDecomposition d;
    d.target = m;
    d.k = k;
    if (m.is_zero()) return d;
    if (k == 1) {
        d.parts.push_back(m);
        return d;
    }
    if (cap <= 0) cap = kDefaultWaringCap;
    if (k == 2) {
        if (m > BigInt(std::min(cap, kFourSquaresCap))) {
            throw Error(ErrorCode::resource_limit,
                        "waring_decompose input above the cap " + std::to_string(cap));
        }
        for (std::int64_t q : four_squares_i64(m.to_int64())) d.parts.push_back(BigInt(q));
        return d;
    }
    if (m > BigInt(cap)) {
        throw Error(ErrorCode::resource_limit,
                    "waring_decompose input above the cap " + std::to_string(cap));
    }
    for (std::int64_t q : waring_table().decompose(m.to_int64(), k)) d.parts.push_back(BigInt(q));
    return d;
}

Word commutator_word(int i, int j, const BigInt& q, int sign, int dim) {
    check_dim(dim);
    check_generator(dim, GeneratorIndex{i, j});
    if (j - i < 2) {
        throw Error(ErrorCode::invalid_span, "commutator_word needs j - i >= 2");
    }
    if (q.sign() <= 0) throw Error(ErrorCode::invalid_argument, "commutator base must be positive");
    if (sign != 1 && sign != -1) throw Error(ErrorCode::invalid_argument, "sign must be +-1");

    auto power_word = [&](int a, const BigInt& e) {
        Word w;
        w.append(GeneratorIndex{a, a + 1}, e);
        return w;
    };
    auto commute = [](const Word& x, const Word& y) {
        Word w = x.inverse();
        w.append(y.inverse());
        w.append(x);
        w.append(y);
        return w;
    };

    // [x1, x2, ..., xs] with x_t = a_{i+t-1, i+t}^q; a negative sign switches
    // the first two arguments, which inverts the evaluated entry
    Word first = power_word(i, q);
    Word second = power_word(i + 1, q);
    Word acc = sign > 0 ? commute(first, second) : commute(second, first);
    for (int t = i + 2; t < j; ++t) {
        acc = commute(acc, power_word(t, q));
    }
    return acc;
}

Word short_word(const GroupElement& x) {
    NormalForm nf = normal_form(x);
    Word w;
    for (const auto& [g, m] : nf.exponents) {
        int span = g.span();
        if (span == 1) {
            w.append(g, m);
            continue;
        }
        int sign = m.sign();
        PowerDecomposition d = waring_decompose(m.abs(), static_cast<unsigned>(span));
        // each part q expands to (6 * 2^(span-2) - 2) * q letters; keep the
        // literal power when it is no longer than that
        BigInt per_q(6 * (std::int64_t{1} << (span - 2)) - 2);
        BigInt expansion_len;
        for (const auto& q : d.parts) expansion_len += per_q * q;
        if (m.abs() <= expansion_len) {
            w.append(g, m);
            continue;
        }
        for (const auto& q : d.parts) {
            w.append(commutator_word(g.i, g.j, q, sign, x.dim()));
        }
    }
    return w;
}

Word short_word_H(const HeisenbergForm& h) {
    if (h.k < 1 || static_cast<int>(h.a_exps.size()) != h.k ||
        static_cast<int>(h.b_exps.size()) != h.k) {
        throw Error(ErrorCode::invalid_argument, "malformed Heisenberg form");
    }
    GeneratorIndex a1 = heis_a(1, h.k), b1 = heis_b(1, h.k);
    Word w;
    if (!h.c_exp.is_zero()) {
        int sign = h.c_exp.sign();
        PowerDecomposition d = four_squares(h.c_exp.abs());
        for (const auto& q : d.parts) {
            // [a_1^q, b_1^q] = c^(q^2); switched arguments give the inverse
            Word com;
            GeneratorIndex first = sign > 0 ? a1 : b1;
            GeneratorIndex second = sign > 0 ? b1 : a1;
            com.append(first, -q);
            com.append(second, -q);
            com.append(first, q);
            com.append(second, q);
            w.append(com);
        }
    }
    for (int i = h.k; i >= 1; --i) {
        w.append(heis_b(i, h.k), h.b_exps[i - 1]);
        w.append(heis_a(i, h.k), h.a_exps[i - 1]);
    }
    return w;
}

}  // namespace nilmetric
