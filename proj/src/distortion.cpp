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

#include "distortion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "collection.hpp"
#include "quasimetric.hpp"

namespace nilmetric {

EmbeddingKind embedding_kind_from_string(const std::string& s) {
    if (s == "heis-subset") return EmbeddingKind::heis_subset;
    if (s == "heis-in-T") return EmbeddingKind::heis_into_t;
    if (s == "corner") return EmbeddingKind::t_corner;
    if (s == "block") return EmbeddingKind::t_block;
    if (s == "composed") return EmbeddingKind::composed;
    throw Error(ErrorCode::invalid_embedding, "unknown embedding kind '" + s + "'");
}

std::string to_string(EmbeddingKind k) {
    switch (k) {
        case EmbeddingKind::heis_subset: return "heis-subset";
        case EmbeddingKind::heis_into_t: return "heis-in-T";
        case EmbeddingKind::t_corner: return "corner";
        case EmbeddingKind::t_block: return "block";
        case EmbeddingKind::composed: return "composed";
    }
    return "?";
}

Embedding Embedding::heis_subset(int k, int l, std::vector<int> subset) {
    if (k < 1 || l < k) throw Error(ErrorCode::invalid_embedding, "need 1 <= k <= l");
    std::sort(subset.begin(), subset.end());
    if (static_cast<int>(subset.size()) != k) {
        throw Error(ErrorCode::invalid_embedding, "subset must have exactly k indices");
    }
    for (std::size_t t = 0; t < subset.size(); ++t) {
        if (subset[t] < 1 || subset[t] > l || (t > 0 && subset[t] == subset[t - 1])) {
            throw Error(ErrorCode::invalid_embedding, "subset must be k distinct indices in 1..l");
        }
    }
    Embedding e;
    e.kind_ = EmbeddingKind::heis_subset;
    e.k_ = k;
    e.l_ = l;
    e.subset_ = std::move(subset);
    e.source_heis_k_ = k;
    e.target_heis_k_ = l;
    e.predicted_ = 1.0;
    return e;
}

Embedding Embedding::heis_into_t(int k) {
    if (k < 1) throw Error(ErrorCode::invalid_embedding, "need k >= 1");
    Embedding e;
    e.kind_ = EmbeddingKind::heis_into_t;
    e.k_ = k;
    e.l_ = k + 2;
    e.source_heis_k_ = k;
    e.predicted_ = static_cast<double>(k);
    return e;
}

Embedding Embedding::t_corner(int k, int l) {
    if (k < 2 || l < k) throw Error(ErrorCode::invalid_embedding, "need 2 <= k <= l");
    Embedding e;
    e.kind_ = EmbeddingKind::t_corner;
    e.k_ = k;
    e.l_ = l;
    e.predicted_ = 1.0;
    return e;
}

Embedding Embedding::t_block(int k, int l, int a) {
    if (k < 2 || l <= k) throw Error(ErrorCode::invalid_embedding, "need 2 <= k < l");
    if (a < 1 || a > k - 1) {
        throw Error(ErrorCode::invalid_embedding, "block split needs 1 <= a <= k-1");
    }
    Embedding e;
    e.kind_ = EmbeddingKind::t_block;
    e.k_ = k;
    e.l_ = l;
    e.a_ = a;
    e.predicted_ = static_cast<double>(l - k + 1);
    return e;
}

Embedding Embedding::composed(int k, int l, int r, int a) {
    if (k < 2 || l < k) throw Error(ErrorCode::invalid_embedding, "need 2 <= k <= l");
    if (r < 1 || r > l - k + 1) {
        throw Error(ErrorCode::invalid_embedding, "need 1 <= r <= l-k+1");
    }
    if (r > 1 && (a < 1 || a > k - 1)) {
        throw Error(ErrorCode::invalid_embedding, "block split needs 1 <= a <= k-1");
    }
    Embedding e;
    e.kind_ = EmbeddingKind::composed;
    e.k_ = k;
    e.l_ = l;
    e.r_ = r;
    e.a_ = r > 1 ? a : 0;
    e.predicted_ = static_cast<double>(r);
    return e;
}

int Embedding::source_dim() const {
    return source_heis_k_ > 0 ? source_heis_k_ + 2 : k_;
}

int Embedding::target_dim() const {
    return target_heis_k_ > 0 ? target_heis_k_ + 2 : l_;
}

std::string Embedding::describe() const {
    std::ostringstream out;
    out << to_string(kind_);
    switch (kind_) {
        case EmbeddingKind::heis_subset: {
            out << " H_" << k_ << " -> H_" << l_ << " K={";
            for (std::size_t t = 0; t < subset_.size(); ++t) {
                if (t) out << ",";
                out << subset_[t];
            }
            out << "}";
            break;
        }
        case EmbeddingKind::heis_into_t:
            out << " H_" << k_ << " -> T_" << k_ + 2;
            break;
        case EmbeddingKind::t_corner:
            out << " T_" << k_ << " -> T_" << l_;
            break;
        case EmbeddingKind::t_block:
            out << " T_" << k_ << " -> T_" << l_ << " a=" << a_;
            break;
        case EmbeddingKind::composed:
            out << " T_" << k_ << " -> T_" << l_ << " r=" << r_;
            break;
    }
    out << " predicted=" << predicted_;
    return out.str();
}

GroupElement Embedding::apply(const GroupElement& x) const {
    if (x.dim() != source_dim()) {
        throw Error(ErrorCode::dimension_mismatch, "element does not live in the source group");
    }
    switch (kind_) {
        case EmbeddingKind::heis_subset: {
            HeisenbergForm h = matrix_to_heisenberg(x, k_);
            HeisenbergForm img;
            img.k = l_;
            img.a_exps.assign(l_, BigInt());
            img.b_exps.assign(l_, BigInt());
            img.c_exp = h.c_exp;
            for (int t = 0; t < k_; ++t) {
                img.a_exps[subset_[t] - 1] = h.a_exps[t];
                img.b_exps[subset_[t] - 1] = h.b_exps[t];
            }
            return heisenberg_to_matrix(img);
        }
        case EmbeddingKind::heis_into_t:
            matrix_to_heisenberg(x, k_);  // validates the pattern
            return x;
        case EmbeddingKind::t_corner: {
            EntryMap entries = x.entries();
            return GroupElement(l_, std::move(entries));
        }
        case EmbeddingKind::t_block: {
            int shift = l_ - k_;
            EntryMap entries;
            for (const auto& [g, v] : x.entries()) {
                if (g.j <= a_) {
                    entries.emplace(g, v);
                } else if (g.i > a_) {
                    entries.emplace(GeneratorIndex{g.i + shift, g.j + shift}, v);
                } else {
                    entries.emplace(GeneratorIndex{g.i, g.j + shift}, v);
                }
            }
            return GroupElement(l_, std::move(entries));
        }
        case EmbeddingKind::composed: {
            if (r_ == 1) {
                EntryMap entries = x.entries();
                return GroupElement(l_, std::move(entries));
            }
            GroupElement mid = t_block(k_, k_ + r_ - 1, a_).apply(x);
            EntryMap entries = mid.entries();
            return GroupElement(l_, std::move(entries));
        }
    }
    throw Error(ErrorCode::internal, "unhandled embedding kind");
}

GroupElement Embedding::witness(const BigInt& m) const {
    switch (kind_) {
        case EmbeddingKind::heis_subset: {
            HeisenbergForm h;
            h.k = k_;
            h.a_exps.assign(k_, BigInt());
            h.b_exps.assign(k_, BigInt());
            h.a_exps[0] = m;
            return heisenberg_to_matrix(h);
        }
        case EmbeddingKind::heis_into_t: {
            // single entry at (1, k+1): estimate m inside, m^(1/k) outside
            HeisenbergForm h;
            h.k = k_;
            h.a_exps.assign(k_, BigInt());
            h.b_exps.assign(k_, BigInt());
            h.a_exps[k_ - 1] = m;
            return heisenberg_to_matrix(h);
        }
        case EmbeddingKind::t_corner:
            return generator(k_, GeneratorIndex{1, 2}, m);
        case EmbeddingKind::t_block:
            // the worst-shifted entry sits at (a, a+1)
            return generator(k_, GeneratorIndex{a_, a_ + 1}, m);
        case EmbeddingKind::composed:
            if (r_ == 1) return generator(k_, GeneratorIndex{1, 2}, m);
            return generator(k_, GeneratorIndex{a_, a_ + 1}, m);
    }
    throw Error(ErrorCode::internal, "unhandled embedding kind");
}

int cyclic_exponent_T(const GroupElement& x) {
    if (x.is_identity()) {
        throw Error(ErrorCode::invalid_argument, "cyclic exponent of the identity is undefined");
    }
    // entries are kept in decreasing generator order; the smallest is last
    const auto& entries = x.entries();
    return std::prev(entries.end())->first.span();
}

GroupElement element_pow(const GroupElement& x, const BigInt& e) {
    if (e.is_zero()) return identity(x.dim());
    GroupElement base = e.sign() < 0 ? inverse(x) : x;
    BigInt n = e.abs();
    GroupElement acc = identity(x.dim());
    // binary powering over the bits of n
    std::vector<bool> bits;
    while (!n.is_zero()) {
        BigInt h = n.half();
        bits.push_back((n - (h + h)) == BigInt(1));
        n = h;
    }
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc = multiply(acc, acc);
        if (*it) acc = multiply(acc, base);
    }
    return acc;
}

namespace {

double inner_estimate(const Embedding& e, const GroupElement& x) {
    return estimate_value(x, e.source_heis_k());
}

double outer_estimate(const Embedding& e, const GroupElement& image) {
    return estimate_value(image, e.target_heis_k());
}

// largest m >= 1 with outer(witness(m)) <= budget, 0 if none; the witness
// families are single-entry, so the outer estimate is monotone in m
BigInt max_feasible_witness(const Embedding& e, double budget) {
    if (outer_estimate(e, e.apply(e.witness(BigInt(1)))) > budget) return BigInt(0);
    BigInt lo(1), hi(2);
    while (outer_estimate(e, e.apply(e.witness(hi))) <= budget) {
        lo = hi;
        hi = hi * BigInt(2);
        if (hi.bit_length() > 256) break;  // budget is finite; never expected
    }
    while (hi - lo > BigInt(1)) {
        BigInt mid = (lo + hi).half();
        if (outer_estimate(e, e.apply(e.witness(mid))) <= budget) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

double fit_upper_half(const std::vector<DistortionSample>& samples) {
    std::vector<double> lx, ly;
    std::size_t present = 0;
    for (const auto& s : samples) {
        if (!s.missing && s.max_inner > 0) ++present;
    }
    std::size_t skip = present / 2;
    std::size_t seen = 0;
    for (const auto& s : samples) {
        if (s.missing || s.max_inner <= 0) continue;
        if (seen++ < skip) continue;
        lx.push_back(std::log(s.n));
        ly.push_back(std::log(s.max_inner));
    }
    return fit_slope(lx, ly);
}

}  // namespace

std::string DistortionProfile::csv() const {
    std::ostringstream out;
    out << "# " << description << "\n";
    out << "n,max_inner_estimate,log_n,log_max\n";
    char buf[128];
    for (const auto& s : samples) {
        if (s.missing) continue;
        std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g\n", s.n, s.max_inner,
                      std::log(s.n), std::log(s.max_inner));
        out << buf;
    }
    return out.str();
}

DistortionProfile distortion_profile(const Embedding& e, std::int64_t n_max, int perturb_count,
                                     std::uint64_t seed) {
    if (n_max < 4) throw Error(ErrorCode::invalid_argument, "n_max must be at least 4");
    DistortionProfile profile;
    profile.description = e.describe();
    profile.predicted_exponent = e.predicted_exponent();

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> small(0, 3);

    for (std::int64_t n = 4; n <= n_max; n *= 2) {
        DistortionSample sample;
        sample.n = static_cast<double>(n);
        BigInt best_m = max_feasible_witness(e, sample.n);
        if (best_m.is_zero()) {
            sample.missing = true;
            profile.samples.push_back(sample);
            continue;
        }
        GroupElement best = e.witness(best_m);
        sample.max_inner = inner_estimate(e, best);

        // random perturbations of scaled-down witnesses keep the search
        // honest without assuming the witness family is exactly extremal
        for (int t = 0; t < perturb_count; ++t) {
            BigInt m = best_m.half();
            if (m.is_zero()) m = BigInt(1);
            GroupElement cand = e.witness(m);
            if (e.source_heis_k() > 0) {
                HeisenbergForm h = matrix_to_heisenberg(cand, e.source_heis_k());
                for (int i = 0; i < h.k; ++i) {
                    h.a_exps[i] += BigInt(small(rng));
                    h.b_exps[i] += BigInt(small(rng));
                }
                cand = heisenberg_to_matrix(h);
            } else {
                EntryMap entries = cand.entries();
                for (const auto& g : first_diagonal_generators(cand.dim())) {
                    BigInt bump(small(rng));
                    if (bump.is_zero()) continue;
                    auto [it, inserted] = entries.emplace(g, bump);
                    if (!inserted) it->second += bump;
                }
                cand = GroupElement(cand.dim(), std::move(entries));
            }
            if (outer_estimate(e, e.apply(cand)) <= sample.n) {
                sample.max_inner = std::max(sample.max_inner, inner_estimate(e, cand));
            }
        }
        profile.samples.push_back(sample);
    }
    profile.fitted_exponent = fit_upper_half(profile.samples);
    return profile;
}

DistortionProfile cyclic_profile(const GroupElement& x0, std::int64_t n_max) {
    if (x0.is_identity()) {
        throw Error(ErrorCode::invalid_argument, "cyclic profile needs a nontrivial generator");
    }
    if (n_max < 4) throw Error(ErrorCode::invalid_argument, "n_max must be at least 4");
    DistortionProfile profile;
    int span = cyclic_exponent_T(x0);
    profile.description = "cyclic <x> in T_" + std::to_string(x0.dim()) +
                          " smallest-generator span " + std::to_string(span) +
                          " predicted=" + std::to_string(span);
    profile.predicted_exponent = static_cast<double>(span);

    auto outer = [&](const BigInt& m) { return estimate_T(element_pow(x0, m)).value; };
    for (std::int64_t n = 4; n <= n_max; n *= 2) {
        DistortionSample sample;
        sample.n = static_cast<double>(n);
        if (outer(BigInt(1)) > sample.n) {
            sample.missing = true;
            profile.samples.push_back(sample);
            continue;
        }
        BigInt lo(1), hi(2);
        while (outer(hi) <= sample.n) {
            lo = hi;
            hi = hi * BigInt(2);
            if (hi.bit_length() > 192) break;
        }
        while (hi - lo > BigInt(1)) {
            BigInt mid = (lo + hi).half();
            if (outer(mid) <= sample.n) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        sample.max_inner = lo.to_double();  // ||x0^m||_<x0> = |m|
        profile.samples.push_back(sample);
    }
    profile.fitted_exponent = fit_upper_half(profile.samples);
    return profile;
}

DistortionProfile cyclic_profile_exact(const GroupElement& x0, const BallTable& ball) {
    if (x0.is_identity()) {
        throw Error(ErrorCode::invalid_argument, "cyclic profile needs a nontrivial generator");
    }
    DistortionProfile profile;
    profile.description = "cyclic-exact <x> in T_" + std::to_string(x0.dim());
    profile.predicted_exponent = static_cast<double>(cyclic_exponent_T(x0));
    // exact inner lengths |m| against exact outer lengths, for every radius
    for (int n = 1; n <= ball.radius(); ++n) {
        DistortionSample sample;
        sample.n = static_cast<double>(n);
        std::int64_t best = 0;
        for (std::int64_t m = 1;; ++m) {
            auto len = ball.exact_length(element_pow(x0, BigInt(m)));
            if (!len.has_value() || *len > n) break;
            best = m;
        }
        if (best == 0) {
            sample.missing = true;
        } else {
            sample.max_inner = static_cast<double>(best);
        }
        profile.samples.push_back(sample);
    }
    // word lengths in the subgroup direction can be parity-locked (central
    // powers only reach even budgets), which staircases the samples; fit
    // over the budgets that are tight, where max_inner actually moved
    std::vector<DistortionSample> frontier;
    double last = 0.0;
    for (const auto& s : profile.samples) {
        if (s.missing) continue;
        if (s.max_inner > last) {
            frontier.push_back(s);
            last = s.max_inner;
        }
    }
    profile.fitted_exponent = fit_upper_half(frontier);
    return profile;
}

}  // namespace nilmetric
