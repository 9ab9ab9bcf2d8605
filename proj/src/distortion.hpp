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

#ifndef NILMETRIC_DISTORTION_HPP
#define NILMETRIC_DISTORTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "exact_metric.hpp"
#include "group.hpp"

namespace nilmetric {

enum class EmbeddingKind {
    heis_subset,  // H_k -> H_l through an index subset K
    heis_into_t,  // H_k -> T_{k+2} inclusion
    t_corner,     // T_k -> T_l upper-left block
    t_block,      // T_k -> T_l split at a with the middle identity block
    composed,     // T_k -> T_{k+r-1} block, then corner into T_l
};

EmbeddingKind embedding_kind_from_string(const std::string& s);
std::string to_string(EmbeddingKind k);

// Injective homomorphism between two groups of the family, with the
// distortion exponent its construction prescribes.
class Embedding {
public:
    static Embedding heis_subset(int k, int l, std::vector<int> subset);
    static Embedding heis_into_t(int k);
    static Embedding t_corner(int k, int l);
    static Embedding t_block(int k, int l, int a);
    static Embedding composed(int k, int l, int r, int a = 1);

    EmbeddingKind kind() const { return kind_; }
    int source_dim() const;  // matrix dimension of the source group
    int target_dim() const;
    int source_heis_k() const { return source_heis_k_; }  // 0 for T sources
    int target_heis_k() const { return target_heis_k_; }
    double predicted_exponent() const { return predicted_; }
    std::string describe() const;

    GroupElement apply(const GroupElement& x) const;

    // witness element of the extremal family, parametrized by m >= 1
    GroupElement witness(const BigInt& m) const;

private:
    Embedding() = default;

    EmbeddingKind kind_ = EmbeddingKind::t_corner;
    int k_ = 0, l_ = 0, a_ = 0, r_ = 0;
    std::vector<int> subset_;
    int source_heis_k_ = 0, target_heis_k_ = 0;
    double predicted_ = 1.0;
};

// j - i of the smallest generator (in the generator order) with a nonzero
// exponent in the normal form; errors on the identity.
int cyclic_exponent_T(const GroupElement& x);

struct DistortionSample {
    double n = 0.0;          // outer estimate budget
    double max_inner = 0.0;  // largest inner estimate found within it
    bool missing = false;    // no feasible family member at this budget
};

struct DistortionProfile {
    std::string description;
    double predicted_exponent = 1.0;
    std::vector<DistortionSample> samples;
    double fitted_exponent = 0.0;  // log-log least squares over the upper half

    std::string csv() const;
};

// Geometric grid n = 4, 8, ..., n_max. For each budget the witness family is
// searched for the largest parameter whose image stays within it, and
// perturbed variants (perturb_count per budget, seeded) widen the search.
DistortionProfile distortion_profile(const Embedding& e, std::int64_t n_max,
                                     int perturb_count = 8, std::uint64_t seed = 0);

// Distortion of the cyclic subgroup generated by x0: inner length |m| of
// x0^m against the outer T estimate of the matrix power.
DistortionProfile cyclic_profile(const GroupElement& x0, std::int64_t n_max);

// Exact-metric variant of the cyclic profile, over the radii of a computed
// ball: inner length |m|, outer length the exact BFS norm.
DistortionProfile cyclic_profile_exact(const GroupElement& x0, const BallTable& ball);

GroupElement element_pow(const GroupElement& x, const BigInt& e);

}  // namespace nilmetric

#endif
