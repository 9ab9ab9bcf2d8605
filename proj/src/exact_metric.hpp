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

#ifndef NILMETRIC_EXACT_METRIC_HPP
#define NILMETRIC_EXACT_METRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace nilmetric {

inline constexpr std::uint64_t kDefaultBfsBudget = 50000000;

// Exact word lengths for every element within a BFS radius of the Cayley
// graph over the chosen generating set (each generator used with both signs).
class BallTable {
public:
    BallTable(int dim, std::vector<GeneratorIndex> gens, int radius);

    int dim() const { return dim_; }
    int radius() const { return radius_; }
    const std::vector<GeneratorIndex>& generating_set() const { return gens_; }

    std::uint64_t size() const { return states_.size(); }
    const std::vector<std::uint64_t>& sphere_sizes() const { return sphere_sizes_; }

    // exact ||x|| if x lies in the ball, empty otherwise; throws on a
    // dimension mismatch
    std::optional<int> exact_length(const GroupElement& x) const;

    // A word of exactly length(x) evaluating to x, unwound from the BFS
    // parent edges. Only available on tables built by bfs_ball (tables read
    // back from a file carry no edges).
    Word witness(const GroupElement& x) const;
    bool has_witnesses() const { return !parents_.empty(); }

    // (radius, sphere size) pairs, radius 0 first.
    std::vector<std::pair<int, std::uint64_t>> sphere_growth() const;

    // iteration over stored elements, in deterministic table order
    template <typename Fn>
    void for_each(Fn&& fn) const {  // fn(const GroupElement&, int length)
        for (std::size_t idx = 0; idx < states_.size(); ++idx) {
            fn(GroupElement::from_encoding(states_[idx]), lengths_[idx]);
        }
    }

    void write(const std::string& path) const;
    static BallTable read(const std::string& path);

private:
    friend BallTable bfs_ball(int, const std::vector<GeneratorIndex>&, int, std::uint64_t);

    int dim_;
    std::vector<GeneratorIndex> gens_;
    int radius_;
    std::vector<std::vector<std::uint8_t>> states_;  // canonical encodings
    std::vector<int> lengths_;
    std::vector<std::int64_t> parents_;  // index of the BFS parent, -1 for the root
    std::vector<std::int32_t> edges_;    // generator index * 2 + (sign<0), into gens_
    std::vector<std::uint64_t> sphere_sizes_;
    std::unordered_map<std::string, std::size_t> index_;

    void add_state(std::vector<std::uint8_t> enc, int len, std::int64_t parent, std::int32_t edge);
    void rebuild_index();
};

// Exhaustive breadth-first ball. Throws resource_limit (reporting the last
// completed radius) if the state count would exceed the budget; a partial
// table is never returned.
BallTable bfs_ball(int dim, const std::vector<GeneratorIndex>& gens, int radius,
                   std::uint64_t budget = kDefaultBfsBudget);

// Parses a generating-set spec: "full", "first" (first diagonal), or an
// explicit "i,j;i,j;..." list.
std::vector<GeneratorIndex> parse_generating_set(const std::string& spec, int dim);
std::string format_generating_set(const std::vector<GeneratorIndex>& gens);

}  // namespace nilmetric

#endif
