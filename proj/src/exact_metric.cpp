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

#include "exact_metric.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "textio.hpp"

namespace nilmetric {

namespace {

// Dense strictly-upper state for fast BFS steps; entry (i,j) lives at
// tri_index(dim, i, j). Ball entries stay far inside int64 at any feasible
// radius.
int tri_index(int dim, int i, int j) {
    // row-major over pairs i<j, 1-based indices
    int row_start = (i - 1) * (2 * dim - i) / 2;
    return row_start + (j - i - 1);
}

std::vector<std::uint8_t> encode_dense(int dim, const std::vector<std::int64_t>& st,
                                       const std::vector<GeneratorIndex>& order) {
    EntryMap entries;
    for (const auto& g : order) {
        std::int64_t v = st[tri_index(dim, g.i, g.j)];
        if (v != 0) entries.emplace(g, BigInt(v));
    }
    return GroupElement(dim, std::move(entries)).canonical_encoding();
}

}  // namespace

BallTable::BallTable(int dim, std::vector<GeneratorIndex> gens, int radius)
    : dim_(dim), gens_(std::move(gens)), radius_(radius) {
    check_dim(dim);
    if (radius < 0) throw Error(ErrorCode::invalid_argument, "radius must be nonnegative");
    if (gens_.empty()) throw Error(ErrorCode::invalid_argument, "generating set must be nonempty");
    for (const auto& g : gens_) check_generator(dim, g);
}

void BallTable::add_state(std::vector<std::uint8_t> enc, int len, std::int64_t parent,
                          std::int32_t edge) {
    index_.emplace(std::string(enc.begin(), enc.end()), states_.size());
    states_.push_back(std::move(enc));
    lengths_.push_back(len);
    parents_.push_back(parent);
    edges_.push_back(edge);
}

void BallTable::rebuild_index() {
    index_.clear();
    index_.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        index_.emplace(std::string(states_[i].begin(), states_[i].end()), i);
    }
}

std::optional<int> BallTable::exact_length(const GroupElement& x) const {
    if (x.dim() != dim_) {
        throw Error(ErrorCode::dimension_mismatch, "element dimension does not match the ball");
    }
    std::vector<std::uint8_t> enc = x.canonical_encoding();
    auto it = index_.find(std::string(enc.begin(), enc.end()));
    if (it == index_.end()) return std::nullopt;
    return lengths_[it->second];
}

Word BallTable::witness(const GroupElement& x) const {
    if (!has_witnesses()) {
        throw Error(ErrorCode::invalid_argument, "this table carries no witness edges");
    }
    if (x.dim() != dim_) {
        throw Error(ErrorCode::dimension_mismatch, "element dimension does not match the ball");
    }
    std::vector<std::uint8_t> enc = x.canonical_encoding();
    auto it = index_.find(std::string(enc.begin(), enc.end()));
    if (it == index_.end()) {
        throw Error(ErrorCode::invalid_argument, "element is outside the ball");
    }
    std::vector<std::int32_t> rev_edges;
    std::int64_t cur = static_cast<std::int64_t>(it->second);
    while (parents_[cur] >= 0) {
        rev_edges.push_back(edges_[cur]);
        cur = parents_[cur];
    }
    Word w;
    for (auto e = rev_edges.rbegin(); e != rev_edges.rend(); ++e) {
        const GeneratorIndex& g = gens_[*e >> 1];
        w.append(g, BigInt((*e & 1) ? -1 : 1));
    }
    return w;
}

std::vector<std::pair<int, std::uint64_t>> BallTable::sphere_growth() const {
    std::vector<std::pair<int, std::uint64_t>> out;
    for (std::size_t r = 0; r < sphere_sizes_.size(); ++r) {
        out.push_back({static_cast<int>(r), sphere_sizes_[r]});
    }
    return out;
}

BallTable bfs_ball(int dim, const std::vector<GeneratorIndex>& gens, int radius,
                   std::uint64_t budget) {
    BallTable table(dim, gens, radius);
    std::vector<GeneratorIndex> order = all_generators(dim);

    int pairs = dim * (dim - 1) / 2;
    std::vector<std::int64_t> id_state(pairs, 0);
    table.add_state(encode_dense(dim, id_state, order), 0, -1, 0);
    table.sphere_sizes_.push_back(1);

    std::vector<std::vector<std::int64_t>> frontier{id_state};
    std::vector<std::int64_t> frontier_idx{0};

    for (int layer = 1; layer <= radius; ++layer) {
        std::vector<std::vector<std::int64_t>> next;
        std::vector<std::int64_t> next_idx;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            const auto& st = frontier[f];
            for (std::size_t gi = 0; gi < table.gens_.size(); ++gi) {
                const GeneratorIndex& g = table.gens_[gi];
                for (int sign = 0; sign < 2; ++sign) {
                    std::int64_t e = sign ? -1 : 1;
                    // right-multiply by I + e*E_{ab}: column b gains e * column a
                    std::vector<std::int64_t> ns = st;
                    ns[tri_index(dim, g.i, g.j)] += e;
                    for (int row = 1; row < g.i; ++row) {
                        ns[tri_index(dim, row, g.j)] += e * st[tri_index(dim, row, g.i)];
                    }
                    std::vector<std::uint8_t> enc = encode_dense(dim, ns, order);
                    std::string key(enc.begin(), enc.end());
                    if (table.index_.count(key)) continue;
                    if (table.states_.size() + 1 > budget) {
                        throw Error(ErrorCode::resource_limit,
                                    "BFS budget exceeded; completed radius " +
                                        std::to_string(layer - 1) + " of " + std::to_string(radius));
                    }
                    table.add_state(std::move(enc), layer, frontier_idx[f],
                                    static_cast<std::int32_t>(gi * 2 + sign));
                    next.push_back(std::move(ns));
                    next_idx.push_back(static_cast<std::int64_t>(table.states_.size()) - 1);
                }
            }
        }
        table.sphere_sizes_.push_back(next.size());
        frontier = std::move(next);
        frontier_idx = std::move(next_idx);
        if (frontier.empty()) break;
    }
    while (static_cast<int>(table.sphere_sizes_.size()) < radius + 1) {
        table.sphere_sizes_.push_back(0);
    }
    return table;
}

void BallTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "' for writing");
    out << "NILBALL1 dim=" << dim_ << " radius=" << radius_
        << " gens=" << format_generating_set(gens_) << "\n";
    // deterministic record order: by length, then by encoding
    std::vector<std::size_t> idx(states_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (lengths_[a] != lengths_[b]) return lengths_[a] < lengths_[b];
        return states_[a] < states_[b];
    });
    for (std::size_t i : idx) {
        out << hex_encode(states_[i]) << " " << lengths_[i] << "\n";
    }
    if (!out) throw Error(ErrorCode::invalid_argument, "write to '" + path + "' failed");
}

BallTable BallTable::read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw Error(ErrorCode::parse_error, "empty ball file");
    std::istringstream hs(header);
    std::string magic, field;
    hs >> magic;
    if (magic != "NILBALL1") throw Error(ErrorCode::parse_error, "bad magic in ball file");
    int dim = 0, radius = -1;
    std::string gens_spec;
    while (hs >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::parse_error, "bad ball header field");
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "dim") {
            dim = std::stoi(value);
        } else if (key == "radius") {
            radius = std::stoi(value);
        } else if (key == "gens") {
            gens_spec = value;
        }
    }
    if (dim < 2 || radius < 0 || gens_spec.empty()) {
        throw Error(ErrorCode::parse_error, "incomplete ball header");
    }
    BallTable table(dim, parse_generating_set(gens_spec, dim), radius);
    table.sphere_sizes_.assign(static_cast<std::size_t>(radius) + 1, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string hex;
        int len = -1;
        ls >> hex >> len;
        if (hex.empty() || len < 0 || len > radius) {
            throw Error(ErrorCode::parse_error, "bad ball record: " + line);
        }
        std::vector<std::uint8_t> enc = hex_decode(hex);
        GroupElement decoded = GroupElement::from_encoding(enc);
        if (decoded.dim() != dim) {
            throw Error(ErrorCode::parse_error, "record dimension does not match the header");
        }
        if (decoded.is_identity() && len != 0) {
            throw Error(ErrorCode::parse_error, "identity record must have length 0");
        }
        table.states_.push_back(enc);
        table.lengths_.push_back(len);
        table.sphere_sizes_[static_cast<std::size_t>(len)] += 1;
    }
    table.rebuild_index();
    if (table.index_.size() != table.states_.size()) {
        throw Error(ErrorCode::parse_error, "duplicate records in ball file");
    }
    if (table.sphere_sizes_.empty() || table.sphere_sizes_[0] != 1) {
        throw Error(ErrorCode::parse_error, "ball file must contain exactly the identity at length 0");
    }
    return table;
}

std::vector<GeneratorIndex> parse_generating_set(const std::string& spec, int dim) {
    if (spec == "full") return all_generators(dim);
    if (spec == "first") return first_diagonal_generators(dim);
    std::vector<GeneratorIndex> gens;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto comma = part.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorCode::parse_error, "bad generator '" + part + "' (expected i,j)");
        }
        try {
            GeneratorIndex g{std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1))};
            check_generator(dim, g);
            gens.push_back(g);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorCode::parse_error, "bad generator '" + part + "'");
        }
    }
    if (gens.empty()) throw Error(ErrorCode::parse_error, "empty generating set spec");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (gens[i] == gens[j]) {
                throw Error(ErrorCode::parse_error, "duplicate generator in spec");
            }
        }
    }
    return gens;
}

std::string format_generating_set(const std::vector<GeneratorIndex>& gens) {
    std::string out;
    for (const auto& g : gens) {
        if (!out.empty()) out.push_back(';');
        out += std::to_string(g.i) + "," + std::to_string(g.j);
    }
    return out;
}

}  // namespace nilmetric
