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

#include "textio.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace nilmetric {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
    throw Error(ErrorCode::parse_error, msg);
}

BigInt parse_exp(const std::string& tok, std::size_t pos) {
    if (pos >= tok.size()) return BigInt(1);
    if (tok[pos] != '^') parse_fail("expected '^' in token '" + tok + "'");
    std::string num = tok.substr(pos + 1);
    if (num.empty()) parse_fail("missing exponent in token '" + tok + "'");
    try {
        return BigInt::from_string(num);
    } catch (const std::exception&) {
        parse_fail("bad exponent in token '" + tok + "'");
    }
}

int parse_int_field(const std::string& tok, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) parse_fail("expected an index in token '" + tok + "'");
    try {
        return std::stoi(tok.substr(start, pos - start));
    } catch (const std::exception&) {
        parse_fail("index out of range in token '" + tok + "'");
    }
}

Letter parse_token(const std::string& tok, int dim, int heis_k) {
    if (tok.rfind("a[", 0) == 0) {
        std::size_t pos = 2;
        int i = parse_int_field(tok, pos);
        if (pos >= tok.size() || tok[pos] != ',') parse_fail("expected ',' in token '" + tok + "'");
        ++pos;
        int j = parse_int_field(tok, pos);
        if (pos >= tok.size() || tok[pos] != ']') parse_fail("expected ']' in token '" + tok + "'");
        ++pos;
        GeneratorIndex g{i, j};
        check_generator(dim, g);
        return Letter{g, parse_exp(tok, pos)};
    }
    if (heis_k > 0) {
        if (tok.rfind("a_", 0) == 0 || tok.rfind("b_", 0) == 0) {
            bool is_a = tok[0] == 'a';
            std::size_t pos = 2;
            int idx = parse_int_field(tok, pos);
            if (idx < 1 || idx > heis_k) {
                parse_fail("Heisenberg index out of range in token '" + tok + "'");
            }
            GeneratorIndex g = is_a ? heis_a(idx, heis_k) : heis_b(idx, heis_k);
            check_generator(dim, g);
            return Letter{g, parse_exp(tok, pos)};
        }
        if (tok[0] == 'c' && (tok.size() == 1 || tok[1] == '^')) {
            GeneratorIndex g = heis_c(heis_k);
            check_generator(dim, g);
            return Letter{g, parse_exp(tok, 1)};
        }
    }
    parse_fail("unrecognized token '" + tok + "'");
}

}  // namespace

Word parse_word(const std::string& text, int dim, int heis_k) {
    check_dim(dim);
    if (heis_k > 0 && dim != heis_k + 2) {
        throw Error(ErrorCode::invalid_argument, "Heisenberg context requires dim = k + 2");
    }
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Letter l = parse_token(tok, dim, heis_k);
        w.append(l.gen, l.exp);
    }
    return w;
}

std::string format_word(const Word& w, int heis_k) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out.push_back(' ');
        bool aliased = false;
        if (heis_k > 0) {
            if (l.gen == heis_c(heis_k)) {
                out += "c";
                aliased = true;
            } else if (l.gen.i == 1 && l.gen.j >= 2 && l.gen.j <= heis_k + 1) {
                out += "a_" + std::to_string(l.gen.j - 1);
                aliased = true;
            } else if (l.gen.j == heis_k + 2 && l.gen.i >= 2 && l.gen.i <= heis_k + 1) {
                out += "b_" + std::to_string(l.gen.i - 1);
                aliased = true;
            }
        }
        if (!aliased) {
            out += "a[" + std::to_string(l.gen.i) + "," + std::to_string(l.gen.j) + "]";
        }
        out += "^" + l.exp.to_string();
    }
    return out;
}

namespace {

json value_to_json(const BigInt& v) {
    if (v.fits_int64()) {
        std::int64_t i = v.to_int64();
        // keep numeric form only where round-tripping through double-based
        // JSON consumers stays exact
        if (i >= -(1ll << 53) && i <= (1ll << 53)) return json(i);
    }
    return json(v.to_string());
}

BigInt value_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    parse_fail("entry value must be an integer or a decimal string");
}

}  // namespace

GroupElement element_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        parse_fail(std::string("bad element JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim")) parse_fail("element JSON needs a 'dim' field");
    if (!doc["dim"].is_number_integer()) parse_fail("'dim' must be an integer");
    int dim = doc["dim"].get<int>();
    check_dim(dim);
    EntryMap entries;
    if (doc.contains("entries")) {
        if (!doc["entries"].is_array()) parse_fail("'entries' must be an array");
        for (const auto& e : doc["entries"]) {
            if (!e.is_array() || e.size() != 3) parse_fail("each entry must be [i, j, value]");
            if (!e[0].is_number_integer() || !e[1].is_number_integer()) {
                parse_fail("entry indices must be integers");
            }
            GeneratorIndex g{e[0].get<int>(), e[1].get<int>()};
            check_generator(dim, g);
            if (entries.count(g)) parse_fail("duplicate entry in element JSON");
            BigInt v = value_from_json(e[2]);
            if (!v.is_zero()) entries.emplace(g, v);
        }
    }
    return GroupElement(dim, std::move(entries));
}

std::string element_to_json(const GroupElement& x) {
    json doc;
    doc["dim"] = x.dim();
    json arr = json::array();
    for (const auto& [g, v] : x.entries()) {
        arr.push_back(json::array({g.i, g.j, value_to_json(v)}));
    }
    doc["entries"] = arr;
    return doc.dump();
}

std::string heisenberg_to_json(const HeisenbergForm& h) {
    json doc;
    doc["k"] = h.k;
    json a = json::array(), b = json::array();
    for (const auto& v : h.a_exps) a.push_back(value_to_json(v));
    for (const auto& v : h.b_exps) b.push_back(value_to_json(v));
    doc["a"] = a;
    doc["b"] = b;
    doc["p"] = value_to_json(h.c_exp);
    return doc.dump();
}

HeisenbergForm heisenberg_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        parse_fail(std::string("bad Heisenberg JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc["k"].is_number_integer()) {
        parse_fail("Heisenberg JSON needs an integer 'k'");
    }
    HeisenbergForm h;
    h.k = doc["k"].get<int>();
    if (h.k < 1) parse_fail("'k' must be at least 1");
    h.a_exps.assign(h.k, BigInt());
    h.b_exps.assign(h.k, BigInt());
    auto fill = [&](const char* key, std::vector<BigInt>& out) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_array() || doc[key].size() > static_cast<std::size_t>(h.k)) {
            parse_fail(std::string("'") + key + "' must be an array of at most k values");
        }
        for (std::size_t i = 0; i < doc[key].size(); ++i) out[i] = value_from_json(doc[key][i]);
    };
    fill("a", h.a_exps);
    fill("b", h.b_exps);
    if (doc.contains("p")) h.c_exp = value_from_json(doc["p"]);
    return h;
}

std::string hex_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> hex_decode(const std::string& s) {
    if (s.size() % 2 != 0) parse_fail("odd-length hex string");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        parse_fail("bad hex digit");
    };
    std::vector<std::uint8_t> out(s.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((nibble(s[2 * i]) << 4) | nibble(s[2 * i + 1]));
    }
    return out;
}

}  // namespace nilmetric
