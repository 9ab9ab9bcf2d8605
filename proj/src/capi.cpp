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

#include "nilmetric.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "collection.hpp"
#include "distortion.hpp"
#include "exact_metric.hpp"
#include "group.hpp"
#include "quasimetric.hpp"
#include "textio.hpp"
#include "word_synthesis.hpp"

using namespace nilmetric;

struct nm_element {
    GroupElement value;
};
struct nm_word {
    Word value;
};
struct nm_trace {
    CollectionTrace value;
};
struct nm_ball {
    BallTable value;
};
struct nm_embedding {
    Embedding value;
};
struct nm_profile {
    DistortionProfile value;
};

namespace {

thread_local std::string g_last_error;

nm_status status_of(const Error& e) {
    switch (e.code()) {
        case ErrorCode::invalid_argument:
        case ErrorCode::invalid_dimension:
        case ErrorCode::invalid_generator:
        case ErrorCode::invalid_span:
        case ErrorCode::invalid_embedding:
            return NM_ERROR_INVALID_ARGUMENT;
        case ErrorCode::dimension_mismatch:
            return NM_ERROR_DIMENSION_MISMATCH;
        case ErrorCode::not_in_subgroup:
            return NM_ERROR_NOT_IN_SUBGROUP;
        case ErrorCode::parse_error:
            return NM_ERROR_PARSE;
        case ErrorCode::resource_limit:
            return NM_ERROR_RESOURCE_LIMIT;
        case ErrorCode::internal:
            return NM_ERROR_INTERNAL;
    }
    return NM_ERROR_INTERNAL;
}

nm_status fail(nm_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

// runs fn, translating exceptions into status codes
template <typename Fn>
nm_status guarded(Fn&& fn) {
    try {
        fn();
        return NM_OK;
    } catch (const Error& e) {
        return fail(status_of(e), e.what());
    } catch (const std::overflow_error& e) {
        return fail(NM_ERROR_RESOURCE_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(NM_ERROR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NM_ERROR_RESOURCE_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(NM_ERROR_INTERNAL, e.what());
    }
}

nm_status require(bool ok, const char* what) {
    return ok ? NM_OK : fail(NM_ERROR_BAD_HANDLE, what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

BigInt parse_big(const char* s, const char* what) {
    if (s == nullptr) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
    try {
        return BigInt::from_string(s);
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, std::string("bad integer for ") + what);
    }
}

std::string terms_to_json(const MetricEstimate& e) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, v] : e.terms) obj[key] = v;
    return obj.dump();
}

std::string parts_to_json(const PowerDecomposition& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : d.parts) arr.push_back(q.to_string());
    return arr.dump();
}

}  // namespace

extern "C" {

const char* nm_version(void) { return "1.0.0"; }

const char* nm_status_name(nm_status s) {
    switch (s) {
        case NM_OK: return "ok";
        case NM_ERROR_INVALID_ARGUMENT: return "invalid-argument";
        case NM_ERROR_DIMENSION_MISMATCH: return "dimension-mismatch";
        case NM_ERROR_NOT_IN_SUBGROUP: return "not-in-subgroup";
        case NM_ERROR_PARSE: return "parse-error";
        case NM_ERROR_RESOURCE_LIMIT: return "resource-limit";
        case NM_ERROR_BAD_HANDLE: return "bad-handle";
        case NM_ERROR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* nm_last_error(void) { return g_last_error.c_str(); }

void nm_string_free(char* s) { delete[] s; }

/* ---- elements ---- */

nm_status nm_element_identity(int dim, nm_element** out) {
    if (nm_status s = require(out, "null output"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{identity(dim)}; });
}

nm_status nm_element_generator(int dim, int i, int j, const char* exp, nm_element** out) {
    if (nm_status s = require(out, "null output"); s != NM_OK) return s;
    return guarded([&] {
        BigInt e = exp ? parse_big(exp, "exponent") : BigInt(1);
        *out = new nm_element{generator(dim, GeneratorIndex{i, j}, e)};
    });
}

nm_status nm_element_from_json(const char* json, nm_element** out) {
    if (nm_status s = require(out && json, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{element_from_json(json)}; });
}

nm_status nm_element_to_json(const nm_element* x, char** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(element_to_json(x->value)); });
}

nm_status nm_element_clone(const nm_element* x, nm_element** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{x->value}; });
}

void nm_element_free(nm_element* x) { delete x; }

nm_status nm_element_dim(const nm_element* x, int* out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    *out = x->value.dim();
    return NM_OK;
}

nm_status nm_element_entry(const nm_element* x, int i, int j, char** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        check_generator(x->value.dim(), GeneratorIndex{i, j});
        *out = dup_string(x->value.entry(i, j).to_string());
    });
}

nm_status nm_element_equal(const nm_element* a, const nm_element* b, int* out) {
    if (nm_status s = require(a && b && out, "null argument"); s != NM_OK) return s;
    *out = a->value == b->value ? 1 : 0;
    return NM_OK;
}

nm_status nm_element_is_identity(const nm_element* x, int* out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    *out = x->value.is_identity() ? 1 : 0;
    return NM_OK;
}

nm_status nm_element_multiply(const nm_element* a, const nm_element* b, nm_element** out) {
    if (nm_status s = require(a && b && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{multiply(a->value, b->value)}; });
}

nm_status nm_element_inverse(const nm_element* x, nm_element** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{inverse(x->value)}; });
}

nm_status nm_element_pow(const nm_element* x, const char* exp, nm_element** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{element_pow(x->value, parse_big(exp, "exponent"))}; });
}

nm_status nm_element_normal_form_word(const nm_element* x, nm_word** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{normal_form(x->value).word()}; });
}

nm_status nm_element_to_heisenberg_json(const nm_element* x, int k, char** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(heisenberg_to_json(matrix_to_heisenberg(x->value, k))); });
}

nm_status nm_element_from_heisenberg_json(const char* json, nm_element** out) {
    if (nm_status s = require(json && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{heisenberg_to_matrix(heisenberg_from_json(json))}; });
}

/* ---- words ---- */

nm_status nm_word_parse(const char* text, int dim, int heis_k, nm_word** out) {
    if (nm_status s = require(text && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{parse_word(text, dim, heis_k)}; });
}

nm_status nm_word_format(const nm_word* w, int heis_k, char** out) {
    if (nm_status s = require(w && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(format_word(w->value, heis_k)); });
}

void nm_word_free(nm_word* w) { delete w; }

nm_status nm_word_length(const nm_word* w, char** out) {
    if (nm_status s = require(w && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(w->value.length().to_string()); });
}

nm_status nm_word_letter_count(const nm_word* w, int64_t* out) {
    if (nm_status s = require(w && out, "null argument"); s != NM_OK) return s;
    *out = static_cast<int64_t>(w->value.letters().size());
    return NM_OK;
}

nm_status nm_word_letter(const nm_word* w, int64_t index, int* i, int* j, char** exp) {
    if (nm_status s = require(w && i && j && exp, "null argument"); s != NM_OK) return s;
    if (index < 0 || index >= static_cast<int64_t>(w->value.letters().size())) {
        return fail(NM_ERROR_INVALID_ARGUMENT, "letter index out of range");
    }
    const Letter& l = w->value.letters()[static_cast<std::size_t>(index)];
    *i = l.gen.i;
    *j = l.gen.j;
    return guarded([&] { *exp = dup_string(l.exp.to_string()); });
}

nm_status nm_word_evaluate(const nm_word* w, int dim, nm_element** out) {
    if (nm_status s = require(w && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{evaluate_word(w->value, dim)}; });
}

/* ---- collection ---- */

nm_status nm_collect(const nm_word* w, int dim, nm_trace** out) {
    if (nm_status s = require(w && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_trace{collect(w->value, dim)}; });
}

void nm_trace_free(nm_trace* t) { delete t; }

nm_status nm_trace_result_word(const nm_trace* t, nm_word** out) {
    if (nm_status s = require(t && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{t->value.result.word()}; });
}

nm_status nm_trace_input_length(const nm_trace* t, char** out) {
    if (nm_status s = require(t && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(t->value.input_length.to_string()); });
}

nm_status nm_trace_swap_count(const nm_trace* t, char** out) {
    if (nm_status s = require(t && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(t->value.swap_count.to_string()); });
}

nm_status nm_trace_max_count(const nm_trace* t, int i, int j, char** out) {
    if (nm_status s = require(t && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        check_generator(t->value.result.dim, GeneratorIndex{i, j});
        *out = dup_string(t->value.max_count(GeneratorIndex{i, j}).to_string());
    });
}

nm_status nm_trace_csv(const nm_trace* t, char** out) {
    if (nm_status s = require(t && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        std::string csv = "i,j,span,max_count,result_exponent\n";
        for (const auto& g : all_generators(t->value.result.dim)) {
            const BigInt& c = t->value.max_count(g);
            auto it = t->value.result.exponents.find(g);
            std::string exp = it == t->value.result.exponents.end() ? "0" : it->second.to_string();
            csv += std::to_string(g.i) + "," + std::to_string(g.j) + "," +
                   std::to_string(g.span()) + "," + c.to_string() + "," + exp + "\n";
        }
        *out = dup_string(csv);
    });
}

/* ---- metric estimates ---- */

nm_status nm_integer_kth_root(const char* m, int k, char** out) {
    if (nm_status s = require(m && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be positive");
        BigInt v = parse_big(m, "radicand");
        if (v.sign() < 0) throw Error(ErrorCode::invalid_argument, "radicand must be nonnegative");
        *out = dup_string(integer_kth_root(v, static_cast<unsigned>(k)).to_string());
    });
}

nm_status nm_estimate_t(const nm_element* x, double* value, char** terms_json) {
    if (nm_status s = require(x && value, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        MetricEstimate e = estimate_T(x->value);
        *value = e.value;
        if (terms_json) *terms_json = dup_string(terms_to_json(e));
    });
}

nm_status nm_estimate_t_floor(const nm_element* x, char** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(estimate_T(x->value).floor_value.to_string()); });
}

nm_status nm_estimate_h(const nm_element* x, int k, double* value, char** terms_json) {
    if (nm_status s = require(x && value, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        MetricEstimate e = estimate_H(matrix_to_heisenberg(x->value, k));
        *value = e.value;
        if (terms_json) *terms_json = dup_string(terms_to_json(e));
    });
}

namespace {

std::string calibration_to_json(const BallTable& ball, int heis_k) {
    CalibrationReport report = calibrate(ball, heis_k);
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["D"] = row.D;
        r["C"] = row.C;
        r["witness_lower"] =
            nlohmann::json::parse(element_to_json(GroupElement::from_encoding(row.witness_lower)));
        r["witness_upper"] =
            nlohmann::json::parse(element_to_json(GroupElement::from_encoding(row.witness_upper)));
        doc["rows"].push_back(r);
    }
    doc["best"] = {{"C", report.best.C}, {"D", report.best.D}};
    doc["ball_size"] = ball.size();
    return doc.dump();
}

}  // namespace

nm_status nm_calibrate(int dim, const char* gens, int radius, int heis_k, int64_t budget,
                       char** report_json) {
    if (nm_status s = require(gens && report_json, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        BallTable ball = bfs_ball(dim, parse_generating_set(gens, dim), radius,
                                  budget > 0 ? static_cast<std::uint64_t>(budget) : kDefaultBfsBudget);
        *report_json = dup_string(calibration_to_json(ball, heis_k));
    });
}

nm_status nm_calibrate_ball(const nm_ball* b, int heis_k, char** report_json) {
    if (nm_status s = require(b && report_json, "null argument"); s != NM_OK) return s;
    return guarded([&] { *report_json = dup_string(calibration_to_json(b->value, heis_k)); });
}

/* ---- word synthesis ---- */

nm_status nm_four_squares(const char* p, char** parts_json) {
    if (nm_status s = require(p && parts_json, "null argument"); s != NM_OK) return s;
    return guarded([&] { *parts_json = dup_string(parts_to_json(four_squares(parse_big(p, "p")))); });
}

nm_status nm_waring_decompose(const char* m, int k, int64_t cap, char** parts_json) {
    if (nm_status s = require(m && parts_json, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be positive");
        *parts_json =
            dup_string(parts_to_json(waring_decompose(parse_big(m, "m"), static_cast<unsigned>(k), cap)));
    });
}

nm_status nm_commutator_word(int i, int j, const char* q, int sign, int dim, nm_word** out) {
    if (nm_status s = require(q && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        *out = new nm_word{commutator_word(i, j, parse_big(q, "q"), sign, dim)};
    });
}

nm_status nm_short_word(const nm_element* x, nm_word** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{short_word(x->value)}; });
}

nm_status nm_short_word_h(const nm_element* x, int k, nm_word** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{short_word_H(matrix_to_heisenberg(x->value, k))}; });
}

/* ---- exact metric ---- */

nm_status nm_ball_compute(int dim, const char* gens, int radius, int64_t budget, nm_ball** out) {
    if (nm_status s = require(gens && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        *out = new nm_ball{bfs_ball(dim, parse_generating_set(gens, dim), radius,
                                    budget > 0 ? static_cast<std::uint64_t>(budget)
                                               : kDefaultBfsBudget)};
    });
}

void nm_ball_free(nm_ball* b) { delete b; }

nm_status nm_ball_dim(const nm_ball* b, int* out) {
    if (nm_status s = require(b && out, "null argument"); s != NM_OK) return s;
    *out = b->value.dim();
    return NM_OK;
}

nm_status nm_ball_radius(const nm_ball* b, int* out) {
    if (nm_status s = require(b && out, "null argument"); s != NM_OK) return s;
    *out = b->value.radius();
    return NM_OK;
}

nm_status nm_ball_size(const nm_ball* b, int64_t* out) {
    if (nm_status s = require(b && out, "null argument"); s != NM_OK) return s;
    *out = static_cast<int64_t>(b->value.size());
    return NM_OK;
}

nm_status nm_ball_sphere_size(const nm_ball* b, int radius, int64_t* out) {
    if (nm_status s = require(b && out, "null argument"); s != NM_OK) return s;
    if (radius < 0 || radius > b->value.radius()) {
        return fail(NM_ERROR_INVALID_ARGUMENT, "radius outside the table");
    }
    *out = static_cast<int64_t>(b->value.sphere_sizes()[static_cast<std::size_t>(radius)]);
    return NM_OK;
}

nm_status nm_ball_exact_length(const nm_ball* b, const nm_element* x, int64_t* length,
                               int* in_ball) {
    if (nm_status s = require(b && x && length && in_ball, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        auto len = b->value.exact_length(x->value);
        *in_ball = len.has_value() ? 1 : 0;
        if (len.has_value()) *length = *len;
    });
}

nm_status nm_ball_witness(const nm_ball* b, const nm_element* x, nm_word** out) {
    if (nm_status s = require(b && x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_word{b->value.witness(x->value)}; });
}

nm_status nm_ball_write(const nm_ball* b, const char* path) {
    if (nm_status s = require(b && path, "null argument"); s != NM_OK) return s;
    return guarded([&] { b->value.write(path); });
}

nm_status nm_ball_read(const char* path, nm_ball** out) {
    if (nm_status s = require(path && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_ball{BallTable::read(path)}; });
}

/* ---- distortion ---- */

nm_status nm_embedding_create(const char* kind, int k, int l, int param, const char* subset,
                              nm_embedding** out) {
    if (nm_status s = require(kind && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        EmbeddingKind ek = embedding_kind_from_string(kind);
        switch (ek) {
            case EmbeddingKind::heis_subset: {
                std::vector<int> indices;
                if (subset && *subset) {
                    std::string spec(subset);
                    std::size_t pos = 0;
                    while (pos < spec.size()) {
                        std::size_t comma = spec.find(',', pos);
                        std::string tok = spec.substr(pos, comma == std::string::npos
                                                               ? std::string::npos
                                                               : comma - pos);
                        try {
                            indices.push_back(std::stoi(tok));
                        } catch (const std::exception&) {
                            throw Error(ErrorCode::parse_error, "bad subset token '" + tok + "'");
                        }
                        if (comma == std::string::npos) break;
                        pos = comma + 1;
                    }
                } else {
                    for (int t = 1; t <= k; ++t) indices.push_back(t);
                }
                *out = new nm_embedding{Embedding::heis_subset(k, l, std::move(indices))};
                break;
            }
            case EmbeddingKind::heis_into_t:
                *out = new nm_embedding{Embedding::heis_into_t(k)};
                break;
            case EmbeddingKind::t_corner:
                *out = new nm_embedding{Embedding::t_corner(k, l)};
                break;
            case EmbeddingKind::t_block:
                *out = new nm_embedding{Embedding::t_block(k, l, param)};
                break;
            case EmbeddingKind::composed:
                *out = new nm_embedding{Embedding::composed(k, l, param)};
                break;
        }
    });
}

void nm_embedding_free(nm_embedding* e) { delete e; }

nm_status nm_embedding_describe(const nm_embedding* e, char** out) {
    if (nm_status s = require(e && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(e->value.describe()); });
}

nm_status nm_embedding_predicted_exponent(const nm_embedding* e, double* out) {
    if (nm_status s = require(e && out, "null argument"); s != NM_OK) return s;
    *out = e->value.predicted_exponent();
    return NM_OK;
}

nm_status nm_embedding_apply(const nm_embedding* e, const nm_element* x, nm_element** out) {
    if (nm_status s = require(e && x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_element{e->value.apply(x->value)}; });
}

nm_status nm_cyclic_exponent_t(const nm_element* x, int* out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = cyclic_exponent_T(x->value); });
}

nm_status nm_distortion_profile(const nm_embedding* e, int64_t n_max, int perturb_count,
                                uint64_t seed, nm_profile** out) {
    if (nm_status s = require(e && out, "null argument"); s != NM_OK) return s;
    return guarded([&] {
        *out = new nm_profile{distortion_profile(e->value, n_max, perturb_count, seed)};
    });
}

nm_status nm_cyclic_profile(const nm_element* x, int64_t n_max, nm_profile** out) {
    if (nm_status s = require(x && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = new nm_profile{cyclic_profile(x->value, n_max)}; });
}

void nm_profile_free(nm_profile* p) { delete p; }

nm_status nm_profile_description(const nm_profile* p, char** out) {
    if (nm_status s = require(p && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(p->value.description); });
}

nm_status nm_profile_fitted_exponent(const nm_profile* p, double* out) {
    if (nm_status s = require(p && out, "null argument"); s != NM_OK) return s;
    *out = p->value.fitted_exponent;
    return NM_OK;
}

nm_status nm_profile_predicted_exponent(const nm_profile* p, double* out) {
    if (nm_status s = require(p && out, "null argument"); s != NM_OK) return s;
    *out = p->value.predicted_exponent;
    return NM_OK;
}

nm_status nm_profile_sample_count(const nm_profile* p, int* out) {
    if (nm_status s = require(p && out, "null argument"); s != NM_OK) return s;
    *out = static_cast<int>(p->value.samples.size());
    return NM_OK;
}

nm_status nm_profile_sample(const nm_profile* p, int index, double* n, double* max_inner) {
    if (nm_status s = require(p && n && max_inner, "null argument"); s != NM_OK) return s;
    if (index < 0 || index >= static_cast<int>(p->value.samples.size())) {
        return fail(NM_ERROR_INVALID_ARGUMENT, "sample index out of range");
    }
    const DistortionSample& sm = p->value.samples[static_cast<std::size_t>(index)];
    *n = sm.n;
    *max_inner = sm.missing ? -1.0 : sm.max_inner;
    return NM_OK;
}

nm_status nm_profile_csv(const nm_profile* p, char** out) {
    if (nm_status s = require(p && out, "null argument"); s != NM_OK) return s;
    return guarded([&] { *out = dup_string(p->value.csv()); });
}

}  // extern "C"
