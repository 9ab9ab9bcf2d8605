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

// nilmetric command-line driver. All group computations go through the C
// API of libnilmetric; this file only parses flags and formats output.
//
// Exit codes: 0 success, 2 input error, 3 resource limit, 4 internal
// invariant breach.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilmetric.h"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(nm_status s) {
    if (s == NM_OK) return;
    int code = kExitInput;
    if (s == NM_ERROR_RESOURCE_LIMIT) code = kExitResource;
    if (s == NM_ERROR_INTERNAL || s == NM_ERROR_BAD_HANDLE) code = kExitInternal;
    die(code, std::string(nm_status_name(s)) + ": " + nm_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    nm_string_free(s);
    return out;
}

using ElementPtr = std::unique_ptr<nm_element, decltype(&nm_element_free)>;
using WordPtr = std::unique_ptr<nm_word, decltype(&nm_word_free)>;
using BallPtr = std::unique_ptr<nm_ball, decltype(&nm_ball_free)>;
using TracePtr = std::unique_ptr<nm_trace, decltype(&nm_trace_free)>;
using EmbeddingPtr = std::unique_ptr<nm_embedding, decltype(&nm_embedding_free)>;
using ProfilePtr = std::unique_ptr<nm_profile, decltype(&nm_profile_free)>;

// flags shared by the element/word input commands
struct InputOptions {
    std::string word;
    std::string element_json;
    std::string element_file;
    int dim = 0;
    int heis_k = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--word", word, "word in tokens a[i,j]^e (aliases a_i, b_i, c with --heisenberg)");
        cmd->add_option("--element", element_json, "element document JSON");
        cmd->add_option("--element-file", element_file, "path of an element document");
        cmd->add_option("--dim", dim, "matrix dimension (required with --word)");
        cmd->add_option("--heisenberg", heis_k, "Heisenberg rank k; switches aliases and estimates");
    }

    ElementPtr load() const {
        int sources = (!word.empty() ? 1 : 0) + (!element_json.empty() ? 1 : 0) +
                      (!element_file.empty() ? 1 : 0);
        if (sources != 1) {
            die(kExitInput, "provide exactly one of --word, --element, --element-file");
        }
        nm_element* el = nullptr;
        if (!word.empty()) {
            int d = dim > 0 ? dim : (heis_k > 0 ? heis_k + 2 : 0);
            if (d <= 0) die(kExitInput, "--word needs --dim (or --heisenberg)");
            nm_word* w = nullptr;
            check(nm_word_parse(word.c_str(), d, heis_k, &w));
            WordPtr wp(w, nm_word_free);
            check(nm_word_evaluate(w, d, &el));
        } else {
            std::string text = element_json;
            if (!element_file.empty()) {
                std::ifstream in(element_file);
                if (!in) die(kExitInput, "cannot open '" + element_file + "'");
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            check(nm_element_from_json(text.c_str(), &el));
        }
        return ElementPtr(el, nm_element_free);
    }
};

std::int64_t env_budget() {
    const char* v = std::getenv("NILMETRIC_BUDGET");
    if (v == nullptr || *v == '\0') return 0;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) {
        die(kExitInput, "NILMETRIC_BUDGET must be a positive integer");
    }
    return parsed;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitInput, "cannot open '" + path + "' for writing");
    out << content;
    if (!out) die(kExitInput, "write to '" + path + "' failed");
}

// Heisenberg normal form c^p b_k^{m_k} a_k^{n_k} ... b_1^{m_1} a_1^{n_1}
// as word text, from the coordinate JSON
std::string heis_normal_form_text(const std::string& heis_json) {
    nlohmann::json doc = nlohmann::json::parse(heis_json);
    int k = doc["k"].get<int>();
    auto exp_str = [](const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
    };
    std::string out;
    auto emit = [&](const std::string& sym, const std::string& e) {
        if (e == "0") return;
        if (!out.empty()) out += " ";
        out += sym + "^" + e;
    };
    emit("c", exp_str(doc["p"]));
    for (int i = k; i >= 1; --i) {
        emit("b_" + std::to_string(i), exp_str(doc["b"][i - 1]));
        emit("a_" + std::to_string(i), exp_str(doc["a"][i - 1]));
    }
    return out;
}

double estimate_for(const nm_element* el, int heis_k, std::string* terms_json) {
    double value = 0.0;
    char* terms = nullptr;
    if (heis_k > 0) {
        check(nm_estimate_h(el, heis_k, &value, terms_json ? &terms : nullptr));
    } else {
        check(nm_estimate_t(el, &value, terms_json ? &terms : nullptr));
    }
    if (terms_json) *terms_json = take_string(terms);
    return value;
}

void print_terms(const std::string& terms_json) {
    nlohmann::json obj = nlohmann::json::parse(terms_json);
    for (const auto& [key, value] : obj.items()) {
        std::printf("term %s = %.6g\n", key.c_str(), value.get<double>());
    }
}

int run_nf(const InputOptions& in) {
    ElementPtr el = in.load();
    if (in.heis_k > 0) {
        char* hj = nullptr;
        check(nm_element_to_heisenberg_json(el.get(), in.heis_k, &hj));
        std::printf("%s\n", heis_normal_form_text(take_string(hj)).c_str());
        return 0;
    }
    nm_word* w = nullptr;
    check(nm_element_normal_form_word(el.get(), &w));
    WordPtr wp(w, nm_word_free);
    char* text = nullptr;
    check(nm_word_format(w, 0, &text));
    std::printf("%s\n", take_string(text).c_str());
    return 0;
}

int run_metric(const InputOptions& in, int exact_radius, const std::string& gens,
               std::int64_t budget) {
    ElementPtr el = in.load();
    std::string terms;
    double value = estimate_for(el.get(), in.heis_k, &terms);
    std::printf("E = %.6g\n", value);
    print_terms(terms);
    if (exact_radius <= 0) return 0;

    int dim = 0;
    check(nm_element_dim(el.get(), &dim));
    nm_ball* ball = nullptr;
    check(nm_ball_compute(dim, gens.c_str(), exact_radius, budget, &ball));
    BallPtr bp(ball, nm_ball_free);
    std::int64_t len = 0;
    int in_ball = 0;
    check(nm_ball_exact_length(ball, el.get(), &len, &in_ball));
    if (!in_ball) {
        std::printf("exact = beyond-radius (radius %d)\n", exact_radius);
        return 0;
    }
    std::printf("exact = %lld (radius %d)\n", static_cast<long long>(len), exact_radius);

    char* report = nullptr;
    check(nm_calibrate_ball(ball, in.heis_k, &report));
    nlohmann::json doc = nlohmann::json::parse(take_string(report));
    double C = doc["best"]["C"].get<double>();
    double D = doc["best"]["D"].get<double>();
    bool ok = value / C - D <= static_cast<double>(len) + 1e-9 &&
              static_cast<double>(len) <= C * value + D + 1e-9;
    std::printf("sandwich (C=%.6g, D=%.6g): %s\n", C, D, ok ? "ok" : "VIOLATED");
    if (!ok) die(kExitInternal, "sandwich violated on a ball element");
    return 0;
}

int run_collect(const InputOptions& in, const std::string& csv_path) {
    if (in.word.empty()) die(kExitInput, "collect needs --word");
    int dim = in.dim > 0 ? in.dim : (in.heis_k > 0 ? in.heis_k + 2 : 0);
    if (dim <= 0) die(kExitInput, "collect needs --dim (or --heisenberg)");
    nm_word* w = nullptr;
    check(nm_word_parse(in.word.c_str(), dim, in.heis_k, &w));
    WordPtr wp(w, nm_word_free);
    nm_trace* trace = nullptr;
    check(nm_collect(w, dim, &trace));
    TracePtr tp(trace, nm_trace_free);

    char* s = nullptr;
    check(nm_trace_input_length(trace, &s));
    std::printf("input_length = %s\n", take_string(s).c_str());
    check(nm_trace_swap_count(trace, &s));
    std::printf("swap_count = %s\n", take_string(s).c_str());

    nm_word* result = nullptr;
    check(nm_trace_result_word(trace, &result));
    WordPtr rp(result, nm_word_free);
    check(nm_word_format(result, in.heis_k, &s));
    std::printf("normal_form: %s\n", take_string(s).c_str());

    check(nm_trace_csv(trace, &s));
    std::string csv = take_string(s);
    std::istringstream rows(csv);
    std::string row;
    std::getline(rows, row);  // header
    while (std::getline(rows, row)) {
        std::istringstream cells(row);
        std::string i, j, span, count, exp;
        std::getline(cells, i, ',');
        std::getline(cells, j, ',');
        std::getline(cells, span, ',');
        std::getline(cells, count, ',');
        std::getline(cells, exp, ',');
        if (count != "0") {
            std::printf("max_count a[%s,%s] = %s\n", i.c_str(), j.c_str(), count.c_str());
        }
    }
    if (!csv_path.empty()) write_file(csv_path, csv);
    return 0;
}

int run_shortword(const InputOptions& in) {
    ElementPtr el = in.load();
    nm_word* w = nullptr;
    if (in.heis_k > 0) {
        check(nm_short_word_h(el.get(), in.heis_k, &w));
    } else {
        check(nm_short_word(el.get(), &w));
    }
    WordPtr wp(w, nm_word_free);

    char* text = nullptr;
    check(nm_word_format(w, in.heis_k, &text));
    std::printf("word: %s\n", take_string(text).c_str());
    char* len = nullptr;
    check(nm_word_length(w, &len));
    std::printf("length = %s\n", take_string(len).c_str());
    std::printf("E = %.6g\n", estimate_for(el.get(), in.heis_k, nullptr));

    int dim = 0;
    check(nm_element_dim(el.get(), &dim));
    nm_element* back = nullptr;
    check(nm_word_evaluate(w, dim, &back));
    ElementPtr bp(back, nm_element_free);
    int equal = 0;
    check(nm_element_equal(el.get(), back, &equal));
    if (!equal) die(kExitInternal, "short word failed to evaluate back to the input");
    std::printf("VERIFIED\n");
    return 0;
}

int run_calibrate(int dim, const std::string& gens, int radius, int heis_k, std::int64_t budget,
                  bool as_json) {
    char* report = nullptr;
    check(nm_calibrate(dim, gens.c_str(), radius, heis_k, budget, &report));
    std::string text = take_string(report);
    if (as_json) {
        std::printf("%s\n", text.c_str());
        return 0;
    }
    nlohmann::json doc = nlohmann::json::parse(text);
    std::printf("ball_size = %lld\n", doc["ball_size"].get<long long>());
    for (const auto& row : doc["rows"]) {
        std::printf("D=%d: C=%.6g lower-witness %s upper-witness %s\n", row["D"].get<int>(),
                    row["C"].get<double>(), row["witness_lower"].dump().c_str(),
                    row["witness_upper"].dump().c_str());
    }
    std::printf("best: C=%.6g D=%.6g\n", doc["best"]["C"].get<double>(),
                doc["best"]["D"].get<double>());
    return 0;
}

struct DistortOptions {
    std::string embedding;
    int k = 0, l = 0, a = 1, r = 1;
    std::string subset;
    std::int64_t nmax = 16384;
    int perturb = 8;
    std::string csv_path;
    InputOptions input;  // generator element for --embedding cyclic
};

int run_distort(const DistortOptions& opt, std::uint64_t seed) {
    ProfilePtr profile(nullptr, nm_profile_free);
    if (opt.embedding == "cyclic") {
        ElementPtr el = opt.input.load();
        nm_profile* p = nullptr;
        check(nm_cyclic_profile(el.get(), opt.nmax, &p));
        profile.reset(p);
    } else {
        int param = opt.embedding == "block" ? opt.a : opt.r;
        nm_embedding* e = nullptr;
        check(nm_embedding_create(opt.embedding.c_str(), opt.k, opt.l, param,
                                  opt.subset.empty() ? nullptr : opt.subset.c_str(), &e));
        EmbeddingPtr ep(e, nm_embedding_free);
        nm_profile* p = nullptr;
        check(nm_distortion_profile(e, opt.nmax, opt.perturb, seed, &p));
        profile.reset(p);
    }

    char* s = nullptr;
    check(nm_profile_description(profile.get(), &s));
    std::printf("%s\n", take_string(s).c_str());
    double predicted = 0.0, fitted = 0.0;
    check(nm_profile_predicted_exponent(profile.get(), &predicted));
    check(nm_profile_fitted_exponent(profile.get(), &fitted));
    int count = 0;
    check(nm_profile_sample_count(profile.get(), &count));
    for (int idx = 0; idx < count; ++idx) {
        double n = 0.0, max_inner = 0.0;
        check(nm_profile_sample(profile.get(), idx, &n, &max_inner));
        if (max_inner < 0) {
            std::printf("n=%.6g: no feasible sample\n", n);
        } else {
            std::printf("n=%.6g: max_inner=%.6g\n", n, max_inner);
        }
    }
    std::printf("predicted exponent = %.6g\n", predicted);
    std::printf("fitted exponent = %.6g\n", fitted);
    if (!opt.csv_path.empty()) {
        check(nm_profile_csv(profile.get(), &s));
        write_file(opt.csv_path, take_string(s));
    }
    return 0;
}

int run_ball(int dim, const std::string& gens, int radius, std::int64_t budget,
             const std::string& out_path) {
    nm_ball* ball = nullptr;
    check(nm_ball_compute(dim, gens.c_str(), radius, budget, &ball));
    BallPtr bp(ball, nm_ball_free);
    std::int64_t total = 0;
    check(nm_ball_size(ball, &total));
    std::printf("ball_size = %lld\n", static_cast<long long>(total));
    for (int r = 0; r <= radius; ++r) {
        std::int64_t count = 0;
        check(nm_ball_sphere_size(ball, r, &count));
        std::printf("sphere %d = %lld\n", r, static_cast<long long>(count));
    }
    if (!out_path.empty()) {
        check(nm_ball_write(ball, out_path.c_str()));
        std::printf("written: %s\n", out_path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric geometry of integer Heisenberg and unitriangular matrix groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", nm_version());
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized samplers");

    InputOptions nf_in;
    auto* nf = app.add_subcommand("nf", "normal form of an element or word");
    nf_in.attach(nf);

    InputOptions metric_in;
    int exact_radius = 0;
    std::string metric_gens = "full";
    auto* metric = app.add_subcommand("metric", "metric estimate E, optionally with the exact length");
    metric_in.attach(metric);
    metric->add_option("--exact-radius", exact_radius, "also BFS the ball of this radius");
    metric->add_option("--gens", metric_gens, "generating set for the exact ball");

    InputOptions collect_in;
    std::string collect_csv;
    auto* collect = app.add_subcommand("collect", "rewrite a word to normal form, with counts");
    collect_in.attach(collect);
    collect->add_option("--csv", collect_csv, "write the per-generator counts as CSV");

    InputOptions short_in;
    auto* shortword = app.add_subcommand("shortword", "synthesize a short word for an element");
    short_in.attach(shortword);

    int cal_dim = 3, cal_radius = 4, cal_heis = 0;
    std::string cal_gens = "full";
    bool cal_json = false;
    auto* calibrate = app.add_subcommand("calibrate", "fit quasi-metric constants on a BFS ball");
    calibrate->add_option("--dim", cal_dim, "matrix dimension");
    calibrate->add_option("--gens", cal_gens, "generating set spec");
    calibrate->add_option("--radius", cal_radius, "ball radius");
    calibrate->add_option("--heisenberg", cal_heis, "use the Heisenberg estimate with this k");
    calibrate->add_flag("--json", cal_json, "print the raw JSON report");

    DistortOptions dis;
    auto* distort = app.add_subcommand("distort", "measure a distortion profile");
    distort->add_option("--embedding", dis.embedding,
                        "heis-subset | heis-in-T | corner | block | composed | cyclic")
        ->required();
    distort->add_option("--k", dis.k, "source size");
    distort->add_option("--l", dis.l, "target size");
    distort->add_option("--a", dis.a, "block split position");
    distort->add_option("--r", dis.r, "composed distortion degree");
    distort->add_option("--subset", dis.subset, "index subset for heis-subset, e.g. 1,3");
    distort->add_option("--nmax", dis.nmax, "largest outer budget (geometric grid from 4)");
    distort->add_option("--perturb", dis.perturb, "random perturbations per budget");
    distort->add_option("--csv", dis.csv_path, "write the profile as CSV");
    dis.input.attach(distort);

    int ball_dim = 3, ball_radius = 4;
    std::string ball_gens = "full", ball_out;
    auto* ball = app.add_subcommand("ball", "compute and export an exact ball table");
    ball->add_option("--dim", ball_dim, "matrix dimension");
    ball->add_option("--gens", ball_gens, "generating set spec");
    ball->add_option("--radius", ball_radius, "ball radius");
    ball->add_option("--out", ball_out, "NILBALL1 output path");

    std::int64_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "BFS element budget (overrides NILMETRIC_BUDGET)");

    try {
        app.parse(argc, argv);
        std::int64_t budget = budget_flag > 0 ? budget_flag : env_budget();
        if (nf->parsed()) return run_nf(nf_in);
        if (metric->parsed()) return run_metric(metric_in, exact_radius, metric_gens, budget);
        if (collect->parsed()) return run_collect(collect_in, collect_csv);
        if (shortword->parsed()) return run_shortword(short_in);
        if (calibrate->parsed())
            return run_calibrate(cal_dim, cal_gens, cal_radius, cal_heis, budget, cal_json);
        if (distort->parsed()) return run_distort(dis, seed);
        if (ball->parsed()) return run_ball(ball_dim, ball_gens, ball_radius, budget, ball_out);
        die(kExitInput, "no subcommand given");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
    return 0;
}
