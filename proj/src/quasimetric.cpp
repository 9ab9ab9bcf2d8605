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

#include "quasimetric.hpp"

#include <cmath>

namespace nilmetric {

namespace {

double root_term(const BigInt& m, int k) {
    if (k == 1) return m.abs().to_double();
    return std::pow(m.abs().to_double(), 1.0 / static_cast<double>(k));
}

}  // namespace

MetricEstimate estimate_T(const NormalForm& nf) {
    MetricEstimate e;
    for (const auto& [g, m] : nf.exponents) {
        if (m.is_zero()) continue;
        double t = root_term(m, g.span());
        e.value += t;
        e.terms.push_back({"a[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]", t});
        e.floor_value += integer_kth_root(m.abs(), static_cast<unsigned>(g.span()));
    }
    return e;
}

MetricEstimate estimate_T(const GroupElement& x) { return estimate_T(normal_form(x)); }

MetricEstimate estimate_H(const HeisenbergForm& h) {
    MetricEstimate e;
    for (int i = 1; i <= h.k; ++i) {
        const BigInt& n = h.a_exps[i - 1];
        if (!n.is_zero()) {
            double t = n.abs().to_double();
            e.value += t;
            e.terms.push_back({"n" + std::to_string(i), t});
            e.floor_value += n.abs();
        }
    }
    for (int i = 1; i <= h.k; ++i) {
        const BigInt& m = h.b_exps[i - 1];
        if (!m.is_zero()) {
            double t = m.abs().to_double();
            e.value += t;
            e.terms.push_back({"m" + std::to_string(i), t});
            e.floor_value += m.abs();
        }
    }
    if (!h.c_exp.is_zero()) {
        double t = std::sqrt(h.c_exp.abs().to_double());
        e.value += t;
        e.terms.push_back({"p", t});
        e.floor_value += integer_kth_root(h.c_exp.abs(), 2);
    }
    return e;
}

double estimate_value(const GroupElement& x, int heis_k) {
    if (heis_k > 0) return estimate_H(matrix_to_heisenberg(x, heis_k)).value;
    return estimate_T(x).value;
}

CalibrationReport calibrate(const BallTable& ball, int heis_k) {
    CalibrationReport report;
    // one pass computing (E, len) pairs; the D sweep reuses them
    std::vector<std::pair<double, int>> points;
    std::vector<std::vector<std::uint8_t>> encodings;
    points.reserve(ball.size());
    ball.for_each([&](const GroupElement& x, int len) {
        points.push_back({estimate_value(x, heis_k), len});
        encodings.push_back(x.canonical_encoding());
    });

    for (int d = 0; d <= 8; ++d) {
        CalibrationRow row;
        row.D = d;
        double c_lo = 0.0, c_hi = 0.0;
        std::size_t arg_lo = 0, arg_hi = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto [e, len] = points[i];
            if (e > 0.0) {
                double need = e / (static_cast<double>(len) + d);
                if (need > c_lo) {
                    c_lo = need;
                    arg_lo = i;
                }
                if (len > d) {
                    double need_up = (static_cast<double>(len) - d) / e;
                    if (need_up > c_hi) {
                        c_hi = need_up;
                        arg_hi = i;
                    }
                }
            }
        }
        row.C = std::max({1.0, c_lo, c_hi});
        row.witness_lower = encodings[arg_lo];
        row.witness_upper = encodings[arg_hi];
        report.rows.push_back(row);
    }
    report.best = {report.rows.front().C, 0.0};
    for (const auto& row : report.rows) {
        if (row.C < report.best.C) report.best = {row.C, static_cast<double>(row.D)};
    }
    return report;
}

}  // namespace nilmetric
