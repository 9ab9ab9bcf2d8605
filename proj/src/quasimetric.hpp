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

#ifndef NILMETRIC_QUASIMETRIC_HPP
#define NILMETRIC_QUASIMETRIC_HPP

#include <string>
#include <vector>

#include "exact_metric.hpp"
#include "group.hpp"

namespace nilmetric {

// Value of the metric estimate together with its per-term breakdown and the
// exact floor-root surrogate (sum of integer roots), which orders elements
// without floating point.
struct MetricEstimate {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> terms;
    BigInt floor_value;
};

// sum over nonzero entries of |m_ij|^(1/(j-i))
MetricEstimate estimate_T(const NormalForm& nf);
MetricEstimate estimate_T(const GroupElement& x);

// sum |n_i| + sum |m_j| + sqrt(|p|)
MetricEstimate estimate_H(const HeisenbergForm& h);

struct QuasiMetricConstants {
    double C = 1.0;
    double D = 0.0;
};

struct CalibrationRow {
    int D = 0;
    double C = 1.0;  // minimal C >= 1 making the sandwich hold at this D
    // elements attaining the binding constraints, canonical encodings
    std::vector<std::uint8_t> witness_lower;  // maximizes E / (len + D)
    std::vector<std::uint8_t> witness_upper;  // maximizes (len - D) / E
};

struct CalibrationReport {
    std::vector<CalibrationRow> rows;  // one per swept D
    QuasiMetricConstants best;         // minimal C over the sweep
};

// Checks E(x)/C - D <= ||x|| <= C E(x) + D over the whole ball and returns
// the minimal C for each D in {0..8}. With heis_k > 0 the estimate is the
// Heisenberg one (elements must lie in the Heisenberg pattern); otherwise
// the T estimate.
CalibrationReport calibrate(const BallTable& ball, int heis_k = 0);

// Convenience: estimate value used by calibrate for one element.
double estimate_value(const GroupElement& x, int heis_k);

}  // namespace nilmetric

#endif
