// Copyright 2026 The qss Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "qss/channels.hpp"

namespace qss {

/// `steps` evenly spaced values from start to stop inclusive. A single
/// fixed value is a range with steps == 1 and start == stop.
struct Range {
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 2;

    static Range point(double value) { return {value, value, 1}; }
    std::vector<double> values() const;
};

enum class OutputFormat { csv, json };

struct SweepSpec {
    Range p{0.0, 1.0, 11};
    Range alpha{0.05, 0.95, 19};
    ChannelName channel = ChannelName::phase_damping;
    /// Monte Carlo trials per grid point; 0 = analytic columns only.
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::csv;

    /// Throws DomainError / ContractError for an unusable spec.
    void validate() const;
};

/// 21 x 19 grid over p in [0, 1] and alpha in [0.05, 0.95].
SweepSpec fig1_preset();
/// Hadamard basis, `p_steps` points over p in [0, 1].
SweepSpec fig2_preset(std::size_t p_steps = 11);

struct SweepRow {
    double p;
    double alpha;
    double error_rate;
    double success;
    double bits;
    std::optional<double> empirical_success;
    std::optional<double> stderr_success;
};

/// Rows ordered by (p, alpha) whatever the worker count. Grid point i runs
/// its campaign with seed + i.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned workers = 1);

/// Header plus one line per row; columns p, alpha, error_rate, success,
/// bits, empirical_success, stderr. Empty fields when there is no Monte
/// Carlo estimate.
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const std::vector<SweepRow> &rows);

} // namespace qss
