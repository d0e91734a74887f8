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

#include "qss/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <json.hpp>

#include "qss/errors.hpp"
#include "qss/format.hpp"
#include "qss/protocol.hpp"
#include "qss/states.hpp"

namespace qss {

namespace {

void check_range(const Range &r, const char *name, bool open_interval) {
    const bool single = r.steps == 1 && r.start == r.stop;
    if (!single && r.steps < 2) {
        throw ContractError(std::string(name) + " range needs at least 2 steps");
    }
    for (double v : {r.start, r.stop}) {
        const bool ok = open_interval ? (v > 0.0 && v < 1.0) : (v >= 0.0 && v <= 1.0);
        if (!ok) {
            throw DomainError(std::string(name) + " value " + std::to_string(v) +
                              (open_interval ? " outside (0, 1)" : " outside [0, 1]"));
        }
    }
}

} // namespace

std::vector<double> Range::values() const {
    if (steps == 1) {
        return {start};
    }
    std::vector<double> out(steps);
    const double span = stop - start;
    const auto last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = start + span * (static_cast<double>(i) / last);
    }
    out.back() = stop;
    return out;
}

void SweepSpec::validate() const {
    check_range(p, "p", false);
    check_range(alpha, "alpha", true);
    if (trials > 0 && !seed) {
        throw ContractError("a seed is required when trials > 0");
    }
}

SweepSpec fig1_preset() {
    SweepSpec spec;
    spec.p = {0.0, 1.0, 21};
    spec.alpha = {0.05, 0.95, 19};
    return spec;
}

SweepSpec fig2_preset(std::size_t p_steps) {
    SweepSpec spec;
    spec.p = {0.0, 1.0, p_steps};
    spec.alpha = Range::point(inv_sqrt2);
    return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned workers) {
    spec.validate();
    const std::vector<double> ps = spec.p.values();
    const std::vector<double> alphas = spec.alpha.values();

    std::vector<SweepRow> rows;
    rows.reserve(ps.size() * alphas.size());
    for (double p : ps) {
        for (double alpha : alphas) {
            const double success = analytic_success(p, alpha);
            rows.push_back({p, alpha, analytic_error_rate(p, alpha), success, 1.0 + success,
                            std::nullopt, std::nullopt});
        }
    }
    if (spec.trials == 0) {
        return rows;
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            ProtocolConfig config;
            config.p = rows[i].p;
            config.alpha = rows[i].alpha;
            config.channel = spec.channel;
            config.trials = spec.trials;
            config.seed = *spec.seed + i;
            const ProtocolReport report = run_campaign(config);
            rows[i].empirical_success = report.empirical_success;
            rows[i].stderr_success = report.stderr_success;
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "p,alpha,error_rate,success,bits,empirical_success,stderr\n";
    auto opt = [](const std::optional<double> &v) { return v ? format_real(*v) : std::string(); };
    for (const SweepRow &r : rows) {
        out << format_real(r.p) << ',' << format_real(r.alpha) << ',' << format_real(r.error_rate)
            << ',' << format_real(r.success) << ',' << format_real(r.bits) << ','
            << opt(r.empirical_success) << ',' << opt(r.stderr_success) << '\n';
    }
}

void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    auto opt = [](const std::optional<double> &v) {
        return v ? nlohmann::ordered_json(round_significant(*v)) : nlohmann::ordered_json(nullptr);
    };
    for (const SweepRow &r : rows) {
        arr.push_back({{"p", round_significant(r.p)},
                       {"alpha", round_significant(r.alpha)},
                       {"error_rate", round_significant(r.error_rate)},
                       {"success", round_significant(r.success)},
                       {"bits", round_significant(r.bits)},
                       {"empirical_success", opt(r.empirical_success)},
                       {"stderr", opt(r.stderr_success)}});
    }
    out << arr.dump(2) << '\n';
}

} // namespace qss
