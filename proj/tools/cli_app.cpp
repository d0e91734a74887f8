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

#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "qss/channels.hpp"
#include "qss/errors.hpp"
#include "qss/format.hpp"
#include "qss/kernels.hpp"
#include "qss/protocol.hpp"
#include "qss/sweep.hpp"

namespace qss::cli {

namespace {

struct UsageError {
    std::string message;
};

struct IoError {
    std::string message;
};

const std::map<std::string, OutputFormat> format_names{{"csv", OutputFormat::csv},
                                                       {"json", OutputFormat::json}};

ChannelName parse_channel(const std::string &name) {
    const auto parsed = channel_from_string(name);
    if (!parsed) {
        throw UsageError{"--channel: unknown channel '" + name + "'"};
    }
    return *parsed;
}

const CLI::Validator open_unit{
    [](std::string &text) -> std::string {
        double v = 0.0;
        try {
            v = std::stod(text);
        } catch (const std::exception &) {
            return "value '" + text + "' is not a number";
        }
        return (v > 0.0 && v < 1.0) ? std::string() : "value " + text + " outside (0, 1)";
    },
    "in (0, 1)"};

const CLI::Validator channel_names{
    [](std::string &text) -> std::string {
        return channel_from_string(text) ? std::string() : "unknown channel '" + text + "'";
    },
    "CHANNEL"};

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError{"cannot open '" + path + "' for writing"};
    }
    file << text;
    file.flush();
    if (!file) {
        throw IoError{"write to '" + path + "' failed"};
    }
}

struct RunOptions {
    double p = 0.0;
    double alpha = inv_sqrt2;
    std::string channel = "phase_damping";
    std::uint64_t trials = 100000;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string output;
    unsigned workers = 1;
};

std::string report_csv(const ProtocolReport &r) {
    std::ostringstream os;
    auto opt = [](const std::optional<double> &v) { return v ? format_real(*v) : std::string(); };
    os << "p,alpha,channel,trials,seed,error_rate,success,bits,exact_success,"
          "empirical_success,stderr\n";
    os << format_real(r.config.p) << ',' << format_real(r.config.alpha) << ','
       << to_string(r.config.channel) << ',' << r.config.trials << ',' << r.config.seed << ','
       << format_real(r.analytic_error_rate) << ',' << format_real(r.analytic_success) << ','
       << format_real(r.analytic_bits) << ',' << format_real(r.exact_success) << ','
       << opt(r.empirical_success) << ',' << opt(r.stderr_success) << '\n';
    return os.str();
}

int cmd_run(const RunOptions &o, std::ostream &out) {
    if (o.trials > 0 && !o.seed) {
        throw UsageError{"--seed: required when --trials > 0"};
    }
    ProtocolConfig config;
    config.p = o.p;
    config.alpha = o.alpha;
    config.channel = parse_channel(o.channel);
    config.trials = o.trials;
    config.seed = o.seed.value_or(0);
    const ProtocolReport report = run_campaign(config, o.workers);
    const std::string text =
        o.format == "csv" ? report_csv(report) : to_json(report).dump(2) + "\n";
    emit(text, o.output, out);
    return exit_ok;
}

struct SweepOptions {
    std::string preset;
    std::optional<double> p_start, p_stop, alpha_start, alpha_stop, alpha;
    std::optional<std::size_t> p_steps, alpha_steps;
    std::string channel = "phase_damping";
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
    std::string output;
    unsigned workers = 1;
};

int cmd_sweep(const SweepOptions &o, std::ostream &out) {
    SweepSpec spec = o.preset == "fig1" ? fig1_preset() : fig2_preset();
    if (o.preset.empty()) {
        spec = SweepSpec{};
    }
    if (o.p_start) spec.p.start = *o.p_start;
    if (o.p_stop) spec.p.stop = *o.p_stop;
    if (o.p_steps) spec.p.steps = *o.p_steps;
    if (o.alpha_start) spec.alpha.start = *o.alpha_start;
    if (o.alpha_stop) spec.alpha.stop = *o.alpha_stop;
    if (o.alpha_steps) spec.alpha.steps = *o.alpha_steps;
    if (o.alpha) {
        spec.alpha = Range::point(*o.alpha);
    }
    if (spec.p.steps < 2) {
        throw UsageError{"--p-steps: need at least 2 steps"};
    }
    if (spec.alpha.steps < 2 && !(spec.alpha.steps == 1 && spec.alpha.start == spec.alpha.stop)) {
        throw UsageError{"--alpha-steps: need at least 2 steps (use --alpha for a fixed value)"};
    }
    if (spec.alpha.start > spec.alpha.stop || spec.p.start > spec.p.stop) {
        throw UsageError{"range start must not exceed stop"};
    }
    spec.channel = parse_channel(o.channel);
    spec.trials = o.trials;
    spec.seed = o.seed;
    if (spec.trials > 0 && !spec.seed) {
        throw UsageError{"--seed: required when --trials > 0"};
    }
    spec.format = format_names.at(o.format);

    const auto rows = run_sweep(spec, o.workers);
    std::ostringstream text;
    if (spec.format == OutputFormat::csv) {
        write_csv(text, rows);
    } else {
        write_json(text, rows);
    }
    emit(text.str(), o.output, out);
    return exit_ok;
}

int cmd_channels(const std::string &name, double parameter, std::ostream &out) {
    std::vector<ChannelName> names;
    if (name.empty()) {
        names.assign(channel_catalogue.begin(), channel_catalogue.end());
    } else {
        const auto parsed = channel_from_string(name);
        if (!parsed) {
            throw UsageError{"channels: unknown channel '" + name + "'"};
        }
        names.push_back(*parsed);
    }
    nlohmann::ordered_json listing = nlohmann::ordered_json::array();
    for (ChannelName c : names) {
        const KrausChannel ch = standard_channel(c, parameter);
        const ChannelStructureReport s = classify_channel_structure(ch);
        nlohmann::ordered_json entry;
        entry["name"] = to_string(c);
        entry["parameter"] = ch.parameter;
        entry["operator_count"] = ch.operators.size();
        entry["operators"] = to_json(ch)["operators"];
        entry["cptp"] = is_cptp(ch);
        entry["completeness_defect"] = round_significant(completeness_defect(ch));
        entry["all_kraus_diagonal"] = s.all_kraus_diagonal;
        entry["ghz_form_preserved"] = s.ghz_form_preserved;
        entry["coherence_factor"] = round_significant(s.coherence_factor);
        listing.push_back(std::move(entry));
    }
    out << listing.dump(2) << '\n';
    return exit_ok;
}

int cmd_pure(const std::string &secret_bits, std::ostream &out) {
    std::vector<Encoding> secrets;
    if (secret_bits.empty()) {
        secrets.assign(all_encodings.begin(), all_encodings.end());
    } else {
        const auto parsed = encoding_from_bits(secret_bits);
        if (!parsed) {
            throw UsageError{"pure: secret must be one of 00, 01, 10, 11 (got '" + secret_bits +
                             "')"};
        }
        secrets.push_back(*parsed);
    }
    std::size_t correct = 0;
    for (Encoding secret : secrets) {
        bool all_match = true;
        for (const PureBranch &b : pure_protocol_branches(secret)) {
            out << "secret " << to_bits(secret) << " (" << to_string(secret) << ")"
                << "  charlie " << (b.charlie == CharlieOutcome::plus ? '+' : '-')
                << "  bell " << to_string(b.bell) << "  p=" << format_real(b.probability)
                << "  decoded " << to_bits(b.decoded) << '\n';
            all_match = all_match && b.decoded == secret;
        }
        const Encoding decoded = run_pure_protocol(secret);
        out << "decoded " << to_bits(decoded) << '\n';
        if (all_match && decoded == secret) {
            ++correct;
        }
    }
    out << correct << '/' << secrets.size() << " decoded correctly\n";
    return correct == secrets.size() ? exit_ok : 1;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Secret sharing over noisy GHZ channels: simulation and analysis", "qss"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qss 0.1.0");

    RunOptions run_opts;
    auto *run_cmd = app.add_subcommand("run", "Analytic figures of merit plus a Monte Carlo campaign");
    run_cmd->add_option("--p", run_opts.p, "Channel parameter in [0, 1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--alpha", run_opts.alpha, "Charlie's basis parameter in (0, 1)")
        ->check(open_unit);
    run_cmd->add_option("--channel", run_opts.channel, "Channel name")->check(channel_names);
    run_cmd->add_option("--trials", run_opts.trials, "Monte Carlo trials (0 = analytic only)");
    run_cmd->add_option("--seed", run_opts.seed, "Seed (required when trials > 0)");
    run_cmd->add_option("--format", run_opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_option("--output,-o", run_opts.output, "Output file (default stdout)");
    run_cmd->add_option("--workers", run_opts.workers, "Worker threads")
        ->check(CLI::Range(1u, 1024u));

    SweepOptions sweep_opts;
    sweep_opts.workers = default_workers();
    auto *sweep_cmd = app.add_subcommand("sweep", "Grid over (p, alpha)");
    sweep_cmd->add_option("--preset", sweep_opts.preset, "fig1 (p x alpha surface) or fig2 (Hadamard basis, p curve)")
        ->check(CLI::IsMember({"fig1", "fig2"}));
    sweep_cmd->add_option("--p-start", sweep_opts.p_start)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--p-stop", sweep_opts.p_stop)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--p-steps", sweep_opts.p_steps);
    sweep_cmd->add_option("--alpha-start", sweep_opts.alpha_start)->check(open_unit);
    sweep_cmd->add_option("--alpha-stop", sweep_opts.alpha_stop)->check(open_unit);
    sweep_cmd->add_option("--alpha-steps", sweep_opts.alpha_steps);
    sweep_cmd->add_option("--alpha", sweep_opts.alpha, "Fixed alpha instead of a range")
        ->check(open_unit);
    sweep_cmd->add_option("--channel", sweep_opts.channel)->check(channel_names);
    sweep_cmd->add_option("--trials", sweep_opts.trials, "Monte Carlo trials per point");
    sweep_cmd->add_option("--seed", sweep_opts.seed);
    sweep_cmd->add_option("--format", sweep_opts.format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--output,-o", sweep_opts.output, "Output file (default stdout)");
    sweep_cmd->add_option("--workers", sweep_opts.workers)->check(CLI::Range(1u, 1024u));

    std::string channel_name;
    double channel_parameter = 0.3;
    auto *channels_cmd = app.add_subcommand("channels", "Kraus catalogue with structure checks");
    channels_cmd->add_option("name", channel_name, "Single channel to show");
    channels_cmd->add_option("--parameter", channel_parameter, "Sample parameter")
        ->check(CLI::Range(0.0, 1.0));

    std::string secret_bits;
    auto *pure_cmd = app.add_subcommand("pure", "Noiseless protocol walk-through");
    pure_cmd->add_option("secret", secret_bits, "Two-bit secret: 00, 01, 10 or 11");

    auto *kernels_cmd = app.add_subcommand("kernels", "Show the selected arithmetic kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion &e) {
        out << e.what() << '\n';
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*run_cmd) return cmd_run(run_opts, out);
        if (*sweep_cmd) return cmd_sweep(sweep_opts, out);
        if (*channels_cmd) return cmd_channels(channel_name, channel_parameter, out);
        if (*pure_cmd) return cmd_pure(secret_bits, out);
        if (*kernels_cmd) {
            out << "active: " << kernels::to_string(kernels::active().isa) << '\n';
            for (const kernels::KernelTable *t : kernels::available()) {
                out << "available: " << kernels::to_string(t->isa) << '\n';
            }
            return exit_ok;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.message << '\n';
        return exit_usage;
    } catch (const IoError &e) {
        err << "error: " << e.message << '\n';
        return exit_io;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ContractError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qss::cli
