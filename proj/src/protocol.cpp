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

#include "qss/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "qss/errors.hpp"
#include "qss/format.hpp"

namespace qss {

namespace {

constexpr double branch_floor = 1e-15;
constexpr std::uint64_t trials_per_stream = 256;

void check_analytic_domain(double p, double alpha) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("channel parameter p = " + std::to_string(p) + " outside [0, 1]");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("basis parameter alpha = " + std::to_string(alpha) +
                          " outside [0, 1]");
    }
}

std::size_t index_of(Encoding e) { return static_cast<std::size_t>(e); }

BellState bell_for(ParitySubspace cls, std::size_t povm_outcome) {
    // Pi1 projects onto Phi+ (even) / Psi+ (odd), Pi2 onto Phi- / Psi-.
    if (cls == ParitySubspace::even) {
        return povm_outcome == 0 ? BellState::phi_plus : BellState::phi_minus;
    }
    return povm_outcome == 0 ? BellState::psi_plus : BellState::psi_minus;
}

struct Tally {
    std::array<std::array<std::uint64_t, 4>, 4> confusion{};
    std::array<std::uint64_t, 2> charlie{};
    std::uint64_t parity_correct = 0;
    std::uint64_t trials = 0;

    Tally &operator+=(const Tally &o) {
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                confusion[i][j] += o.confusion[i][j];
            }
        }
        charlie[0] += o.charlie[0];
        charlie[1] += o.charlie[1];
        parity_correct += o.parity_correct;
        trials += o.trials;
        return *this;
    }
};

/// Everything a trial needs that does not depend on the random draws.
struct TrialContext {
    explicit TrialContext(const ProtocolConfig &config)
        : channel(standard_channel(config.channel, config.p)),
          on_alice(channel, alice_qubit, 3),
          on_bob(channel, bob_qubit, 3),
          basis(MeasurementBasis(config.alpha).vectors()),
          parity(parity_projectors()),
          discriminators{bell_block_povm(ParitySubspace::even), bell_block_povm(ParitySubspace::odd)},
          ghz(ghz3().density()) {
        for (Encoding e : all_encodings) {
            encoders[index_of(e)] = embed(pauli(e), alice_qubit, 3);
        }
    }

    KrausChannel channel;
    LocalChannel on_alice;
    LocalChannel on_bob;
    QubitBasis basis;
    Povm parity;
    std::array<Povm, 2> discriminators;
    CMatrix ghz;
    std::array<CMatrix, 4> encoders{CMatrix(8), CMatrix(8), CMatrix(8), CMatrix(8)};
};

TrialResult run_trial(const TrialContext &ctx, Encoding secret, Rng &rng) {
    CMatrix rho = sample_kraus_branch(ctx.ghz, ctx.on_alice, rng).state;
    rho = sample_kraus_branch(rho, ctx.on_bob, rng).state;
    rho = conjugate(ctx.encoders[index_of(secret)], rho);
    rho = sample_kraus_branch(rho, ctx.on_alice, rng).state;

    MeasurementOutcome announced = sample_measure_qubit(rho, ctx.basis, charlie_qubit, rng);
    const auto charlie = static_cast<CharlieOutcome>(announced.outcome_index);
    const CMatrix &bob = *announced.post_state;

    const std::size_t cls_index = sample_povm(bob, ctx.parity, rng);
    const auto cls = cls_index == 0 ? ParitySubspace::even : ParitySubspace::odd;
    const CMatrix in_class = project(bob, ctx.parity.elements[cls_index]);
    const std::size_t outcome = sample_povm(in_class, ctx.discriminators[cls_index], rng);
    return {decode_noisy(cls, outcome, charlie), charlie, cls};
}

Tally run_block(const TrialContext &ctx, const ProtocolConfig &config, std::uint64_t block) {
    Tally tally;
    Rng rng = stream_rng(config.seed, block);
    const std::uint64_t first = block * trials_per_stream;
    const std::uint64_t last = std::min(config.trials, first + trials_per_stream);
    for (std::uint64_t t = first; t < last; ++t) {
        const Encoding secret = all_encodings[t % 4];
        const TrialResult r = run_trial(ctx, secret, rng);
        ++tally.confusion[index_of(secret)][index_of(r.decoded)];
        ++tally.charlie[static_cast<std::size_t>(r.charlie)];
        if (r.parity == parity_class(secret)) {
            ++tally.parity_correct;
        }
        ++tally.trials;
    }
    return tally;
}

double real(double x) { return round_significant(x); }

nlohmann::ordered_json optional_real(const std::optional<double> &x) {
    return x ? nlohmann::ordered_json(real(*x)) : nlohmann::ordered_json(nullptr);
}

} // namespace

const std::array<DecodeTableEntry, 8> &decode_table() {
    using B = BellState;
    using C = CharlieOutcome;
    static const std::array<DecodeTableEntry, 8> table{{
        {B::phi_plus, C::plus, Encoding::I},
        {B::phi_plus, C::minus, Encoding::Z},
        {B::phi_minus, C::plus, Encoding::Z},
        {B::phi_minus, C::minus, Encoding::I},
        {B::psi_plus, C::plus, Encoding::X},
        {B::psi_plus, C::minus, Encoding::Y},
        {B::psi_minus, C::plus, Encoding::Y},
        {B::psi_minus, C::minus, Encoding::X},
    }};
    return table;
}

Encoding decode(BellState bell, CharlieOutcome charlie) {
    for (const DecodeTableEntry &row : decode_table()) {
        if (row.bell_outcome == bell && row.charlie_outcome == charlie) {
            return row.decoded;
        }
    }
    throw ContractError("decode table has no row for this outcome");
}

std::vector<PureBranch> pure_protocol_branches(Encoding secret) {
    CMatrix rho = encode_secret(ghz3().density(), secret);
    const MeasurementBasis hadamard(std::sqrt(0.5));
    const auto charlie = charlie_measure(rho, hadamard);

    std::vector<PureBranch> branches;
    for (const MeasurementOutcome &c : charlie) {
        if (!c.post_state) {
            continue;
        }
        for (const MeasurementOutcome &b : bell_measure(*c.post_state)) {
            if (b.probability < branch_floor) {
                continue;
            }
            const auto co = static_cast<CharlieOutcome>(c.outcome_index);
            const BellState bs = all_bell_states[b.outcome_index];
            branches.push_back({co, bs, c.probability * b.probability, decode(bs, co)});
        }
    }
    return branches;
}

Encoding run_pure_protocol(Encoding secret) {
    const auto branches = pure_protocol_branches(secret);
    if (branches.empty()) {
        throw ContractError("pure protocol produced no branch");
    }
    for (const PureBranch &b : branches) {
        if (b.decoded != branches.front().decoded) {
            throw ContractError("pure protocol branches decode differently");
        }
    }
    return branches.front().decoded;
}

void ProtocolConfig::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p = " + std::to_string(p) + " outside [0, 1]");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha = " + std::to_string(alpha) + " outside (0, 1)");
    }
}

CMatrix evolve_noisy_ghz(double p, ChannelName channel) {
    const KrausChannel ch = standard_channel(channel, p);
    CMatrix rho = apply_channel(ghz3().density(), ch, alice_qubit);
    return apply_channel(rho, ch, bob_qubit);
}

CMatrix encode_secret(const CMatrix &rho, Encoding secret) {
    return apply_unitary_on_qubit(rho, pauli(secret), alice_qubit);
}

CMatrix alice_sends_to_bob(const CMatrix &rho, double p, ChannelName channel) {
    return apply_channel(rho, standard_channel(channel, p), alice_qubit);
}

std::array<MeasurementOutcome, 2> charlie_measure(const CMatrix &rho,
                                                  const MeasurementBasis &basis) {
    return measure_qubit(rho, basis, charlie_qubit);
}

CMatrix shared_state(double p, ChannelName channel, Encoding secret) {
    return alice_sends_to_bob(encode_secret(evolve_noisy_ghz(p, channel), secret), p, channel);
}

double analytic_success(double p, double alpha) {
    check_analytic_domain(p, alpha);
    const double beta = std::sqrt(1.0 - alpha * alpha);
    const double keep = 1.0 - p;
    return 2.0 * alpha * beta * keep * keep * keep;
}

double analytic_error_rate(double p, double alpha) {
    return 0.5 * (1.0 - analytic_success(p, alpha));
}

double analytic_bits(double p, double alpha) { return 1.0 + analytic_success(p, alpha); }

ParitySubspace parity_class(Encoding e) {
    return (e == Encoding::I || e == Encoding::Z) ? ParitySubspace::even : ParitySubspace::odd;
}

Encoding decode_noisy(ParitySubspace cls, std::size_t povm_outcome, CharlieOutcome charlie) {
    return decode(bell_for(cls, povm_outcome), charlie);
}

double exact_decode_probability(const ProtocolConfig &config) {
    config.validate();
    const MeasurementBasis basis(config.alpha);
    const Povm parity = parity_projectors();
    double total = 0.0;
    for (Encoding secret : all_encodings) {
        const CMatrix rho = shared_state(config.p, config.channel, secret);
        for (const MeasurementOutcome &c : charlie_measure(rho, basis)) {
            if (!c.post_state) {
                continue;
            }
            const auto charlie = static_cast<CharlieOutcome>(c.outcome_index);
            const auto class_probs = apply_povm(*c.post_state, parity);
            for (std::size_t k = 0; k < 2; ++k) {
                if (class_probs[k] < branch_floor) {
                    continue;
                }
                const auto cls = k == 0 ? ParitySubspace::even : ParitySubspace::odd;
                const CMatrix in_class = project(*c.post_state, parity.elements[k]);
                const auto outcome_probs = apply_povm(in_class, bell_block_povm(cls));
                for (std::size_t o = 0; o < 2; ++o) {
                    if (decode_noisy(cls, o, charlie) == secret) {
                        total += c.probability * class_probs[k] * outcome_probs[o];
                    }
                }
            }
        }
    }
    return total / 4.0;
}

TrialResult run_noisy_protocol_trial(const ProtocolConfig &config, Encoding secret, Rng &rng) {
    config.validate();
    return run_trial(TrialContext(config), secret, rng);
}

ProtocolReport run_campaign(const ProtocolConfig &config, unsigned workers) {
    config.validate();
    ProtocolReport report;
    report.config = config;
    report.analytic_error_rate = analytic_error_rate(config.p, config.alpha);
    report.analytic_success = analytic_success(config.p, config.alpha);
    report.analytic_bits = analytic_bits(config.p, config.alpha);
    report.exact_success = 2.0 * exact_decode_probability(config) - 1.0;
    if (config.trials == 0) {
        return report;
    }

    const TrialContext ctx(config);
    const std::uint64_t blocks = (config.trials + trials_per_stream - 1) / trials_per_stream;
    workers = std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks)));

    std::vector<Tally> partial(workers);
    auto work = [&](unsigned w) {
        for (std::uint64_t b = w; b < blocks; b += workers) {
            partial[w] += run_block(ctx, config, b);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    Tally total;
    for (const Tally &t : partial) {
        total += t;
    }

    std::uint64_t correct = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        correct += total.confusion[i][i];
    }
    const auto n = static_cast<double>(total.trials);
    const double accuracy = static_cast<double>(correct) / n;
    report.empirical_success = 2.0 * accuracy - 1.0;
    // Per-trial score 2X - 1 has variance 4 a (1 - a).
    report.stderr_success = std::sqrt(4.0 * accuracy * (1.0 - accuracy) / n);
    report.parity_accuracy = static_cast<double>(total.parity_correct) / n;
    report.confusion_matrix = total.confusion;
    report.charlie_outcome_frequencies = std::array<double, 2>{
        static_cast<double>(total.charlie[0]) / n, static_cast<double>(total.charlie[1]) / n};
    return report;
}

nlohmann::ordered_json to_json(const ProtocolReport &report) {
    nlohmann::ordered_json confusion = nlohmann::ordered_json::array();
    for (const auto &row : report.confusion_matrix) {
        confusion.push_back(row);
    }
    nlohmann::ordered_json freqs = nullptr;
    if (report.charlie_outcome_frequencies) {
        freqs = {real((*report.charlie_outcome_frequencies)[0]),
                 real((*report.charlie_outcome_frequencies)[1])};
    }
    const ProtocolConfig &c = report.config;
    return nlohmann::ordered_json{
        {"config",
         {{"p", real(c.p)},
          {"alpha", real(c.alpha)},
          {"channel", to_string(c.channel)},
          {"trials", c.trials},
          {"seed", c.seed}}},
        {"analytic_error_rate", real(report.analytic_error_rate)},
        {"analytic_success", real(report.analytic_success)},
        {"analytic_bits", real(report.analytic_bits)},
        {"exact_success", real(report.exact_success)},
        {"empirical_success", optional_real(report.empirical_success)},
        {"stderr", optional_real(report.stderr_success)},
        {"parity_accuracy", optional_real(report.parity_accuracy)},
        {"confusion_matrix", confusion},
        {"charlie_outcome_frequencies", freqs},
    };
}

} // namespace qss
