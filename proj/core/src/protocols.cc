// Copyright 2026 The ecpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecpsim/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ecpsim {

namespace {

constexpr double kHalfSqrt = 0.70710678118654752440;

std::vector<int> iota_labels(int n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

/// Output position (1-based) of an original label.
int position_of(const std::vector<int> &output_labels, int label) {
    auto it = std::find(output_labels.begin(), output_labels.end(), label);
    if (it == output_labels.end()) {
        throw std::logic_error("label " + std::to_string(label) + " is not an output qubit");
    }
    return static_cast<int>(it - output_labels.begin()) + 1;
}

BranchRecord make_branch(MeasurementBranch branch, std::vector<Correction> corrections,
                         bool success, const std::vector<int> &output_labels,
                         const PureState &target) {
    BranchRecord record{branch.outcome,
                        branch.probability,
                        success ? Verdict::Success : Verdict::Fail,
                        branch.post_state,
                        {},
                        std::nullopt,
                        std::nullopt};
    if (success) {
        PureState fixed = branch.post_state;
        for (const Correction &c : corrections) {
            fixed = apply_1q(fixed, pauli(c.gate), position_of(output_labels, c.label));
        }
        record.fidelity = fidelity(target, fixed);
        record.corrected = std::move(fixed);
        record.corrections = std::move(corrections);
    }
    return record;
}

/// Fills in the success probability and checks the report's invariants.
ProtocolReport finish(ProtocolReport report) {
    report.success_probability = 0;
    for (const BranchRecord &b : report.branches) {
        if (b.verdict == Verdict::Success) {
            report.success_probability += b.probability;
        }
    }
    double total = report.probability_sum();
    if (!(std::abs(total - 1.0) <= kConstructionTolerance)) {
        throw InvariantViolation("branch probabilities of " +
                                 std::string(protocol_name(report.protocol)) + " sum to " +
                                 std::to_string(total));
    }
    double worst = report.min_success_fidelity();
    if (!(worst >= 1.0 - kConstructionTolerance)) {
        throw InvariantViolation("corrected success branch of " +
                                 std::string(protocol_name(report.protocol)) +
                                 " has fidelity " + std::to_string(worst));
    }
    return report;
}

struct BellStage {
    PureState prepared;
    /// Register positions measured in the Bell basis, in ket order.
    int q1;
    int q2;
    std::vector<int> output_labels;
    std::vector<Correction> fix_phi_plus;
    std::vector<Correction> fix_phi_minus;
};

std::vector<BranchRecord> run_bell_stage(const BellStage &stage, const PureState &target) {
    std::vector<BranchRecord> records;
    for (MeasurementBranch &branch : measure_bell(stage.prepared, stage.q1, stage.q2)) {
        BellLabel label = std::get<BellLabel>(branch.outcome);
        std::vector<Correction> fix;
        if (label == BellLabel::PhiPlus) {
            fix = stage.fix_phi_plus;
        } else if (label == BellLabel::PhiMinus) {
            fix = stage.fix_phi_minus;
        }
        records.push_back(
            make_branch(std::move(branch), std::move(fix), is_phi(label), stage.output_labels, target));
    }
    return records;
}

}  // namespace

std::string_view protocol_name(ProtocolKind kind) {
    switch (kind) {
        case ProtocolKind::Cat:
            return "cat";
        case ProtocolKind::GhzLike:
            return "ghz_like";
        case ProtocolKind::Ecp1:
            return "ecp1";
        case ProtocolKind::Ecp2:
            return "ecp2";
    }
    throw std::invalid_argument("unknown protocol");
}

ProtocolKind parse_protocol(std::string_view name) {
    for (ProtocolKind k :
         {ProtocolKind::Cat, ProtocolKind::GhzLike, ProtocolKind::Ecp1, ProtocolKind::Ecp2}) {
        if (protocol_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::string_view channel_form_name(ChannelForm form) {
    switch (form) {
        case ChannelForm::Cat:
            return "cat";
        case ChannelForm::GhzLike:
            return "ghz_like";
        case ChannelForm::Other:
            return "other";
    }
    throw std::invalid_argument("unknown channel form");
}

ChannelForm classify_channel(const ChannelState &channel) {
    const double ok = 1.0 - kConstructionTolerance;
    int n = channel.branch_qubits();
    PureState zeros = basis_state(n, std::uint64_t{0});
    PureState ones = basis_state(n, (std::uint64_t{1} << n) - 1);
    if (fidelity(channel.psi0(), zeros) >= ok && fidelity(channel.psi1(), ones) >= ok) {
        return ChannelForm::Cat;
    }
    if (n == 2 && fidelity(channel.psi0(), bell_ket(BellLabel::PsiPlus)) >= ok &&
        fidelity(channel.psi1(), bell_ket(BellLabel::PhiPlus)) >= ok) {
        return ChannelForm::GhzLike;
    }
    return ChannelForm::Other;
}

double ProtocolReport::probability_sum() const {
    double total = 0;
    for (const BranchRecord &b : branches) {
        total += b.probability;
    }
    return total;
}

double ProtocolReport::min_success_fidelity() const {
    double worst = 1.0;
    for (const BranchRecord &b : branches) {
        if (b.fidelity) {
            worst = std::min(worst, *b.fidelity);
        }
    }
    return worst;
}

ProtocolReport ecp_cat(Complex alpha, Complex beta, int n) {
    if (n < 2) {
        throw std::invalid_argument("ecp_cat needs n >= 2");
    }
    PureState concentrated = cat(alpha, beta, n);
    PureState pair = bell_type(alpha, beta);

    // Qubits 1, 2: Bell-type pair. Qubits 3..n+2: cat state. Swap 2 <-> 3.
    std::vector<int> labels = iota_labels(n + 2);
    std::swap(labels[1], labels[2]);
    BellStage stage{permute_qubits(tensor(pair, concentrated), labels),
                    1,
                    2,
                    std::vector<int>(labels.begin() + 2, labels.end()),
                    {{Pauli::X, 2}},
                    {{Pauli::IY, 2}}};

    PureState target = cat(kHalfSqrt, kHalfSqrt, n);
    ProtocolReport report{ProtocolKind::Cat,
                          alpha,
                          beta,
                          ChannelForm::Cat,
                          run_bell_stage(stage, target),
                          0,
                          target,
                          stage.output_labels,
                          concentrated,
                          pair};
    return finish(std::move(report));
}

ProtocolReport ecp_ghz_like(Complex alpha, Complex beta) {
    PureState concentrated = ghz_like(alpha, beta).assembled();
    PureState pair = bell_type(alpha, beta);

    // Qubits 1, 2: Bell-type pair. Qubits 3, 4, 5: GHZ-like state. Reorder 12345 -> 15234.
    std::vector<int> labels = {1, 5, 2, 3, 4};
    BellStage stage{permute_qubits(tensor(pair, concentrated), labels),
                    1,
                    2,
                    {2, 3, 4},
                    {{Pauli::X, 3}},
                    {{Pauli::IY, 2}}};

    PureState target = ghz_like(kHalfSqrt, kHalfSqrt).assembled();
    ProtocolReport report{ProtocolKind::GhzLike,
                          alpha,
                          beta,
                          ChannelForm::GhzLike,
                          run_bell_stage(stage, target),
                          0,
                          target,
                          stage.output_labels,
                          concentrated,
                          pair};
    return finish(std::move(report));
}

ProtocolReport ecp1(const ChannelState &channel) {
    const int n = channel.branch_qubits();
    PureState pair = bell_type(channel.alpha(), channel.beta());

    // Qubits 1..n+1: channel. Qubits n+2, n+3: Bell-type pair. Swap n+1 <-> n+2, then
    // measure the last two positions, which hold labels n+1 and n+3.
    std::vector<int> labels = iota_labels(n + 3);
    std::swap(labels[n], labels[n + 1]);
    BellStage stage{permute_qubits(tensor(channel.assembled(), pair), labels),
                    n + 2,
                    n + 3,
                    std::vector<int>(labels.begin(), labels.begin() + n + 1),
                    {{Pauli::X, n + 2}},
                    {{Pauli::IY, n + 2}}};

    PureState target = channel.maximal();
    ProtocolReport report{ProtocolKind::Ecp1,
                          channel.alpha(),
                          channel.beta(),
                          classify_channel(channel),
                          run_bell_stage(stage, target),
                          0,
                          target,
                          stage.output_labels,
                          channel.assembled(),
                          pair};
    return finish(std::move(report));
}

ProtocolReport ecp2(const ChannelState &channel) {
    if (std::abs(channel.alpha().imag()) > kExactTolerance ||
        std::abs(channel.beta().imag()) > kExactTolerance) {
        throw std::invalid_argument("ecp2 requires real alpha and beta");
    }
    const int n = channel.branch_qubits();
    PureState s = tensor(channel.assembled(), basis_state(1, std::uint64_t{0}));
    s = apply_cnot(s, n + 1, n + 2);
    s = apply_1q(s, u2(channel.alpha(), channel.beta()), n + 2);

    std::vector<int> output_labels = iota_labels(n + 1);
    PureState target = channel.maximal();
    std::vector<BranchRecord> records;
    for (MeasurementBranch &branch : measure_computational(s, n + 2)) {
        bool success = std::get<int>(branch.outcome) == 1;
        std::vector<Correction> fix;
        if (success) {
            fix = {{Pauli::Z, n + 1}};
        }
        records.push_back(
            make_branch(std::move(branch), std::move(fix), success, output_labels, target));
    }

    ProtocolReport report{ProtocolKind::Ecp2,
                          channel.alpha(),
                          channel.beta(),
                          classify_channel(channel),
                          std::move(records),
                          0,
                          target,
                          output_labels,
                          channel.assembled(),
                          std::nullopt};
    return finish(std::move(report));
}

}  // namespace ecpsim
