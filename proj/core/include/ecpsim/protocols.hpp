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

#ifndef ECPSIM_PROTOCOLS_HPP
#define ECPSIM_PROTOCOLS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecpsim/common.hpp"
#include "ecpsim/gates.hpp"
#include "ecpsim/states.hpp"
#include "ecpsim/statevec.hpp"

namespace ecpsim {

/// The four concentration circuits.
///  - Cat:     cat state assisted by a Bell-type pair, Bell measurement, Pauli fix-up.
///  - GhzLike: the same idea for alpha|psi+ 0> + beta|phi+ 1>.
///  - Ecp1:    any channel state, Bell-type pair assisted.
///  - Ecp2:    any channel state with real weights, one ancilla qubit, no Bell measurement.
enum class ProtocolKind { Cat, GhzLike, Ecp1, Ecp2 };

/// "cat", "ghz_like", "ecp1", "ecp2".
std::string_view protocol_name(ProtocolKind kind);
ProtocolKind parse_protocol(std::string_view name);

/// Shape of the state being concentrated, used to pick matching closed-form efficiencies.
enum class ChannelForm { Cat, GhzLike, Other };

std::string_view channel_form_name(ChannelForm form);

/// Cat when Psi0 = |0..0>, Psi1 = |1..1>; GhzLike when Psi0 = psi+, Psi1 = phi+.
ChannelForm classify_channel(const ChannelState &channel);

enum class Verdict { Success, Fail };

/// A Pauli applied to one output qubit, addressed by its original label.
struct Correction {
    Pauli gate;
    int label;
};

struct BranchRecord {
    Outcome outcome;
    double probability;
    Verdict verdict;
    /// Normalized state of the unmeasured qubits before any correction.
    PureState post_state;
    /// Empty for failure branches.
    std::vector<Correction> corrections;
    /// Success branches only.
    std::optional<PureState> corrected;
    /// |<target|corrected>|^2 for success branches.
    std::optional<double> fidelity;
};

struct ProtocolReport {
    ProtocolKind protocol;
    Complex alpha;
    Complex beta;
    ChannelForm channel_form;
    std::vector<BranchRecord> branches;
    double success_probability;
    /// Maximally entangled state the protocol aims for, on the output register.
    PureState target;
    /// Original circuit labels of the output qubits, listed by output position.
    std::vector<int> output_labels;
    /// The partially entangled state being concentrated.
    PureState concentrated;
    /// Entangled helper state consumed by the protocol (the Bell-type pair), if any.
    std::optional<PureState> assisting;

    bool uses_bell_measurement() const {
        return protocol != ProtocolKind::Ecp2;
    }
    double probability_sum() const;
    /// Smallest fidelity over success branches; 1 when there are none.
    double min_success_fidelity() const;
};

/// Concentrates alpha|0..0> + beta|1..1> on n >= 2 qubits.
///
/// Register: the Bell-type pair on qubits 1, 2 and the cat state on 3..n+2. After
/// swapping qubits 2 and 3 the pair (1, 3) is Bell measured. psi+- fail; phi+ is fixed
/// by X and phi- by iY on qubit 2. Output labels are 2, 4, 5, ..., n+2.
ProtocolReport ecp_cat(Complex alpha, Complex beta, int n);

/// Concentrates alpha|psi+ 0> + beta|phi+ 1>.
///
/// Register: the Bell-type pair on 1, 2 and the GHZ-like state on 3, 4, 5, reordered as
/// 15234. The pair (1, 5) is Bell measured; phi+ is fixed by X on qubit 3, phi- by iY on
/// qubit 2. Output labels are 2, 3, 4.
ProtocolReport ecp_ghz_like(Complex alpha, Complex beta);

/// Concentrates an (n+1)-qubit channel state using a Bell-type pair with the channel's
/// weights (which may be complex).
///
/// The pair occupies qubits n+2, n+3. Qubits n+1 and n+2 are swapped and the pair
/// (n+1, n+3) is Bell measured. phi+ is fixed by X and phi- by iY on qubit n+2. Output
/// labels are 1..n, n+2.
ProtocolReport ecp1(const ChannelState &channel);

/// Concentrates an (n+1)-qubit channel state with real weights using one ancilla.
///
/// An ancilla |0> is appended as qubit n+2, CNOT (n+1)->(n+2) and u2(alpha, beta) on
/// n+2 are applied, then n+2 is measured. Outcome 0 fails; outcome 1 is fixed by Z on
/// qubit n+1. Output labels are 1..n+1. Throws std::invalid_argument for complex weights.
ProtocolReport ecp2(const ChannelState &channel);

}  // namespace ecpsim

#endif
