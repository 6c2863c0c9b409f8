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

#ifndef ECPSIM_ENTANGLEMENT_HPP
#define ECPSIM_ENTANGLEMENT_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ecpsim/protocols.hpp"
#include "ecpsim/statevec.hpp"

namespace ecpsim {

/// One side of a bipartition; the other side is the complement.
struct Bipartition {
    std::vector<int> side_a;
};

/// Bipartite measure underlying the multipartite means.
///  - VonNeumann: entropy of the reduced state, in bits.
///  - Negativity: (||rho^T_A||_1 - 1)/2, so a Bell pair has 0.5.
///  - Tangle:     2(1 - tr rho_A^2); the squared concurrence for two qubits.
enum class BaseMeasure { VonNeumann, Negativity, Tangle };

std::string_view base_measure_name(BaseMeasure base);
BaseMeasure parse_base_measure(std::string_view name);

double von_neumann(const PureState &state, const Bipartition &cut);
double negativity(const PureState &state, const Bipartition &cut);
double linear_tangle(const PureState &state, const Bipartition &cut);

/// Squared concurrence 4|a00 a11 - a01 a10|^2 of a two-qubit pure state.
double tangle_2q(const PureState &state);

double bipartite(const PureState &state, const Bipartition &cut, BaseMeasure base);

/// The n one-versus-rest values M_{k - rest}, k = 1..n. Requires n >= 2.
std::vector<double> one_vs_rest(const PureState &state, BaseMeasure base);

/// Arithmetic mean of the one-versus-rest values.
double multipartite_arithmetic(const PureState &state, BaseMeasure base);

/// Geometric mean of the one-versus-rest values.
double multipartite_geometric(const PureState &state, BaseMeasure base);

struct EfficiencyInputs {
    double p_s;
    /// Entanglement of the maximally entangled output.
    double e_m;
    /// Entanglement of the state left behind on failure.
    double e_fail;
    /// Initial entanglement.
    double e_0;
};

/// (p_s e_m + (1 - p_s) e_fail) / e_0. Throws std::invalid_argument for e_0 <= 0 or
/// inputs out of range.
double eta(const EfficiencyInputs &inputs);

/// Published closed forms of eta with negativity as the base measure.
///  - BellGhzBellType:    |ab|
///  - GhzLikeBellType:    2|ab|^2 / (cbrt(|ab|/4) + |ab|)
///  - BellGhzOneQubit:    2|ab|
///  - GhzLikeOneQubit:    4|ab|^2 / cbrt(2|ab|)
enum class ClosedForm { BellGhzBellType, GhzLikeBellType, BellGhzOneQubit, GhzLikeOneQubit };

std::string_view closed_form_name(ClosedForm form);

/// Requires 0 < |alpha beta| <= 1/2.
double eta_closed_form(ClosedForm form, Complex alpha, Complex beta);

/// Closed form matching a run, if one was published for it.
std::optional<ClosedForm> closed_form_for(const ProtocolReport &report);

/// What E_0 counts.
///  - Total:      concentrated state plus the assisting pair.
///  - TargetOnly: the concentrated state alone.
///  - Printed:    bypass measurement and use the published closed form.
enum class E0Convention { Total, TargetOnly, Printed };

std::string_view e0_convention_name(E0Convention convention);
E0Convention parse_e0_convention(std::string_view name);

struct EfficiencyOptions {
    /// Count the entanglement of the failure branches (E'); when false E' = 0.
    bool include_fail = true;
    /// Take E_m = 1 regardless of the measure's value on the target.
    bool unit_maximal = false;
};

/// Measures E_m, E' and E_0 for a run. States of three or more qubits use the geometric
/// mean of one-versus-rest values. E' is the probability-weighted average over the
/// failure branches. Throws std::invalid_argument for E0Convention::Printed.
EfficiencyInputs efficiency_inputs(const ProtocolReport &report, BaseMeasure base,
                                   E0Convention convention, EfficiencyOptions options = {});

/// eta for a run. With E0Convention::Printed the closed form is returned (base and
/// options are ignored); throws std::invalid_argument when no closed form matches.
double eta_for_run(const ProtocolReport &report, BaseMeasure base, E0Convention convention,
                   EfficiencyOptions options = {});

}  // namespace ecpsim

#endif
