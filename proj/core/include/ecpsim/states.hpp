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

#ifndef ECPSIM_STATES_HPP
#define ECPSIM_STATES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecpsim/common.hpp"
#include "ecpsim/statevec.hpp"

namespace ecpsim {

/// A state alpha|Psi0>|0> + beta|Psi1>|1> with <Psi1|Psi0> = 0.
///
/// The qubit carrying |0>/|1> is always the last one (qubit n+1).
class ChannelState {
   public:
    /// Throws std::invalid_argument when |alpha|^2 + |beta|^2 != 1, the qubit counts
    /// differ, or Psi0 and Psi1 are not orthogonal (all within kConstructionTolerance).
    ChannelState(Complex alpha, Complex beta, PureState psi0, PureState psi1);

    Complex alpha() const {
        return alpha_;
    }
    Complex beta() const {
        return beta_;
    }
    const PureState &psi0() const {
        return psi0_;
    }
    const PureState &psi1() const {
        return psi1_;
    }
    const PureState &assembled() const {
        return assembled_;
    }
    /// n, the size of Psi0 / Psi1. The assembled state has n+1 qubits.
    int branch_qubits() const {
        return psi0_.num_qubits();
    }

    /// Same Psi0, Psi1 with new weights.
    ChannelState with_weights(Complex alpha, Complex beta) const;

    /// (|Psi0>|0> + |Psi1>|1>)/sqrt2.
    PureState maximal() const;

   private:
    Complex alpha_;
    Complex beta_;
    PureState psi0_;
    PureState psi1_;
    PureState assembled_;
};

ChannelState channel_state(Complex alpha, Complex beta, PureState psi0, PureState psi1);

/// Splits a state on its last qubit into alpha|Psi0>|0> + beta|Psi1>|1> with real
/// nonnegative alpha, beta. Returns nullopt if either half vanishes or the halves are
/// not orthogonal.
std::optional<ChannelState> read_channel(const PureState &state);

/// alpha|00> + beta|11>, prepared by u1 on qubit 1 followed by CNOT 1->2.
PureState bell_type(Complex alpha, Complex beta);

/// alpha|0...0> + beta|1...1> on n >= 2 qubits, written down directly.
PureState cat(Complex alpha, Complex beta, int n);

/// The same cat state grown from bell_type by appending |0> ancillas and applying
/// CNOT 2 -> k+1 for each new qubit k+1.
PureState cat_by_extension(Complex alpha, Complex beta, int n);

/// alpha|psi+ 0> + beta|phi+ 1>.
ChannelState ghz_like(Complex alpha, Complex beta);

enum class FamilyId {
    Gabcd,
    Labc2,
    La2b2,
    Lab3,
    La4,
    La2_03p1,
    L05p3,
    L07p1,
    L03p1_03p1,
};

inline constexpr std::array<FamilyId, 9> kAllFamilies = {
    FamilyId::Gabcd, FamilyId::Labc2, FamilyId::La2b2,    FamilyId::Lab3,      FamilyId::La4,
    FamilyId::La2_03p1, FamilyId::L05p3, FamilyId::L07p1, FamilyId::L03p1_03p1,
};

/// Stable identifiers: "G_abcd", "L_abc2", "L_a2b2", "L_ab3", "L_a4", "L_a2_03+1",
/// "L_05+3", "L_07+1", "L_03+1_03+1".
std::string_view family_name(FamilyId family);
FamilyId parse_family(std::string_view name);

/// Parameter names in order, e.g. {"a", "b", "c", "d"} for G_abcd and {} for the three
/// parameter-free families.
std::vector<std::string> family_parameter_names(FamilyId family);

/// One of the nine SLOCC families of four-qubit states with its parameter values.
struct FamilySpec {
    /// Throws std::invalid_argument if the parameter count does not match the family.
    FamilySpec(FamilyId family, std::vector<Complex> params = {});

    FamilyId family;
    std::vector<Complex> params;
};

/// The normalized family member for the given parameters plus its channel reading when
/// one exists.
struct FamilyState {
    PureState state;
    std::optional<ChannelState> channel;
};

/// Evaluates the family's defining superposition and normalizes it. Throws
/// std::invalid_argument if the parameters make the vector vanish.
FamilyState family_state(const FamilySpec &spec);

/// One row of the catalogue of channel-form representatives of the nine families.
struct FamilyRepresentative {
    FamilySpec spec;
    /// The normalized four-qubit state as catalogued. For L_a4 this is the state after
    /// local unitaries, (|0001> + |0110> + |1000>)/sqrt3, and for L_ab3 the form without
    /// the family's overall i phase.
    PureState state;
    ChannelState channel;
    /// Well-known name ("cat state", "Q5 state", ...), empty when there is none.
    std::string name;
};

/// The primary representative for each family (the cat-state choice for G_abcd).
FamilyRepresentative family_representative(FamilyId family);

/// All catalogued representatives, including the second G_abcd choice a = 1, b = c = d = 0
/// (a product of two Bell pairs).
std::vector<FamilyRepresentative> family_catalogue();

}  // namespace ecpsim

#endif
