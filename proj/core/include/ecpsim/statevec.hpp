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

#ifndef ECPSIM_STATEVEC_HPP
#define ECPSIM_STATEVEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ecpsim/bell.hpp"
#include "ecpsim/common.hpp"
#include "ecpsim/unitary.hpp"

namespace ecpsim {

/// Dense pure state of a qubit register.
///
/// Qubits are numbered from 1. Qubit 1 is the leftmost ket factor and the most
/// significant bit of the amplitude index, so |q1 q2 ... qn> sits at index
/// q1*2^(n-1) + ... + qn.
///
/// The amplitude vector always has unit norm (within kConstructionTolerance). A
/// zero-qubit state (a single amplitude) is allowed; it is what remains after
/// measuring every qubit of a register.
class PureState {
   public:
    /// Throws std::invalid_argument if the length is not 2^n_qubits or the vector is
    /// not normalized.
    PureState(int n_qubits, std::vector<Complex> amplitudes);

    /// Rescales a nonzero vector to unit norm. Throws std::invalid_argument for a
    /// (numerically) zero vector.
    static PureState normalized(int n_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const {
        return n_qubits_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    double norm_squared() const;

    Eigen::VectorXcd to_eigen() const;

    /// Ket notation for debugging and CLI output, e.g. "0.7071|00> + 0.7071|11>".
    std::string str(double threshold = kExactTolerance) const;

   private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Density matrix of a (sub)register. Hermitian with unit trace and no eigenvalue below
/// -kConstructionTolerance.
class DensityMatrix {
   public:
    DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

    int num_qubits() const {
        return n_qubits_;
    }
    const Eigen::MatrixXcd &entries() const {
        return entries_;
    }

    /// Eigenvalues in ascending order.
    Eigen::VectorXd eigenvalues() const;

   private:
    int n_qubits_;
    Eigen::MatrixXcd entries_;
};

/// Outcome of a measurement: a computational basis bit or a Bell label.
using Outcome = std::variant<int, BellLabel>;

std::string outcome_label(const Outcome &outcome);

struct MeasurementBranch {
    Outcome outcome;
    double probability;
    /// Normalized state of the unmeasured qubits, in their original relative order.
    PureState post_state;
};

/// |index> on n qubits. Throws std::invalid_argument when index >= 2^n.
PureState basis_state(int n, std::uint64_t index);

/// Basis state from a bitstring read as a binary number ("110" is index 6). The string
/// may be shorter than n; leading qubits are then |0>.
PureState basis_state(int n, std::string_view bits);

/// a (x) b. The qubits of b follow those of a.
PureState tensor(const PureState &a, const PureState &b);

PureState apply_1q(const PureState &state, const Unitary &u, int target);

/// Applies a 4x4 unitary on the ordered pair (q1, q2); q1 is the high bit of the matrix
/// index.
PureState apply_2q(const PureState &state, const Unitary &u, int q1, int q2);

PureState apply_cnot(const PureState &state, int control, int target);

/// Reorders the register. order[k] is the input qubit that ends up at position k+1, so
/// the particle sequence 12345 -> 15234 is written as {1, 5, 2, 3, 4}.
PureState permute_qubits(const PureState &state, std::span<const int> order);

PureState swap_qubits(const PureState &state, int a, int b);

/// Projective Z measurement of one qubit. Branches with probability below
/// kZeroProbability are omitted; outcome 0 is listed first.
std::vector<MeasurementBranch> measure_computational(const PureState &state, int target);

/// Bell-basis measurement of the ordered pair (q1, q2); q1 is the first qubit of each
/// Bell ket. Branches are listed in psi+, psi-, phi+, phi- order with zero-probability
/// branches omitted.
std::vector<MeasurementBranch> measure_bell(const PureState &state, int q1, int q2);

/// Partial trace onto the listed qubits (kept in ascending order). keep must be a
/// nonempty proper subset.
DensityMatrix reduced_density(const PureState &state, std::span<const int> keep);

Complex inner_product(const PureState &a, const PureState &b);

/// |<a|b>|^2.
double fidelity(const PureState &a, const PureState &b);

/// Largest absolute amplitude difference; requires equal sizes.
double max_amplitude_difference(const PureState &a, const PureState &b);

}  // namespace ecpsim

#endif
