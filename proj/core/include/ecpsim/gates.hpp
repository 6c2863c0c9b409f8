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

#ifndef ECPSIM_GATES_HPP
#define ECPSIM_GATES_HPP

#include <string_view>

#include "ecpsim/bell.hpp"
#include "ecpsim/common.hpp"
#include "ecpsim/statevec.hpp"
#include "ecpsim/unitary.hpp"

namespace ecpsim {

/// Single-qubit gates used as corrections. IY is the real matrix (0 1; -1 0), i.e. i
/// times Pauli Y, kept as one literal so it has determinant +1.
enum class Pauli { I, X, IY, Z, H };

/// The gate preparing a Bell-type state: |0> -> alpha|0> + beta|1>, matrix
/// (alpha, -conj(beta); beta, conj(alpha)). Requires |alpha|^2 + |beta|^2 = 1.
Unitary u1(Complex alpha, Complex beta);

/// The real rotation (alpha, beta; -beta, alpha), so |0> -> alpha|0> - beta|1> and
/// |1> -> beta|0> + alpha|1>. Rejects amplitudes with a nonzero imaginary part.
Unitary u2(Complex alpha, Complex beta);

Unitary pauli(Pauli name);

/// Accepts "I", "X", "iY" (or "IY"), "Z", "H".
Pauli parse_pauli(std::string_view name);
std::string_view pauli_name(Pauli name);

/// 4x4 CNOT with the first qubit of the pair as control.
Unitary cnot_matrix();
Unitary swap_matrix();

PureState bell_ket(BellLabel label);

}  // namespace ecpsim

#endif
