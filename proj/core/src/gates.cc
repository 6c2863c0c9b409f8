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

#include "ecpsim/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecpsim {

namespace {

void check_weights(Complex alpha, Complex beta) {
    double n2 = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(n2 - 1.0) <= kConstructionTolerance)) {
        throw std::invalid_argument("|alpha|^2 + |beta|^2 = " + std::to_string(n2) +
                                    ", expected 1");
    }
}

Unitary from_rows(Complex a, Complex b, Complex c, Complex d) {
    Eigen::MatrixXcd m(2, 2);
    m << a, b, c, d;
    return Unitary(std::move(m));
}

}  // namespace

Unitary u1(Complex alpha, Complex beta) {
    check_weights(alpha, beta);
    return from_rows(alpha, -std::conj(beta), beta, std::conj(alpha));
}

Unitary u2(Complex alpha, Complex beta) {
    if (std::abs(alpha.imag()) > kExactTolerance || std::abs(beta.imag()) > kExactTolerance) {
        throw std::invalid_argument("u2 is defined for real alpha and beta only");
    }
    check_weights(alpha, beta);
    double a = alpha.real();
    double b = beta.real();
    return from_rows(a, b, -b, a);
}

Unitary pauli(Pauli name) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (name) {
        case Pauli::I:
            return from_rows(1, 0, 0, 1);
        case Pauli::X:
            return from_rows(0, 1, 1, 0);
        case Pauli::IY:
            return from_rows(0, 1, -1, 0);
        case Pauli::Z:
            return from_rows(1, 0, 0, -1);
        case Pauli::H:
            return from_rows(h, h, h, -h);
    }
    throw std::invalid_argument("unknown gate");
}

Pauli parse_pauli(std::string_view name) {
    if (name == "I") return Pauli::I;
    if (name == "X") return Pauli::X;
    if (name == "iY" || name == "IY") return Pauli::IY;
    if (name == "Z") return Pauli::Z;
    if (name == "H") return Pauli::H;
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

std::string_view pauli_name(Pauli name) {
    switch (name) {
        case Pauli::I:
            return "I";
        case Pauli::X:
            return "X";
        case Pauli::IY:
            return "iY";
        case Pauli::Z:
            return "Z";
        case Pauli::H:
            return "H";
    }
    throw std::invalid_argument("unknown gate");
}

Unitary cnot_matrix() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return Unitary(std::move(m));
}

Unitary swap_matrix() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return Unitary(std::move(m));
}

PureState bell_ket(BellLabel label) {
    auto amps = bell_amplitudes(label);
    return PureState(2, std::vector<Complex>(amps.begin(), amps.end()));
}

}  // namespace ecpsim
