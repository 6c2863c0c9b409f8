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

#include "ecpsim/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace ecpsim {

namespace {

using Index = std::uint64_t;

void check_qubit_count(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

void check_qubit(const PureState &state, int q) {
    if (q < 1 || q > state.num_qubits()) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for a " +
                                    std::to_string(state.num_qubits()) + "-qubit state");
    }
}

/// Bit position (from the least significant end) of 1-based qubit q in an n-qubit index.
int shift_of(int n, int q) {
    return n - q;
}

/// Inserts bit value b at position s of r, shifting the higher bits of r up by one.
Index insert_bit(Index r, int s, Index b) {
    Index low = r & ((Index{1} << s) - 1);
    Index high = (r >> s) << (s + 1);
    return high | (b << s) | low;
}

double squared_norm(const std::vector<Complex> &v) {
    double total = 0;
    for (const Complex &c : v) {
        total += std::norm(c);
    }
    return total;
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits_);
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw std::invalid_argument("expected " + std::to_string(std::size_t{1} << n_qubits_) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    double n2 = squared_norm(amplitudes_);
    if (!(std::abs(n2 - 1.0) <= kConstructionTolerance)) {
        throw std::invalid_argument("state is not normalized: norm^2 = " + std::to_string(n2));
    }
}

PureState PureState::normalized(int n_qubits, std::vector<Complex> amplitudes) {
    double n2 = squared_norm(amplitudes);
    if (!(n2 > kZeroProbability)) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    double scale = 1.0 / std::sqrt(n2);
    for (Complex &c : amplitudes) {
        c *= scale;
    }
    return PureState(n_qubits, std::move(amplitudes));
}

double PureState::norm_squared() const {
    return squared_norm(amplitudes_);
}

Eigen::VectorXcd PureState::to_eigen() const {
    return Eigen::Map<const Eigen::VectorXcd>(amplitudes_.data(),
                                              static_cast<Eigen::Index>(amplitudes_.size()));
}

std::string PureState::str(double threshold) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        const Complex &c = amplitudes_[i];
        if (std::abs(c) <= threshold) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        char buf[64];
        if (std::abs(c.imag()) <= threshold) {
            std::snprintf(buf, sizeof(buf), "%.6g", c.real());
        } else {
            std::snprintf(buf, sizeof(buf), "(%.6g%+.6gi)", c.real(), c.imag());
        }
        out << buf << "|";
        for (int q = 1; q <= n_qubits_; q++) {
            out << ((i >> shift_of(n_qubits_, q)) & 1);
        }
        out << ">";
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
    check_qubit_count(n_qubits_);
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw std::invalid_argument("density matrix has the wrong dimension");
    }
    double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kConstructionTolerance)) {
        throw InvariantViolation("density matrix is not Hermitian");
    }
    double trace_err = std::abs(entries_.trace() - Complex(1.0));
    if (!(trace_err <= kConstructionTolerance)) {
        throw InvariantViolation("density matrix trace differs from 1 by " +
                                 std::to_string(trace_err));
    }
    if (eigenvalues().minCoeff() < -kConstructionTolerance) {
        throw InvariantViolation("density matrix has a negative eigenvalue");
    }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::string outcome_label(const Outcome &outcome) {
    if (const int *bit = std::get_if<int>(&outcome)) {
        return std::to_string(*bit);
    }
    return std::string(bell_label_name(std::get<BellLabel>(outcome)));
}

PureState basis_state(int n, std::uint64_t index) {
    check_qubit_count(n);
    if (index >= (Index{1} << n)) {
        throw std::invalid_argument("basis index " + std::to_string(index) +
                                    " out of range for " + std::to_string(n) + " qubits");
    }
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[index] = 1.0;
    return PureState(n, std::move(amps));
}

PureState basis_state(int n, std::string_view bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bitstring must have 1 to 64 characters");
    }
    Index index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1");
        }
        index = (index << 1) | static_cast<Index>(c - '0');
    }
    if (bits.size() > static_cast<std::size_t>(n) && (index >> n) != 0) {
        throw std::invalid_argument("basis index " + std::string(bits) +
                                    " out of range for " + std::to_string(n) + " qubits");
    }
    return basis_state(n, index);
}

PureState tensor(const PureState &a, const PureState &b) {
    int n = a.num_qubits() + b.num_qubits();
    check_qubit_count(n);
    std::vector<Complex> amps;
    amps.reserve(a.dimension() * b.dimension());
    for (const Complex &x : a.amplitudes()) {
        for (const Complex &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return PureState(n, std::move(amps));
}

PureState apply_1q(const PureState &state, const Unitary &u, int target) {
    check_qubit(state, target);
    if (u.dimension() != 2) {
        throw std::invalid_argument("apply_1q needs a 2x2 unitary");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    Index mask = Index{1} << shift_of(state.num_qubits(), target);
    Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (Index i = 0; i < amps.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = amps[i];
        Complex a1 = amps[i | mask];
        amps[i] = u00 * a0 + u01 * a1;
        amps[i | mask] = u10 * a0 + u11 * a1;
    }
    return PureState(state.num_qubits(), std::move(amps));
}

PureState apply_2q(const PureState &state, const Unitary &u, int q1, int q2) {
    check_qubit(state, q1);
    check_qubit(state, q2);
    if (q1 == q2) {
        throw std::invalid_argument("apply_2q needs two distinct qubits");
    }
    if (u.dimension() != 4) {
        throw std::invalid_argument("apply_2q needs a 4x4 unitary");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    Index m1 = Index{1} << shift_of(state.num_qubits(), q1);
    Index m2 = Index{1} << shift_of(state.num_qubits(), q2);
    const Eigen::MatrixXcd &m = u.matrix();
    for (Index i = 0; i < amps.size(); i++) {
        if (i & (m1 | m2)) {
            continue;
        }
        const Index idx[4] = {i, i | m2, i | m1, i | m1 | m2};
        Complex in[4];
        for (int k = 0; k < 4; k++) {
            in[k] = amps[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            Complex acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += m(r, c) * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
    return PureState(state.num_qubits(), std::move(amps));
}

PureState apply_cnot(const PureState &state, int control, int target) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    Index cm = Index{1} << shift_of(state.num_qubits(), control);
    Index tm = Index{1} << shift_of(state.num_qubits(), target);
    for (Index i = 0; i < amps.size(); i++) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amps[i], amps[i | tm]);
        }
    }
    return PureState(state.num_qubits(), std::move(amps));
}

PureState permute_qubits(const PureState &state, std::span<const int> order) {
    int n = state.num_qubits();
    if (order.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("permutation length does not match the qubit count");
    }
    std::vector<bool> seen(n + 1, false);
    for (int q : order) {
        if (q < 1 || q > n || seen[q]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[q] = true;
    }
    std::vector<Complex> amps(state.dimension());
    for (Index out = 0; out < amps.size(); out++) {
        Index in = 0;
        for (int pos = 1; pos <= n; pos++) {
            Index bit = (out >> shift_of(n, pos)) & 1;
            in |= bit << shift_of(n, order[pos - 1]);
        }
        amps[out] = state[in];
    }
    return PureState(n, std::move(amps));
}

PureState swap_qubits(const PureState &state, int a, int b) {
    check_qubit(state, a);
    check_qubit(state, b);
    std::vector<int> order(state.num_qubits());
    for (int q = 1; q <= state.num_qubits(); q++) {
        order[q - 1] = q;
    }
    std::swap(order[a - 1], order[b - 1]);
    return permute_qubits(state, order);
}

std::vector<MeasurementBranch> measure_computational(const PureState &state, int target) {
    check_qubit(state, target);
    int n = state.num_qubits();
    int s = shift_of(n, target);
    std::vector<MeasurementBranch> branches;
    for (Index b = 0; b <= 1; b++) {
        std::vector<Complex> rest(std::size_t{1} << (n - 1));
        for (Index r = 0; r < rest.size(); r++) {
            rest[r] = state[insert_bit(r, s, b)];
        }
        double p = squared_norm(rest);
        if (p < kZeroProbability) {
            continue;
        }
        branches.push_back({static_cast<int>(b), p, PureState::normalized(n - 1, std::move(rest))});
    }
    return branches;
}

std::vector<MeasurementBranch> measure_bell(const PureState &state, int q1, int q2) {
    check_qubit(state, q1);
    check_qubit(state, q2);
    if (q1 == q2) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
    int n = state.num_qubits();
    int s1 = shift_of(n, q1);
    int s2 = shift_of(n, q2);
    int lo = std::min(s1, s2);
    int hi = std::max(s1, s2);
    std::size_t rest_dim = std::size_t{1} << (n - 2);

    // full_index[r][b1b2]: index of rest configuration r with (q1, q2) = (b1, b2).
    std::vector<std::array<Index, 4>> full_index(rest_dim);
    for (Index r = 0; r < rest_dim; r++) {
        for (Index b = 0; b < 4; b++) {
            Index b1 = b >> 1, b2 = b & 1;
            Index at_lo = (lo == s1) ? b1 : b2;
            Index at_hi = (hi == s1) ? b1 : b2;
            full_index[r][b] = insert_bit(insert_bit(r, lo, at_lo), hi, at_hi);
        }
    }

    std::vector<MeasurementBranch> branches;
    for (BellLabel label : kAllBellLabels) {
        auto bell = bell_amplitudes(label);
        std::vector<Complex> rest(rest_dim);
        for (Index r = 0; r < rest_dim; r++) {
            Complex acc = 0;
            for (Index b = 0; b < 4; b++) {
                acc += std::conj(bell[b]) * state[full_index[r][b]];
            }
            rest[r] = acc;
        }
        double p = squared_norm(rest);
        if (p < kZeroProbability) {
            continue;
        }
        branches.push_back({label, p, PureState::normalized(n - 2, std::move(rest))});
    }
    return branches;
}

DensityMatrix reduced_density(const PureState &state, std::span<const int> keep) {
    int n = state.num_qubits();
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || kept.size() >= static_cast<std::size_t>(n)) {
        throw std::invalid_argument("reduced_density needs a nonempty proper subset of qubits");
    }
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw std::invalid_argument("reduced_density: repeated qubit");
    }
    for (int q : kept) {
        check_qubit(state, q);
    }
    std::vector<int> traced;
    for (int q = 1; q <= n; q++) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    // Offsets of each kept / traced configuration within the full index.
    auto offsets = [n](const std::vector<int> &qubits) {
        std::size_t count = std::size_t{1} << qubits.size();
        std::vector<Index> result(count);
        int k = static_cast<int>(qubits.size());
        for (Index c = 0; c < count; c++) {
            Index full = 0;
            for (int j = 0; j < k; j++) {
                Index bit = (c >> (k - 1 - j)) & 1;
                full |= bit << shift_of(n, qubits[j]);
            }
            result[c] = full;
        }
        return result;
    };
    std::vector<Index> keep_off = offsets(kept);
    std::vector<Index> trace_off = offsets(traced);

    auto dim = static_cast<Eigen::Index>(keep_off.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = i; j < dim; j++) {
            Complex acc = 0;
            for (Index t : trace_off) {
                acc += state[keep_off[i] | t] * std::conj(state[keep_off[j] | t]);
            }
            rho(i, j) = acc;
            rho(j, i) = std::conj(acc);
        }
    }
    return DensityMatrix(static_cast<int>(kept.size()), std::move(rho));
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const PureState &a, const PureState &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

double max_amplitude_difference(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("states have different qubit counts");
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace ecpsim
