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

#ifndef ECPSIM_TEST_ORACLE_TEST_H
#define ECPSIM_TEST_ORACLE_TEST_H

// Brute-force reference computations for tests. These build full dense operators by
// enumerating basis states and deliberately avoid the simulator's bit-twiddling paths.

#include <algorithm>
#include <cmath>
#include <string>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ecpsim/bell.hpp"
#include "ecpsim/statevec.hpp"

namespace ecpsim::oracle {

/// Bit of 1-based qubit q in an n-qubit basis index (qubit 1 is the most significant).
inline int bit(std::uint64_t index, int n, int q) {
    return static_cast<int>((index >> (n - q)) & 1);
}

/// Dense 2^n x 2^n operator for u acting on one qubit.
inline Eigen::MatrixXcd embed_1q(const Eigen::MatrixXcd &u, int target, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n; q++) {
        Eigen::MatrixXcd factor =
            q == target ? u : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(2, 2));
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index i = 0; i < out.rows(); i++) {
            for (Eigen::Index j = 0; j < out.cols(); j++) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * factor;
            }
        }
        out = next;
    }
    return out;
}

/// <psi| P |psi> for the projector onto |bell>_{q1 q2} (x) identity, built entrywise.
inline double bell_probability(const PureState &state, BellLabel label, int q1, int q2) {
    int n = state.num_qubits();
    auto b = bell_amplitudes(label);
    auto dim = static_cast<Eigen::Index>(state.dimension());
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        for (std::uint64_t j = 0; j < state.dimension(); j++) {
            bool rest_equal = true;
            for (int q = 1; q <= n; q++) {
                if (q != q1 && q != q2 && bit(i, n, q) != bit(j, n, q)) {
                    rest_equal = false;
                }
            }
            if (!rest_equal) {
                continue;
            }
            int bi = 2 * bit(i, n, q1) + bit(i, n, q2);
            int bj = 2 * bit(j, n, q1) + bit(j, n, q2);
            proj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = b[bi] * std::conj(b[bj]);
        }
    }
    Eigen::VectorXcd psi = state.to_eigen();
    return (psi.adjoint() * proj * psi)(0, 0).real();
}

/// Sum of |amplitude|^2 over basis states whose qubit q reads value.
inline double computational_probability(const PureState &state, int q, int value) {
    double p = 0;
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        if (bit(i, state.num_qubits(), q) == value) {
            p += std::norm(state[i]);
        }
    }
    return p;
}

/// Reduced density matrix by summing |psi><psi| entries that agree off the kept qubits.
inline Eigen::MatrixXcd partial_trace(const PureState &state, const std::vector<int> &keep) {
    int n = state.num_qubits();
    int k = static_cast<int>(keep.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(1 << k, 1 << k);
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        for (std::uint64_t j = 0; j < state.dimension(); j++) {
            bool traced_equal = true;
            for (int q = 1; q <= n; q++) {
                bool kept = std::find(keep.begin(), keep.end(), q) != keep.end();
                if (!kept && bit(i, n, q) != bit(j, n, q)) {
                    traced_equal = false;
                }
            }
            if (!traced_equal) {
                continue;
            }
            int ri = 0, rj = 0;
            for (int q : keep) {
                ri = 2 * ri + bit(i, n, q);
                rj = 2 * rj + bit(j, n, q);
            }
            rho(ri, rj) += state[i] * std::conj(state[j]);
        }
    }
    return rho;
}

/// Schmidt coefficients across (side_a | rest) from the singular values of the
/// reshaped amplitude matrix.
inline Eigen::VectorXd schmidt_coefficients(const PureState &state, const std::vector<int> &side_a) {
    int n = state.num_qubits();
    int k = static_cast<int>(side_a.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1 << k, 1 << (n - k));
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        int row = 0, col = 0;
        for (int q = 1; q <= n; q++) {
            bool in_a = std::find(side_a.begin(), side_a.end(), q) != side_a.end();
            if (in_a) {
                row = 2 * row + bit(i, n, q);
            } else {
                col = 2 * col + bit(i, n, q);
            }
        }
        m(row, col) = state[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
}

/// Negativity of a pure state from its Schmidt coefficients: ((sum s)^2 - 1)/2.
inline double schmidt_negativity(const PureState &state, const std::vector<int> &side_a) {
    double s = schmidt_coefficients(state, side_a).sum();
    return (s * s - 1) / 2;
}

inline PureState random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (Complex &c : amps) {
        c = Complex(g(rng), g(rng));
    }
    return PureState::normalized(n, std::move(amps));
}

/// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline Eigen::MatrixXcd random_unitary_matrix(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; i++) {
        for (int j = 0; j < dim; j++) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
}

/// State from a list of (bitstring, amplitude) terms, normalized.
inline PureState ket(int n, std::initializer_list<std::pair<const char *, Complex>> terms) {
    std::vector<Complex> amps(std::size_t{1} << n);
    for (const auto &[bits, c] : terms) {
        amps[std::stoul(bits, nullptr, 2)] += c;
    }
    return PureState::normalized(n, std::move(amps));
}

/// Equality up to a global phase.
inline bool same_ray(const PureState &a, const PureState &b, double tol = 1e-10) {
    return a.num_qubits() == b.num_qubits() && std::abs(fidelity(a, b) - 1.0) <= tol;
}

}  // namespace ecpsim::oracle

#endif
