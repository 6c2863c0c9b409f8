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

#include "ecpsim/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "ecpsim/gates.hpp"

namespace ecpsim {

namespace {

void check_weights(Complex alpha, Complex beta) {
    double n2 = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(n2 - 1.0) <= kConstructionTolerance)) {
        throw std::invalid_argument("|alpha|^2 + |beta|^2 = " + std::to_string(n2) +
                                    ", expected 1");
    }
}

PureState assemble(Complex alpha, Complex beta, const PureState &psi0, const PureState &psi1) {
    std::vector<Complex> amps(2 * psi0.dimension());
    for (std::size_t i = 0; i < psi0.dimension(); i++) {
        amps[2 * i] = alpha * psi0[i];
        amps[2 * i + 1] = beta * psi1[i];
    }
    return PureState(psi0.num_qubits() + 1, std::move(amps));
}

PureState checked_assemble(Complex alpha, Complex beta, const PureState &psi0,
                           const PureState &psi1) {
    check_weights(alpha, beta);
    if (psi0.num_qubits() != psi1.num_qubits()) {
        throw std::invalid_argument("Psi0 and Psi1 have different qubit counts");
    }
    return assemble(alpha, beta, psi0, psi1);
}

using Term = std::pair<const char *, Complex>;

/// Normalized four-qubit superposition of the listed basis kets.
PureState superpose(std::initializer_list<Term> terms) {
    std::vector<Complex> amps(16);
    for (const auto &[bits, coeff] : terms) {
        std::size_t index = std::stoul(bits, nullptr, 2);
        amps[index] += coeff;
    }
    return PureState::normalized(4, std::move(amps));
}

}  // namespace

ChannelState::ChannelState(Complex alpha, Complex beta, PureState psi0, PureState psi1)
    : alpha_(alpha),
      beta_(beta),
      psi0_(std::move(psi0)),
      psi1_(std::move(psi1)),
      assembled_(checked_assemble(alpha, beta, psi0_, psi1_)) {
    double overlap = std::abs(inner_product(psi1_, psi0_));
    if (!(overlap <= kConstructionTolerance)) {
        throw std::invalid_argument("Psi0 and Psi1 are not orthogonal: |<Psi1|Psi0>| = " +
                                    std::to_string(overlap));
    }
}

ChannelState ChannelState::with_weights(Complex alpha, Complex beta) const {
    return ChannelState(alpha, beta, psi0_, psi1_);
}

PureState ChannelState::maximal() const {
    const double h = 1.0 / std::sqrt(2.0);
    return assemble(h, h, psi0_, psi1_);
}

ChannelState channel_state(Complex alpha, Complex beta, PureState psi0, PureState psi1) {
    return ChannelState(alpha, beta, std::move(psi0), std::move(psi1));
}

std::optional<ChannelState> read_channel(const PureState &state) {
    int n = state.num_qubits() - 1;
    if (n < 1) {
        return std::nullopt;
    }
    std::size_t half = state.dimension() / 2;
    std::vector<Complex> v0(half), v1(half);
    double p0 = 0, p1 = 0;
    for (std::size_t i = 0; i < half; i++) {
        v0[i] = state[2 * i];
        v1[i] = state[2 * i + 1];
        p0 += std::norm(v0[i]);
        p1 += std::norm(v1[i]);
    }
    if (p0 < kZeroProbability || p1 < kZeroProbability) {
        return std::nullopt;
    }
    PureState psi0 = PureState::normalized(n, std::move(v0));
    PureState psi1 = PureState::normalized(n, std::move(v1));
    if (std::abs(inner_product(psi1, psi0)) > kConstructionTolerance) {
        return std::nullopt;
    }
    double total = p0 + p1;
    return ChannelState(std::sqrt(p0 / total), std::sqrt(p1 / total), std::move(psi0),
                        std::move(psi1));
}

PureState bell_type(Complex alpha, Complex beta) {
    PureState s = apply_1q(basis_state(2, 0), u1(alpha, beta), 1);
    return apply_cnot(s, 1, 2);
}

PureState cat(Complex alpha, Complex beta, int n) {
    if (n < 2) {
        throw std::invalid_argument("cat state needs at least 2 qubits");
    }
    check_weights(alpha, beta);
    if (n > kMaxQubits) {
        throw std::invalid_argument("cat state too large");
    }
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = alpha;
    amps.back() = beta;
    return PureState(n, std::move(amps));
}

PureState cat_by_extension(Complex alpha, Complex beta, int n) {
    if (n < 2) {
        throw std::invalid_argument("cat state needs at least 2 qubits");
    }
    PureState s = bell_type(alpha, beta);
    for (int k = 3; k <= n; k++) {
        s = apply_cnot(tensor(s, basis_state(1, 0)), 2, k);
    }
    return s;
}

ChannelState ghz_like(Complex alpha, Complex beta) {
    return ChannelState(alpha, beta, bell_ket(BellLabel::PsiPlus), bell_ket(BellLabel::PhiPlus));
}

std::string_view family_name(FamilyId family) {
    switch (family) {
        case FamilyId::Gabcd:
            return "G_abcd";
        case FamilyId::Labc2:
            return "L_abc2";
        case FamilyId::La2b2:
            return "L_a2b2";
        case FamilyId::Lab3:
            return "L_ab3";
        case FamilyId::La4:
            return "L_a4";
        case FamilyId::La2_03p1:
            return "L_a2_03+1";
        case FamilyId::L05p3:
            return "L_05+3";
        case FamilyId::L07p1:
            return "L_07+1";
        case FamilyId::L03p1_03p1:
            return "L_03+1_03+1";
    }
    throw std::invalid_argument("unknown family");
}

FamilyId parse_family(std::string_view name) {
    for (FamilyId f : kAllFamilies) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_parameter_names(FamilyId family) {
    switch (family) {
        case FamilyId::Gabcd:
            return {"a", "b", "c", "d"};
        case FamilyId::Labc2:
            return {"a", "b", "c"};
        case FamilyId::La2b2:
        case FamilyId::Lab3:
            return {"a", "b"};
        case FamilyId::La4:
        case FamilyId::La2_03p1:
            return {"a"};
        case FamilyId::L05p3:
        case FamilyId::L07p1:
        case FamilyId::L03p1_03p1:
            return {};
    }
    throw std::invalid_argument("unknown family");
}

FamilySpec::FamilySpec(FamilyId family_, std::vector<Complex> params_)
    : family(family_), params(std::move(params_)) {
    std::size_t expected = family_parameter_names(family).size();
    if (params.size() != expected) {
        throw std::invalid_argument(std::string(family_name(family)) + " takes " +
                                    std::to_string(expected) + " parameter(s), got " +
                                    std::to_string(params.size()));
    }
}

FamilyState family_state(const FamilySpec &spec) {
    const auto &p = spec.params;
    const Complex i(0, 1);
    const double r2 = std::sqrt(2.0);
    auto build = [&]() -> PureState {
        switch (spec.family) {
            case FamilyId::Gabcd: {
                Complex a = p[0], b = p[1], c = p[2], d = p[3];
                return superpose({{"0000", (a + d) / 2.0}, {"1111", (a + d) / 2.0},
                                  {"0011", (a - d) / 2.0}, {"1100", (a - d) / 2.0},
                                  {"0101", (b + c) / 2.0}, {"1010", (b + c) / 2.0},
                                  {"0110", (b - c) / 2.0}, {"1001", (b - c) / 2.0}});
            }
            case FamilyId::Labc2: {
                Complex a = p[0], b = p[1], c = p[2];
                return superpose({{"0000", (a + b) / 2.0}, {"1111", (a + b) / 2.0},
                                  {"0011", (a - b) / 2.0}, {"1100", (a - b) / 2.0},
                                  {"0101", c}, {"1010", c}, {"0110", 1.0}});
            }
            case FamilyId::La2b2: {
                Complex a = p[0], b = p[1];
                return superpose({{"0000", a}, {"1111", a}, {"0101", b}, {"1010", b},
                                  {"0110", 1.0}, {"0011", 1.0}});
            }
            case FamilyId::Lab3: {
                Complex a = p[0], b = p[1];
                return superpose({{"0000", a}, {"1111", a},
                                  {"0101", (a + b) / 2.0}, {"1010", (a + b) / 2.0},
                                  {"0110", (a - b) / 2.0}, {"1001", (a - b) / 2.0},
                                  {"0001", i / r2}, {"0010", i / r2},
                                  {"0111", i / r2}, {"1011", i / r2}});
            }
            case FamilyId::La4: {
                Complex a = p[0];
                return superpose({{"0000", a}, {"0101", a}, {"1010", a}, {"1111", a},
                                  {"0001", i}, {"0110", 1.0}, {"1011", -i}});
            }
            case FamilyId::La2_03p1: {
                Complex a = p[0];
                return superpose({{"0000", a}, {"1111", a}, {"0011", 1.0}, {"0101", 1.0},
                                  {"0110", 1.0}});
            }
            case FamilyId::L05p3:
                return superpose({{"0000", 1.0}, {"0101", 1.0}, {"1000", 1.0}, {"1110", 1.0}});
            case FamilyId::L07p1:
                return superpose({{"0000", 1.0}, {"1011", 1.0}, {"1101", 1.0}, {"1110", 1.0}});
            case FamilyId::L03p1_03p1:
                return superpose({{"0000", 1.0}, {"0111", 1.0}});
        }
        throw std::invalid_argument("unknown family");
    };
    PureState state = build();
    auto channel = read_channel(state);
    return {std::move(state), std::move(channel)};
}

namespace {

FamilyRepresentative make_representative(FamilySpec spec, PureState state, std::string name) {
    auto channel = read_channel(state);
    if (!channel) {
        throw InvariantViolation("catalogued representative of " +
                                 std::string(family_name(spec.family)) +
                                 " has no channel reading");
    }
    return {std::move(spec), std::move(state), std::move(*channel), std::move(name)};
}

FamilyRepresentative from_family(FamilySpec spec, std::string name) {
    PureState state = family_state(spec).state;
    return make_representative(std::move(spec), std::move(state), std::move(name));
}

}  // namespace

FamilyRepresentative family_representative(FamilyId family) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (family) {
        case FamilyId::Gabcd:
            return from_family({family, {h, 0, 0, h}}, "cat state");
        case FamilyId::Labc2:
            return from_family({family, {1, 1, 0}}, "");
        case FamilyId::La2b2:
            return from_family({family, {1, 0}}, "");
        case FamilyId::Lab3:
            // Catalogued without the family's overall factor i.
            return make_representative(
                {family, {0, 0}},
                superpose({{"0001", 1.0}, {"0010", 1.0}, {"0111", 1.0}, {"1011", 1.0}}), "");
        case FamilyId::La4:
            // a = 0 followed by local unitaries.
            return make_representative({family, {0}},
                                       superpose({{"0001", 1.0}, {"0110", 1.0}, {"1000", 1.0}}),
                                       "");
        case FamilyId::La2_03p1:
            return from_family({family, {0}}, "3-qubit W state");
        case FamilyId::L05p3:
            return from_family({family}, "Q4 state");
        case FamilyId::L07p1:
            return from_family({family}, "Q5 state");
        case FamilyId::L03p1_03p1:
            return from_family({family}, "GHZ state");
    }
    throw std::invalid_argument("unknown family");
}

std::vector<FamilyRepresentative> family_catalogue() {
    std::vector<FamilyRepresentative> rows;
    for (FamilyId f : kAllFamilies) {
        rows.push_back(family_representative(f));
        if (f == FamilyId::Gabcd) {
            rows.push_back(from_family({f, {1, 0, 0, 0}}, "Bell state"));
        }
    }
    return rows;
}

}  // namespace ecpsim
