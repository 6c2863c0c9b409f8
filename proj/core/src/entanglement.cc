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

#include "ecpsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace ecpsim {

namespace {

void check_cut(const PureState &state, const Bipartition &cut) {
    int n = state.num_qubits();
    std::vector<int> side = cut.side_a;
    std::sort(side.begin(), side.end());
    if (side.empty() || side.size() >= static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bipartition side must be a nonempty proper subset");
    }
    if (std::adjacent_find(side.begin(), side.end()) != side.end() || side.front() < 1 ||
        side.back() > n) {
        throw std::invalid_argument("bipartition names an invalid qubit");
    }
}

/// Entry (i, j) of the partial transpose over the qubits in mask_a of |psi><psi|.
Eigen::MatrixXcd partial_transpose(const PureState &state, std::uint64_t mask_a) {
    auto dim = static_cast<Eigen::Index>(state.dimension());
    Eigen::MatrixXcd out(dim, dim);
    for (std::uint64_t i = 0; i < state.dimension(); i++) {
        for (std::uint64_t j = 0; j < state.dimension(); j++) {
            std::uint64_t row = (i & ~mask_a) | (j & mask_a);
            std::uint64_t col = (j & ~mask_a) | (i & mask_a);
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                state[row] * std::conj(state[col]);
        }
    }
    return out;
}

double measure_state(const PureState &state, BaseMeasure base) {
    return multipartite_geometric(state, base);
}

}  // namespace

std::string_view base_measure_name(BaseMeasure base) {
    switch (base) {
        case BaseMeasure::VonNeumann:
            return "von_neumann";
        case BaseMeasure::Negativity:
            return "negativity";
        case BaseMeasure::Tangle:
            return "tangle";
    }
    throw std::invalid_argument("unknown base measure");
}

BaseMeasure parse_base_measure(std::string_view name) {
    for (BaseMeasure b : {BaseMeasure::VonNeumann, BaseMeasure::Negativity, BaseMeasure::Tangle}) {
        if (base_measure_name(b) == name) {
            return b;
        }
    }
    throw std::invalid_argument("unknown base measure '" + std::string(name) + "'");
}

double von_neumann(const PureState &state, const Bipartition &cut) {
    check_cut(state, cut);
    Eigen::VectorXd lambda = reduced_density(state, cut.side_a).eigenvalues();
    double s = 0;
    for (double l : lambda) {
        if (l > kExactTolerance) {
            s -= l * std::log2(l);
        }
    }
    return std::max(0.0, s);
}

double negativity(const PureState &state, const Bipartition &cut) {
    check_cut(state, cut);
    std::uint64_t mask = 0;
    for (int q : cut.side_a) {
        mask |= std::uint64_t{1} << (state.num_qubits() - q);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(partial_transpose(state, mask));
    double trace_norm = svd.singularValues().sum();
    return std::max(0.0, (trace_norm - 1.0) / 2.0);
}

double linear_tangle(const PureState &state, const Bipartition &cut) {
    check_cut(state, cut);
    DensityMatrix rho = reduced_density(state, cut.side_a);
    double purity = (rho.entries() * rho.entries()).trace().real();
    return std::max(0.0, 2.0 * (1.0 - purity));
}

double tangle_2q(const PureState &state) {
    if (state.num_qubits() != 2) {
        throw std::invalid_argument("tangle_2q needs a two-qubit state");
    }
    return 4.0 * std::norm(state[0] * state[3] - state[1] * state[2]);
}

double bipartite(const PureState &state, const Bipartition &cut, BaseMeasure base) {
    switch (base) {
        case BaseMeasure::VonNeumann:
            return von_neumann(state, cut);
        case BaseMeasure::Negativity:
            return negativity(state, cut);
        case BaseMeasure::Tangle:
            return linear_tangle(state, cut);
    }
    throw std::invalid_argument("unknown base measure");
}

std::vector<double> one_vs_rest(const PureState &state, BaseMeasure base) {
    int n = state.num_qubits();
    if (n < 2) {
        throw std::invalid_argument("multipartite measures need at least 2 qubits");
    }
    std::vector<double> values;
    values.reserve(n);
    for (int k = 1; k <= n; k++) {
        values.push_back(bipartite(state, Bipartition{{k}}, base));
    }
    return values;
}

double multipartite_arithmetic(const PureState &state, BaseMeasure base) {
    std::vector<double> v = one_vs_rest(state, base);
    double sum = 0;
    for (double x : v) {
        sum += x;
    }
    return sum / static_cast<double>(v.size());
}

double multipartite_geometric(const PureState &state, BaseMeasure base) {
    std::vector<double> v = one_vs_rest(state, base);
    double product = 1;
    for (double x : v) {
        if (x <= 0) {
            return 0;
        }
        product *= x;
    }
    return std::pow(product, 1.0 / static_cast<double>(v.size()));
}

double eta(const EfficiencyInputs &in) {
    if (!(in.e_0 > 0)) {
        throw std::invalid_argument("eta: initial entanglement must be positive");
    }
    if (!(in.p_s >= 0 && in.p_s <= 1) || in.e_m < 0 || in.e_fail < 0) {
        throw std::invalid_argument("eta: inputs out of range");
    }
    return (in.p_s * in.e_m + (1.0 - in.p_s) * in.e_fail) / in.e_0;
}

std::string_view closed_form_name(ClosedForm form) {
    switch (form) {
        case ClosedForm::BellGhzBellType:
            return "bell_belltype";
        case ClosedForm::GhzLikeBellType:
            return "ghzlike_belltype";
        case ClosedForm::BellGhzOneQubit:
            return "bell_1qubit";
        case ClosedForm::GhzLikeOneQubit:
            return "ghzlike_1qubit";
    }
    throw std::invalid_argument("unknown closed form");
}

double eta_closed_form(ClosedForm form, Complex alpha, Complex beta) {
    double x = std::abs(alpha) * std::abs(beta);
    if (!(x > 0) || x > 0.5 + kExactTolerance) {
        throw std::invalid_argument("closed-form efficiency needs 0 < |alpha beta| <= 1/2");
    }
    switch (form) {
        case ClosedForm::BellGhzBellType:
            return 2 * x * x / (2 * x);
        case ClosedForm::GhzLikeBellType:
            return 2 * x * x / (std::cbrt(x / 4) + x);
        case ClosedForm::BellGhzOneQubit:
            return 2 * x;
        case ClosedForm::GhzLikeOneQubit:
            return 4 * x * x / std::cbrt(2 * x);
    }
    throw std::invalid_argument("unknown closed form");
}

std::optional<ClosedForm> closed_form_for(const ProtocolReport &report) {
    switch (report.protocol) {
        case ProtocolKind::Cat:
            return ClosedForm::BellGhzBellType;
        case ProtocolKind::GhzLike:
            return ClosedForm::GhzLikeBellType;
        case ProtocolKind::Ecp1:
            if (report.channel_form == ChannelForm::Cat) return ClosedForm::BellGhzBellType;
            if (report.channel_form == ChannelForm::GhzLike) return ClosedForm::GhzLikeBellType;
            return std::nullopt;
        case ProtocolKind::Ecp2:
            if (report.channel_form == ChannelForm::Cat) return ClosedForm::BellGhzOneQubit;
            if (report.channel_form == ChannelForm::GhzLike) return ClosedForm::GhzLikeOneQubit;
            return std::nullopt;
    }
    return std::nullopt;
}

std::string_view e0_convention_name(E0Convention convention) {
    switch (convention) {
        case E0Convention::Total:
            return "total";
        case E0Convention::TargetOnly:
            return "target_only";
        case E0Convention::Printed:
            return "printed";
    }
    throw std::invalid_argument("unknown E0 convention");
}

E0Convention parse_e0_convention(std::string_view name) {
    for (E0Convention c : {E0Convention::Total, E0Convention::TargetOnly, E0Convention::Printed}) {
        if (e0_convention_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown E0 convention '" + std::string(name) + "'");
}

EfficiencyInputs efficiency_inputs(const ProtocolReport &report, BaseMeasure base,
                                   E0Convention convention, EfficiencyOptions options) {
    if (convention == E0Convention::Printed) {
        throw std::invalid_argument("the printed convention has no measured inputs");
    }
    EfficiencyInputs in{report.success_probability, 1.0, 0.0, 0.0};
    if (!options.unit_maximal) {
        in.e_m = measure_state(report.target, base);
    }
    double p_fail = 1.0 - report.success_probability;
    if (options.include_fail && p_fail > kZeroProbability) {
        double weighted = 0;
        for (const BranchRecord &b : report.branches) {
            if (b.verdict == Verdict::Fail) {
                weighted += b.probability * measure_state(b.post_state, base);
            }
        }
        in.e_fail = weighted / p_fail;
    }
    in.e_0 = measure_state(report.concentrated, base);
    if (convention == E0Convention::Total && report.assisting) {
        in.e_0 += measure_state(*report.assisting, base);
    }
    return in;
}

double eta_for_run(const ProtocolReport &report, BaseMeasure base, E0Convention convention,
                   EfficiencyOptions options) {
    if (convention == E0Convention::Printed) {
        auto form = closed_form_for(report);
        if (!form) {
            throw std::invalid_argument("no published efficiency for " +
                                        std::string(protocol_name(report.protocol)) +
                                        " on a channel of form " +
                                        std::string(channel_form_name(report.channel_form)));
        }
        return eta_closed_form(*form, report.alpha, report.beta);
    }
    return eta(efficiency_inputs(report, base, convention, options));
}

}  // namespace ecpsim
