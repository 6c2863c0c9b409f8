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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ecpsim/gates.hpp"
#include "test_oracle.test.h"

using namespace ecpsim;

namespace {

constexpr double kTol = 1e-12;

// Frozen reference values at alpha^2 = 0.8, computed independently of this library.
constexpr double kBinaryEntropy08 = 0.7219280948873623;
constexpr double kCbrtTenth = 0.4641588833612779;
constexpr double kGhzLikeBellTypeAt08 = 0.3703022744559556;
constexpr double kGhzLikeOneQubitAt08 = 0.6894191008102029;

const double kA = std::sqrt(0.8);
const double kB = std::sqrt(0.2);

ChannelState bell_channel(double a, double b) {
    return channel_state(a, b, basis_state(1, "0"), basis_state(1, "1"));
}

std::vector<int> random_cut(int n, std::mt19937_64 &rng) {
    std::vector<int> side;
    while (side.empty() || static_cast<int>(side.size()) == n) {
        side.clear();
        for (int q = 1; q <= n; q++) {
            if (rng() % 2) side.push_back(q);
        }
    }
    return side;
}

}  // namespace

TEST(von_neumann, examples) {
    EXPECT_NEAR(von_neumann(bell_ket(BellLabel::PsiPlus), {{1}}), 1, kTol);
    EXPECT_NEAR(von_neumann(basis_state(2, "01"), {{1}}), 0, kTol);
    EXPECT_NEAR(von_neumann(cat(kA, kB, 3), {{2}}), kBinaryEntropy08, kTol);
    EXPECT_NEAR(von_neumann(cat(kA, kB, 4), {{1, 2}}), kBinaryEntropy08, kTol);
}

TEST(negativity, examples) {
    EXPECT_NEAR(negativity(bell_ket(BellLabel::PhiMinus), {{2}}), 0.5, kTol);
    EXPECT_NEAR(negativity(cat(kA, kB, 3), {{1}}), 0.4, kTol);
    EXPECT_NEAR(negativity(basis_state(3, "010"), {{1, 3}}), 0, kTol);
}

TEST(tangle, examples) {
    EXPECT_NEAR(tangle_2q(bell_ket(BellLabel::PsiPlus)), 1, kTol);
    EXPECT_NEAR(tangle_2q(bell_type(kA, kB)), 0.64, kTol);
    EXPECT_NEAR(linear_tangle(bell_ket(BellLabel::PsiPlus), {{1}}), 1, kTol);
    EXPECT_NEAR(linear_tangle(bell_type(kA, kB), {{1}}), 0.64, kTol);
    EXPECT_THROW(tangle_2q(cat(kA, kB, 3)), std::invalid_argument);
}

TEST(bipartite, rejects_bad_cuts) {
    PureState s = cat(kA, kB, 3);
    EXPECT_THROW(negativity(s, {{}}), std::invalid_argument);
    EXPECT_THROW(negativity(s, {{1, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(von_neumann(s, {{4}}), std::invalid_argument);
    EXPECT_THROW(linear_tangle(s, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(one_vs_rest(basis_state(1, "0"), BaseMeasure::Negativity), std::invalid_argument);
}

TEST(multipartite, ghz_like_negativities) {
    PureState g = ghz_like(kA, kB).assembled();
    std::vector<double> v = one_vs_rest(g, BaseMeasure::Negativity);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_NEAR(v[0], 0.5, kTol);
    EXPECT_NEAR(v[1], 0.5, kTol);
    EXPECT_NEAR(v[2], 0.4, kTol);
    EXPECT_NEAR(multipartite_geometric(g, BaseMeasure::Negativity), kCbrtTenth, kTol);
    EXPECT_NEAR(multipartite_arithmetic(g, BaseMeasure::Negativity), 1.4 / 3, kTol);
    EXPECT_EQ(multipartite_geometric(tensor(bell_ket(BellLabel::PsiPlus), basis_state(1, "0")),
                                     BaseMeasure::Negativity),
              0);
}

TEST(multipartite, names_round_trip) {
    for (BaseMeasure b : {BaseMeasure::VonNeumann, BaseMeasure::Negativity, BaseMeasure::Tangle}) {
        EXPECT_EQ(parse_base_measure(base_measure_name(b)), b);
    }
    for (E0Convention c : {E0Convention::Total, E0Convention::TargetOnly, E0Convention::Printed}) {
        EXPECT_EQ(parse_e0_convention(e0_convention_name(c)), c);
    }
    EXPECT_THROW(parse_base_measure("concurrence"), std::invalid_argument);
    EXPECT_THROW(parse_e0_convention("sum"), std::invalid_argument);
}

TEST(eta, examples) {
    EXPECT_NEAR(eta({0.5, 1, 0, 1}), 0.5, kTol);
    EXPECT_NEAR(eta({0.32, 1, 0.2, 0.8}), (0.32 + 0.68 * 0.2) / 0.8, kTol);
    EXPECT_THROW(eta({0.5, 1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(eta({1.5, 1, 0, 1}), std::invalid_argument);
}

TEST(eta_closed_form, examples) {
    EXPECT_NEAR(eta_closed_form(ClosedForm::BellGhzBellType, kA, kB), 0.4, kTol);
    EXPECT_NEAR(eta_closed_form(ClosedForm::GhzLikeBellType, kA, kB), kGhzLikeBellTypeAt08, kTol);
    EXPECT_NEAR(eta_closed_form(ClosedForm::BellGhzOneQubit, kA, kB), 0.8, kTol);
    EXPECT_NEAR(eta_closed_form(ClosedForm::GhzLikeOneQubit, kA, kB), kGhzLikeOneQubitAt08, kTol);
    double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(eta_closed_form(ClosedForm::BellGhzBellType, h, h), 0.5, kTol);
    EXPECT_NEAR(eta_closed_form(ClosedForm::BellGhzOneQubit, h, h), 1, kTol);
    EXPECT_THROW(eta_closed_form(ClosedForm::BellGhzOneQubit, 1, 0), std::invalid_argument);
}

TEST(eta_for_run, printed_forms_follow_protocol_and_channel) {
    EXPECT_EQ(closed_form_for(ecp_cat(kA, kB, 3)), ClosedForm::BellGhzBellType);
    EXPECT_EQ(closed_form_for(ecp_ghz_like(kA, kB)), ClosedForm::GhzLikeBellType);
    EXPECT_EQ(closed_form_for(ecp1(ghz_like(kA, kB))), ClosedForm::GhzLikeBellType);
    EXPECT_EQ(closed_form_for(ecp2(bell_channel(kA, kB))), ClosedForm::BellGhzOneQubit);
    EXPECT_EQ(closed_form_for(ecp2(ghz_like(kA, kB))), ClosedForm::GhzLikeOneQubit);

    ChannelState q5 = family_representative(FamilyId::L07p1).channel.with_weights(kA, kB);
    ProtocolReport other = ecp1(q5);
    EXPECT_FALSE(closed_form_for(other).has_value());
    EXPECT_THROW(eta_for_run(other, BaseMeasure::Negativity, E0Convention::Printed),
                 std::invalid_argument);
    EXPECT_THROW(efficiency_inputs(other, BaseMeasure::Negativity, E0Convention::Printed),
                 std::invalid_argument);
}

TEST(eta_for_run, negativity_audit_matches_printed_forms) {
    // Total E0, negativity with geometric mean, unit maximal entanglement, no fail term.
    EfficiencyOptions opts{false, true};
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int trial = 0; trial < 50; trial++) {
        double a2 = u(rng);
        double a = std::sqrt(a2), b = std::sqrt(1 - a2);
        std::vector<ProtocolReport> runs = {ecp_cat(a, b, 3), ecp_ghz_like(a, b),
                                            ecp2(bell_channel(a, b)), ecp2(ghz_like(a, b)),
                                            ecp1(ghz_like(a, b))};
        for (const ProtocolReport &r : runs) {
            double numeric = eta_for_run(r, BaseMeasure::Negativity, E0Convention::Total, opts);
            double printed = eta_for_run(r, BaseMeasure::Negativity, E0Convention::Printed);
            ASSERT_NEAR(numeric, printed, 1e-12) << protocol_name(r.protocol) << " a2=" << a2;
        }
    }
}

TEST(eta_for_run, tangle_reference_values) {
    EfficiencyOptions no_fail{false, false};
    EXPECT_NEAR(eta_for_run(ecp2(bell_channel(kA, kB)), BaseMeasure::Tangle, E0Convention::Total,
                            no_fail),
                0.5, kTol);
    EXPECT_NEAR(eta_for_run(ecp_cat(kA, kB, 3), BaseMeasure::Tangle, E0Convention::Total, no_fail),
                0.25, kTol);
}

TEST(efficiency_inputs, measured_terms) {
    ProtocolReport r = ecp_cat(kA, kB, 3);
    EfficiencyInputs in = efficiency_inputs(r, BaseMeasure::Negativity, E0Convention::Total);
    EXPECT_NEAR(in.p_s, 0.32, kTol);
    // One-vs-rest negativity of the 3-qubit cat target.
    EXPECT_NEAR(in.e_m, 0.5, kTol);
    EXPECT_NEAR(in.e_0, 0.8, kTol);
    // Both failure branches leave a cat state with weights a^2 : b^2.
    EXPECT_NEAR(in.e_fail, 0.16 / 0.68, kTol);

    EfficiencyInputs target_only =
        efficiency_inputs(r, BaseMeasure::Negativity, E0Convention::TargetOnly);
    EXPECT_NEAR(target_only.e_0, 0.4, kTol);
}

TEST(entanglement_properties, match_schmidt_oracle) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; trial++) {
        int n = 2 + static_cast<int>(rng() % 5);
        PureState s = oracle::random_state(n, rng);
        std::vector<int> side = random_cut(n, rng);
        Eigen::VectorXd sc = oracle::schmidt_coefficients(s, side);
        double entropy = 0, purity = 0;
        for (double x : sc) {
            double l = x * x;
            if (l > 1e-15) entropy -= l * std::log2(l);
            purity += l * l;
        }
        ASSERT_NEAR(negativity(s, {side}), oracle::schmidt_negativity(s, side), 1e-10);
        ASSERT_NEAR(von_neumann(s, {side}), entropy, 1e-10);
        ASSERT_NEAR(linear_tangle(s, {side}), 2 * (1 - purity), 1e-10);
    }
}

TEST(entanglement_properties, geometric_mean_bounded_by_arithmetic) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; trial++) {
        int n = 2 + static_cast<int>(rng() % 4);
        PureState s = oracle::random_state(n, rng);
        for (BaseMeasure b : {BaseMeasure::VonNeumann, BaseMeasure::Negativity, BaseMeasure::Tangle}) {
            ASSERT_LE(multipartite_geometric(s, b), multipartite_arithmetic(s, b) + 1e-12);
        }
    }
}

TEST(entanglement_properties, local_unitaries_preserve_measures) {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; trial++) {
        int n = 2 + static_cast<int>(rng() % 4);
        PureState s = oracle::random_state(n, rng);
        PureState t = s;
        for (int q = 1; q <= n; q++) {
            t = apply_1q(t, Unitary(oracle::random_unitary_matrix(2, rng)), q);
        }
        for (BaseMeasure b : {BaseMeasure::VonNeumann, BaseMeasure::Negativity, BaseMeasure::Tangle}) {
            ASSERT_NEAR(multipartite_geometric(s, b), multipartite_geometric(t, b), 1e-10);
        }
    }
}
