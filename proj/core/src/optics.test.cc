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

#include "ecpsim/optics.hpp"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

#include "ecpsim/protocols.hpp"

using namespace ecpsim;

TEST(click_pattern, canonical_order_and_names) {
    ClickPattern p(Detector::VDown, Detector::HUp);
    EXPECT_EQ(p.first(), Detector::HUp);
    EXPECT_EQ(p.second(), Detector::VDown);
    EXPECT_EQ(p.str(), "H_up,V_down");
    EXPECT_EQ(p, ClickPattern(Detector::HUp, Detector::VDown));
    EXPECT_FALSE(p.same_side());
    EXPECT_TRUE(ClickPattern(Detector::HUp, Detector::VUp).same_side());
    EXPECT_THROW(ClickPattern(Detector::HUp, Detector::HUp), std::invalid_argument);
}

TEST(classify, examples) {
    EXPECT_EQ(classify({Detector::HUp, Detector::VDown}), OpticalVerdict::PhiPlus);
    EXPECT_EQ(classify({Detector::VUp, Detector::HDown}), OpticalVerdict::PhiPlus);
    EXPECT_EQ(classify({Detector::HUp, Detector::HDown}), OpticalVerdict::PhiMinus);
    EXPECT_EQ(classify({Detector::VUp, Detector::VDown}), OpticalVerdict::PhiMinus);
    EXPECT_EQ(classify({Detector::HUp, Detector::VUp}), OpticalVerdict::Fail);
    EXPECT_EQ(classify({Detector::HDown, Detector::VDown}), OpticalVerdict::Fail);
}

TEST(click_distribution, partitions_reachable_patterns) {
    std::set<ClickPattern> seen;
    int entries = 0;
    for (BellLabel bell : kAllBellLabels) {
        double total = 0;
        for (const auto &[pattern, p] : click_distribution(bell)) {
            total += p;
            entries++;
            seen.insert(pattern);
            OpticalVerdict v = classify(pattern);
            if (bell == BellLabel::PhiPlus) {
                EXPECT_EQ(v, OpticalVerdict::PhiPlus);
            } else if (bell == BellLabel::PhiMinus) {
                EXPECT_EQ(v, OpticalVerdict::PhiMinus);
            } else {
                EXPECT_EQ(v, OpticalVerdict::Fail);
            }
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
    EXPECT_EQ(entries, 8);
    EXPECT_EQ(seen.size(), 6u);
}

TEST(optical_ecp_run, matches_half_of_bell_success) {
    ProtocolReport r = ecp_cat(std::sqrt(0.8), std::sqrt(0.2), 3);
    std::uint64_t trials = 100000;
    SampleStats s = optical_ecp_run(r, trials, 77);
    EXPECT_LE(std::abs(s.empirical_rate - 0.32), 4 * binomial_sigma(0.32, trials));
    std::uint64_t total = 0;
    for (const auto &[label, count] : s.outcome_histogram) {
        total += count;
        EXPECT_TRUE(label == "phi+" || label == "phi-" || label == "fail") << label;
    }
    EXPECT_EQ(total, trials);
    EXPECT_EQ(s, optical_ecp_run(r, trials, 77));
}

TEST(optical_ecp_run, rejects_bad_inputs) {
    ProtocolReport r2 = ecp2(ghz_like(std::sqrt(0.8), std::sqrt(0.2)));
    EXPECT_THROW(optical_ecp_run(r2, 10, 1), std::invalid_argument);
    ProtocolReport r = ecp_ghz_like(std::sqrt(0.8), std::sqrt(0.2));
    EXPECT_THROW(optical_ecp_run(r, 0, 1), std::invalid_argument);
}
