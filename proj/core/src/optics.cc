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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecpsim {

namespace {

bool is_up(Detector d) {
    return d == Detector::HUp || d == Detector::VUp;
}

bool is_horizontal(Detector d) {
    return d == Detector::HUp || d == Detector::HDown;
}

}  // namespace

std::string_view detector_name(Detector detector) {
    switch (detector) {
        case Detector::HUp:
            return "H_up";
        case Detector::VUp:
            return "V_up";
        case Detector::HDown:
            return "H_down";
        case Detector::VDown:
            return "V_down";
    }
    throw std::invalid_argument("unknown detector");
}

ClickPattern::ClickPattern(Detector a, Detector b) : first_(std::min(a, b)), second_(std::max(a, b)) {
    if (a == b) {
        throw std::invalid_argument("a click pattern needs two distinct detectors");
    }
}

bool ClickPattern::same_side() const {
    return is_up(first_) == is_up(second_);
}

std::string ClickPattern::str() const {
    return std::string(detector_name(first_)) + "," + std::string(detector_name(second_));
}

std::string_view optical_verdict_name(OpticalVerdict verdict) {
    switch (verdict) {
        case OpticalVerdict::PhiPlus:
            return "phi+";
        case OpticalVerdict::PhiMinus:
            return "phi-";
        case OpticalVerdict::Fail:
            return "fail";
    }
    throw std::invalid_argument("unknown verdict");
}

std::vector<std::pair<ClickPattern, double>> click_distribution(BellLabel bell) {
    using D = Detector;
    switch (bell) {
        case BellLabel::PhiPlus:
            return {{{D::HUp, D::VDown}, 0.5}, {{D::VUp, D::HDown}, 0.5}};
        case BellLabel::PhiMinus:
            return {{{D::HUp, D::HDown}, 0.5}, {{D::VUp, D::VDown}, 0.5}};
        case BellLabel::PsiPlus:
        case BellLabel::PsiMinus:
            return {{{D::HUp, D::VUp}, 0.5}, {{D::HDown, D::VDown}, 0.5}};
    }
    throw std::invalid_argument("unknown Bell label");
}

OpticalVerdict classify(const ClickPattern &pattern) {
    if (pattern.same_side()) {
        return OpticalVerdict::Fail;
    }
    return is_horizontal(pattern.first()) == is_horizontal(pattern.second())
               ? OpticalVerdict::PhiMinus
               : OpticalVerdict::PhiPlus;
}

SampleStats optical_ecp_run(const ProtocolReport &report, std::uint64_t trials,
                            std::uint64_t seed) {
    if (!report.uses_bell_measurement()) {
        throw std::invalid_argument(std::string(protocol_name(report.protocol)) +
                                    " has no Bell measurement to realize optically");
    }
    if (trials == 0) {
        throw std::invalid_argument("optical_ecp_run needs at least one trial");
    }
    std::vector<double> branch_p;
    for (const BranchRecord &b : report.branches) {
        branch_p.push_back(b.probability);
    }

    SampleStats stats;
    stats.trials = trials;
    stats.seed = seed;
    Rng rng(seed);
    for (std::uint64_t t = 0; t < trials; t++) {
        const BranchRecord &branch = report.branches[draw_index(branch_p, rng)];
        BellLabel bell = std::get<BellLabel>(branch.outcome);
        auto dist = click_distribution(bell);
        std::vector<double> pattern_p;
        for (const auto &entry : dist) {
            pattern_p.push_back(entry.second);
        }
        OpticalVerdict verdict = classify(dist[draw_index(pattern_p, rng)].first);
        stats.outcome_histogram[std::string(optical_verdict_name(verdict))]++;
        if (verdict == OpticalVerdict::Fail) {
            continue;
        }
        BellLabel expected =
            verdict == OpticalVerdict::PhiPlus ? BellLabel::PhiPlus : BellLabel::PhiMinus;
        if (bell != expected || branch.verdict != Verdict::Success) {
            throw InvariantViolation("optical verdict disagrees with the Bell outcome");
        }
        stats.successes++;
    }
    stats.empirical_rate = static_cast<double>(stats.successes) / static_cast<double>(trials);
    return stats;
}

}  // namespace ecpsim
