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

#include "ecpsim/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ecpsim {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t draw_index(std::span<const double> probabilities, Rng &rng) {
    if (probabilities.empty()) {
        throw std::invalid_argument("draw_index needs at least one outcome");
    }
    double total = 0;
    for (double p : probabilities) {
        total += p;
    }
    double u = rng.uniform() * total;
    double acc = 0;
    for (std::size_t i = 0; i < probabilities.size(); i++) {
        acc += probabilities[i];
        if (u < acc) {
            return i;
        }
    }
    // Rounding at the top of the CDF.
    return probabilities.size() - 1;
}

SampleStats sample(const ProtocolReport &report, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("sample needs at least one trial");
    }
    std::vector<double> probabilities;
    std::vector<std::string> labels;
    for (const BranchRecord &b : report.branches) {
        probabilities.push_back(b.probability);
        labels.push_back(outcome_label(b.outcome));
    }

    SampleStats stats;
    stats.trials = trials;
    stats.seed = seed;
    Rng rng(seed);
    for (std::uint64_t t = 0; t < trials; t++) {
        std::size_t k = draw_index(probabilities, rng);
        stats.outcome_histogram[labels[k]]++;
        if (report.branches[k].verdict == Verdict::Success) {
            stats.successes++;
        }
    }
    stats.empirical_rate = static_cast<double>(stats.successes) / static_cast<double>(trials);
    return stats;
}

double binomial_sigma(double p, std::uint64_t trials) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace ecpsim
