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

#ifndef ECPSIM_SAMPLING_HPP
#define ECPSIM_SAMPLING_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>

#include "ecpsim/protocols.hpp"

namespace ecpsim {

/// Seeded generator whose output sequence is fixed by the C++ standard (mt19937_64) and
/// whose uniform draws do not go through implementation-defined distributions, so a seed
/// reproduces the same samples on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

   private:
    std::mt19937_64 engine_;
};

/// Index drawn with the given (nonnegative, ~unit-sum) weights by inverse CDF.
std::size_t draw_index(std::span<const double> probabilities, Rng &rng);

struct SampleStats {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
    double empirical_rate = 0;
    /// Outcome label -> count; counts add up to trials.
    std::map<std::string, std::uint64_t> outcome_histogram;

    bool operator==(const SampleStats &) const = default;
};

/// Draws trials measurement outcomes from the report's branch probabilities. Throws
/// std::invalid_argument for trials == 0.
SampleStats sample(const ProtocolReport &report, std::uint64_t trials, std::uint64_t seed);

/// Runs the protocol once (its branch table is exact) and samples from it.
template <typename Run>
    requires std::invocable<Run> && std::same_as<std::invoke_result_t<Run>, ProtocolReport>
SampleStats sample(Run &&run, std::uint64_t trials, std::uint64_t seed) {
    return sample(run(), trials, seed);
}

/// Standard deviation of a binomial rate estimate, sqrt(p(1-p)/trials).
double binomial_sigma(double p, std::uint64_t trials);

}  // namespace ecpsim

#endif
