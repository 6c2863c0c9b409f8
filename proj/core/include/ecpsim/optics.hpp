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

#ifndef ECPSIM_OPTICS_HPP
#define ECPSIM_OPTICS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecpsim/bell.hpp"
#include "ecpsim/protocols.hpp"
#include "ecpsim/sampling.hpp"

namespace ecpsim {

// Click-level model of a linear-optics Bell analyzer for polarization qubits
// (H = |0>, V = |1>) with four ideal on/off detectors, two on each output side.

enum class Detector { HUp, VUp, HDown, VDown };

std::string_view detector_name(Detector detector);

/// Two detector events. Constructed in canonical order (up side first, H before V).
class ClickPattern {
   public:
    /// Throws std::invalid_argument if both events name the same detector.
    ClickPattern(Detector a, Detector b);

    Detector first() const {
        return first_;
    }
    Detector second() const {
        return second_;
    }
    bool same_side() const;
    std::string str() const;

    auto operator<=>(const ClickPattern &) const = default;

   private:
    Detector first_;
    Detector second_;
};

enum class OpticalVerdict { PhiPlus, PhiMinus, Fail };

std::string_view optical_verdict_name(OpticalVerdict verdict);

/// Distribution of click patterns for a Bell state entering the analyzer.
std::vector<std::pair<ClickPattern, double>> click_distribution(BellLabel bell);

/// Same side -> Fail; opposite sides with different polarizations -> PhiPlus; opposite
/// sides with equal polarization -> PhiMinus.
OpticalVerdict classify(const ClickPattern &pattern);

/// Samples Bell outcomes from the report, then click patterns, then verdicts. Success is
/// a phi verdict. The histogram is keyed by verdict name. Throws std::invalid_argument
/// for a protocol without a Bell measurement.
SampleStats optical_ecp_run(const ProtocolReport &report, std::uint64_t trials,
                            std::uint64_t seed);

}  // namespace ecpsim

#endif
