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

#ifndef ECPSIM_COMMON_HPP
#define ECPSIM_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ecpsim {

using Complex = std::complex<double>;

/// Tolerance for validating freshly constructed objects (norms, unitarity, orthogonality).
inline constexpr double kConstructionTolerance = 1e-10;

/// Tolerance for comparisons that should hold to exact algebra.
inline constexpr double kExactTolerance = 1e-12;

/// Measurement outcomes with probability below this are dropped.
inline constexpr double kZeroProbability = 1e-12;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Raised when a computed quantity breaks one of the numeric invariants the library
/// guarantees (normalization, probability completeness, correction fidelity).
/// Precondition failures on caller input raise std::invalid_argument instead.
class InvariantViolation : public std::runtime_error {
   public:
    explicit InvariantViolation(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace ecpsim

#endif
