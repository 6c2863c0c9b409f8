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

#ifndef ECPSIM_BELL_HPP
#define ECPSIM_BELL_HPP

#include <array>
#include <string>
#include <string_view>

#include "ecpsim/common.hpp"

namespace ecpsim {

/// Bell basis labels in the convention
///   psi+- = (|00> +- |11>)/sqrt2,   phi+- = (|01> +- |10>)/sqrt2.
/// Note this swaps the more common psi/phi naming.
enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus, BellLabel::PhiMinus};

/// Amplitudes over |00>, |01>, |10>, |11>.
std::array<Complex, 4> bell_amplitudes(BellLabel label);

/// "psi+", "psi-", "phi+", "phi-".
std::string_view bell_label_name(BellLabel label);

/// Accepts the names produced by bell_label_name. Throws std::invalid_argument otherwise.
BellLabel parse_bell_label(std::string_view name);

/// True for phi+ and phi-.
inline bool is_phi(BellLabel label) {
    return label == BellLabel::PhiPlus || label == BellLabel::PhiMinus;
}

}  // namespace ecpsim

#endif
