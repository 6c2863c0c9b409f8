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

#include "ecpsim/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace ecpsim {

std::array<Complex, 4> bell_amplitudes(BellLabel label) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (label) {
        case BellLabel::PsiPlus:
            return {h, 0, 0, h};
        case BellLabel::PsiMinus:
            return {h, 0, 0, -h};
        case BellLabel::PhiPlus:
            return {0, h, h, 0};
        case BellLabel::PhiMinus:
            return {0, h, -h, 0};
    }
    throw std::invalid_argument("unknown Bell label");
}

std::string_view bell_label_name(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus:
            return "psi+";
        case BellLabel::PsiMinus:
            return "psi-";
        case BellLabel::PhiPlus:
            return "phi+";
        case BellLabel::PhiMinus:
            return "phi-";
    }
    throw std::invalid_argument("unknown Bell label");
}

BellLabel parse_bell_label(std::string_view name) {
    for (BellLabel label : kAllBellLabels) {
        if (bell_label_name(label) == name) {
            return label;
        }
    }
    throw std::invalid_argument("unknown Bell label '" + std::string(name) + "'");
}

}  // namespace ecpsim
