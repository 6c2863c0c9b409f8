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

#ifndef ECPSIM_UNITARY_HPP
#define ECPSIM_UNITARY_HPP

#include <Eigen/Dense>

#include "ecpsim/common.hpp"

namespace ecpsim {

/// A 2x2 or 4x4 complex matrix satisfying u^dagger u = I within kConstructionTolerance.
///
/// Four-dimensional unitaries act on an ordered qubit pair; the first qubit of the pair
/// is the more significant bit of the 2-bit row/column index.
class Unitary {
   public:
    /// Throws std::invalid_argument when the matrix is not 2x2 / 4x4 or not unitary.
    explicit Unitary(Eigen::MatrixXcd matrix);

    int dimension() const {
        return static_cast<int>(matrix_.rows());
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    Complex operator()(int row, int col) const {
        return matrix_(row, col);
    }

    Unitary adjoint() const;
    Unitary operator*(const Unitary &rhs) const;

    /// Largest absolute entry of u^dagger u - I.
    double unitarity_error() const;

   private:
    Eigen::MatrixXcd matrix_;
};

/// Largest absolute entry of m^dagger m - I.
double unitarity_error(const Eigen::MatrixXcd &m);

}  // namespace ecpsim

#endif
