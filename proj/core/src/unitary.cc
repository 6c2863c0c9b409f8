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

#include "ecpsim/unitary.hpp"

#include <stdexcept>
#include <string>

namespace ecpsim {

double unitarity_error(const Eigen::MatrixXcd &m) {
    Eigen::MatrixXcd product = m.adjoint() * m;
    product -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return product.cwiseAbs().maxCoeff();
}

Unitary::Unitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || (matrix_.rows() != 2 && matrix_.rows() != 4)) {
        throw std::invalid_argument(
            "unitary must be 2x2 or 4x4, got " + std::to_string(matrix_.rows()) + "x" +
            std::to_string(matrix_.cols()));
    }
    double err = ecpsim::unitarity_error(matrix_);
    if (!(err <= kConstructionTolerance)) {
        throw std::invalid_argument("matrix is not unitary: max |u^dagger u - I| = " +
                                    std::to_string(err));
    }
}

Unitary Unitary::adjoint() const {
    return Unitary(matrix_.adjoint());
}

Unitary Unitary::operator*(const Unitary &rhs) const {
    if (rhs.dimension() != dimension()) {
        throw std::invalid_argument("unitary dimension mismatch");
    }
    return Unitary(matrix_ * rhs.matrix_);
}

double Unitary::unitarity_error() const {
    return ecpsim::unitarity_error(matrix_);
}

}  // namespace ecpsim
