// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace traincap {

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatX = Mat<double>;
using VecX = Vec<double>;

}  // namespace traincap
