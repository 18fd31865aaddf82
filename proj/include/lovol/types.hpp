#pragma once

#include <Eigen/Dense>

namespace lovol {

// All dense objects are capped at kMaxDim so they live on the stack.
inline constexpr int kMaxDim = 8;

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using IVec = Eigen::Matrix<int, Eigen::Dynamic, 1, 0, kMaxDim, 1>;

}  // namespace lovol
