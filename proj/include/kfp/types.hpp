#pragma once

#include <complex>
#include <vector>
#include <Eigen/Dense>

namespace kfp {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace kfp
