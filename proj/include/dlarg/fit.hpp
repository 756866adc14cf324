#pragma once

#include <Eigen/Dense>
#include <vector>

namespace dlarg {

struct EnvelopeFit {
  Eigen::VectorXd coefficients;  // non-negative least squares
  double residual_rms = 0.0;
  // Smallest common scale s >= 1 with s * (A c) >= b on every row; reported beside the
  // least-squares fit so a bound built from it dominates the data it was fitted on.
  // When no finite scale exists the coefficients are raised uniformly instead and the scale is 1.
  double envelope_scale = 1.0;
};

// min |A c - b| subject to c >= 0, by enumerating active sets (A has few columns).
EnvelopeFit fit_nonnegative(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

// Smallest C with C * shape[i] >= value[i] for all i (shape > 0).
double sup_ratio(const std::vector<double>& value, const std::vector<double>& shape);

}  // namespace dlarg
