#include "dlarg/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dlarg/error.hpp"

namespace dlarg {

EnvelopeFit fit_nonnegative(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  const int n = static_cast<int>(A.cols());
  if (n == 0 || n > 12 || A.rows() != b.size()) throw DomainError("fit_nonnegative: bad shape");
  EnvelopeFit best;
  double best_err = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> cols;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) cols.push_back(k);
    Eigen::MatrixXd sub(A.rows(), cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) sub.col(k) = A.col(cols[k]);
    const Eigen::VectorXd c = sub.colPivHouseholderQr().solve(b);
    if ((c.array() < 0.0).any()) continue;
    const double err = (sub * c - b).norm();
    if (err < best_err) {
      best_err = err;
      best.coefficients = Eigen::VectorXd::Zero(n);
      for (std::size_t k = 0; k < cols.size(); ++k) best.coefficients[cols[k]] = c[k];
    }
  }
  if (!std::isfinite(best_err)) {
    best.coefficients = Eigen::VectorXd::Zero(n);
    best_err = b.norm();
  }
  best.residual_rms = best_err / std::sqrt(static_cast<double>(std::max<Eigen::Index>(1, b.size())));
  const Eigen::VectorXd pred = A * best.coefficients;
  double scale = 1.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    if (b[i] <= 0.0) continue;
    if (pred[i] <= 0.0) {
      scale = std::numeric_limits<double>::infinity();
      break;
    }
    scale = std::max(scale, b[i] / pred[i]);
  }
  if (std::isinf(scale)) {
    // a row with positive data and zero prediction: lift every coefficient by a common amount
    double lift = 0.0;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      const double row = A.row(i).sum();
      if (b[i] > pred[i] && row > 0.0) lift = std::max(lift, (b[i] - pred[i]) / row);
    }
    best.coefficients.array() += lift;
    scale = 1.0;
  }
  best.envelope_scale = scale;
  return best;
}

double sup_ratio(const std::vector<double>& value, const std::vector<double>& shape) {
  double c = 0.0;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!(shape[i] > 0.0)) throw DomainError("sup_ratio: shape must be positive");
    c = std::max(c, value[i] / shape[i]);
  }
  return c;
}

}  // namespace dlarg
