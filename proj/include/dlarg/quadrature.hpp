#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dlarg {

// Neumaier compensated accumulator; fixed summation order gives reproducible totals.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;  // Gauss/Kronrod difference summed over final intervals
  std::size_t evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (10/21) with an absolute error target.
// Breakpoints inside (a, b) start the subdivision there.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, std::span<const double> breakpoints = {},
                              std::size_t max_intervals = 4000);

// Gauss-Legendre rule with `order` points mapped onto [a, b]; nodes/weights appended.
void append_gauss_legendre(double a, double b, int order, std::vector<double>& nodes,
                           std::vector<double>& weights);

}  // namespace dlarg
