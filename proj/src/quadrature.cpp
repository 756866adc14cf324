#include "dlarg/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <queue>
#include <stdexcept>

#include "dlarg/error.hpp"

namespace dlarg {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss10 = boost::math::quadrature::gauss<double, 10>;

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const std::function<double(double)>& f, double a, double b) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss10::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  // xk[0] = 0 is a Kronrod-only node; odd indices coincide with the 10-point Gauss nodes.
  const double f0 = f(c);
  double kron = wk[0] * f0, gauss = 0.0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double fs = f(c + h * xk[i]) + f(c - h * xk[i]);
    kron += wk[i] * fs;
    if (i % 2 == 1) gauss += wg[i / 2] * fs;
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, std::span<const double> breakpoints,
                              std::size_t max_intervals) {
  QuadResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> cuts{a};
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> heap;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = gk21(f, cuts[i], cuts[i + 1]);
    total_err += p.error;
    heap.push(p);
  }
  out.evaluations = 21 * heap.size();
  while (total_err > abs_tol && heap.size() < max_intervals) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    heap.pop();
    Panel left = gk21(f, worst.a, mid);
    Panel right = gk21(f, mid, worst.b);
    out.evaluations += 42;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value, err;
  for (const Panel& p : panels) {
    value += p.value;
    err += p.error;
  }
  out.value = sign * value.value();
  out.abs_error = err.value();
  return out;
}

void append_gauss_legendre(double a, double b, int order, std::vector<double>& nodes,
                           std::vector<double>& weights) {
  auto emit = [&](const auto& x, const auto& w) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        nodes.push_back(c);
        weights.push_back(h * w[i]);
      } else {
        nodes.push_back(c - h * x[i]);
        weights.push_back(h * w[i]);
        nodes.push_back(c + h * x[i]);
        weights.push_back(h * w[i]);
      }
    }
  };
  using namespace boost::math::quadrature;
  switch (order) {
    case 8: emit(gauss<double, 8>::abscissa(), gauss<double, 8>::weights()); break;
    case 10: emit(gauss<double, 10>::abscissa(), gauss<double, 10>::weights()); break;
    case 12: emit(gauss<double, 12>::abscissa(), gauss<double, 12>::weights()); break;
    case 16: emit(gauss<double, 16>::abscissa(), gauss<double, 16>::weights()); break;
    case 20: emit(gauss<double, 20>::abscissa(), gauss<double, 20>::weights()); break;
    default: throw DomainError("append_gauss_legendre: unsupported order");
  }
}

}  // namespace dlarg
