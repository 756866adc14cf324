#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dlarg {

struct BoundComponent {
  std::string name;
  double value = 0.0;
  std::string label;  // "exact" or "fitted"
};

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  std::vector<BoundComponent> components;  // sum to value
  std::vector<std::pair<std::string, double>> diagnostics;  // not part of the sum

  double recombined() const;
  double diagnostic(const std::string& key) const;  // NotFoundError if absent
};

// Constants standing in for the O(.) terms. Each one is computed once from a fixed grid.
struct Thm1Constants {
  double envelope = 0.0;  // C in C * shape(q, T)
  std::size_t grid_points = 0;
};
const Thm1Constants& thm1_constants();

struct Thm2Constants {
  double c1 = 0.0;  // ceil(e^{2 pi delta}/q) min{1, T^2 + delta^-2}
  double c2 = 0.0;  // e^{2 pi delta} / (q sqrt delta)
  double c3 = 0.0;  // log q(T+1) / delta^2 (1 + e^{pi delta}/q)
  double fit_residual = 0.0;
  double envelope_scale = 1.0;
  double prime_mean_constant = 0.0;
  double simplified_offset = 0.0;  // O_N(1) in the simplified form
};
const Thm2Constants& thm2_constants();

// (log q + log(T+1) loglog(q log(T+3))) / ((log q)^2 + (loglog(T+3))^2)
double thm1_error_shape(double q, double T);
// Intermediate bound of the proof with every O-constant set to 1.
double thm1_intermediate(double q, double T, double delta);
// pi delta = log(q log q(T+1)) - loglog(q log q(T+1))
double thm1_delta_star(double q, double T);

BoundReport thm1_bound(std::uint32_t q, double T);
BoundReport thm2_bound(std::uint32_t q, double T, double delta, double integral_plus,
                       double integral_minus);
// Same, with the two integrals over [log 2 / 2pi, delta] computed here.
BoundReport thm2_bound(std::uint32_t q, double T, double delta);
// (2/pi^2) min{loglog q, log(T log q + 1)} + offset.
BoundReport thm2_simplified(std::uint32_t q, double T);

// \int_0^1 u (R^+(u)^2 + R^-(u)^2) du for delta = 1, half length beta.
double cor2_integral(double beta);
BoundReport cor2_lower_bound(double beta);
BoundReport shifted_cor_bound(double beta);

struct LambdaRatio {
  double value = 0.0;        // numerical minimum over [-1/2, 1/2]
  double argmin = 0.0;
  double at_minus_half = 0.0;
  double exact_min = 0.0;    // stationary point when it lies inside, else the endpoint
  double exact_argmin = 0.0;
  bool endpoint_is_min = false;  // mean_square >= beta
};
LambdaRatio min_lambda_ratio(double beta, double mean_square);

double hr_complement(double beta);  // the subtracted rational function
double hr_bound(double beta);

struct ZhaoConstants {
  double switch_beta = 0.0;  // argmin of beta^2 * hr_complement(beta) over beta > 1/2
  double c = 0.0;            // the minimum
};
const ZhaoConstants& zhao_constants();
double zhao_bound(double beta);

// Bound ids: cor2, hr, zhao, shifted, zero.
double evaluate_bound(const std::string& id, double beta);
double crossing_finder(const std::string& f, const std::string& g, double lo, double hi);

struct RoughEstimate {
  double quadrature = 0.0;  // (2/pi^2) \int_0^beta sin^2(2 pi u)/u du
  double comparison = 0.0;  // (1/pi^2) log(beta + 1)
  double offset = 0.0;      // quadrature - comparison
};
RoughEstimate rough_integral_estimate(double beta);

}  // namespace dlarg
