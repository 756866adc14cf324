#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dlarg/characters.hpp"

namespace dlarg {

struct ZeroRecord {
  std::uint32_t q = 0;
  std::uint32_t g = 0;
  std::uint32_t j = 0;
  double gamma = 0.0;
  double abs_tolerance = 0.0;
};

struct ArgumentValue {
  double T = 0.0;
  double s_value = 0.0;  // S(T, chi)
  double tilde_s = 0.0;  // S(T, chi) + S(T, conj chi)
  bool at_jump = false;  // T sat on a zero; two-sided average was used
};

// All characters mod q at once. L(s, chi_j) = q^{-s} sum_k e(jk/(q-1)) zeta(s, g^k/q),
// so one Hurwitz vector serves the whole family through a length-(q-1) DFT.
class LFamily {
 public:
  explicit LFamily(std::uint32_t q);
  explicit LFamily(std::shared_ptr<const CharacterGroup> group);

  std::uint32_t modulus() const { return group_->modulus(); }
  std::uint32_t generator() const { return group_->generator(); }
  std::uint32_t size() const { return group_->order(); }
  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }
  DirichletCharacter character(std::uint32_t j) const { return {group_, j}; }

  // L(s, chi_j) for j = 0..q-2 (j = 0 is only meaningful away from s = 1).
  std::vector<cplx> values(cplx s) const;
  cplx value(cplx s, std::uint32_t j) const;

  // Phase of the gamma/conductor factor on the critical line:
  // theta_a(t) = (t/2) log(q/pi) + Im log Gamma((1/2 + a + it)/2).
  double theta(double t, int gamma_shift) const;
  // epsilon_j^{-1/2} with the principal root; unused slot for j = 0.
  const cplx& inv_sqrt_epsilon(std::uint32_t j) const { return inv_sqrt_eps_[j]; }
  const cplx& epsilon(std::uint32_t j) const { return eps_[j]; }
  static int gamma_shift(std::uint32_t j) { return j % 2 == 0 ? 0 : 1; }

  // eps^{-1/2} e^{i theta} L(1/2 + it): real up to rounding, same sign as Z(t).
  std::vector<cplx> rotated(double t) const;
  cplx rotated(double t, std::uint32_t j) const;

 private:
  std::vector<cplx> hurwitz_vector(cplx s) const;

  std::shared_ptr<const CharacterGroup> group_;
  std::vector<double> shifts_;  // g^k / q
  std::vector<cplx> eps_;
  std::vector<cplx> inv_sqrt_eps_;
};

cplx l_value(cplx s, const DirichletCharacter& chi);

// (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi).
cplx completed_lambda(cplx s, const DirichletCharacter& chi);

struct HardyZValue {
  double value = 0.0;          // Re[eps^{-1/2} Lambda(1/2 + it)]
  double imag = 0.0;           // Im of the same, should vanish
  double rotated_value = 0.0;  // Re[eps^{-1/2} e^{i theta} L(1/2+it)], O(1) scale
  double rotated_imag = 0.0;   // NumericalError is thrown when this exceeds 1e-6
};

HardyZValue hardy_z_ex(double t, const DirichletCharacter& chi);
inline double hardy_z(double t, const DirichletCharacter& chi) { return hardy_z_ex(t, chi).value; }

// S(T, chi) by continuous variation of arg L(sigma + iT) from sigma = 10 to 1/2.
ArgumentValue s_arg(double T, const DirichletCharacter& chi);

struct FamilyArguments {
  double T = 0.0;
  std::vector<double> s;       // indexed by j; j = 0 unused
  std::vector<char> at_jump;
};

// S(T, chi_j) for every non-principal j, sharing the batch evaluations.
FamilyArguments family_s_values(const LFamily& family, double T);

struct ScanOptions {
  double refine_tolerance = 1e-9;
  int max_rescans = 3;
  double samples_per_gap = 8.0;
};

struct FamilyZeros {
  std::uint32_t q = 0;
  std::uint32_t g = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::vector<std::vector<ZeroRecord>> zeros;  // indexed by j; j = 0 empty
  std::vector<char> central_flag;              // |Z(0)| < 1e-10 seen for j
};

// Smallest H' >= H with |Z(+-H', chi_j)| clear of zero for every j (so window ends are safe).
double safe_height(const LFamily& family, double H);

// Sign-change zeros in (t_lo, t_hi) for all non-principal characters; counts are
// checked against the argument principle and rescanned on mismatch.
FamilyZeros find_zeros_family(const LFamily& family, double t_lo, double t_hi,
                              const ScanOptions& opt = {});

std::vector<ZeroRecord> find_zeros(const DirichletCharacter& chi, double t_min, double t_max,
                                   const ScanOptions& opt = {});

struct ZeroCount {
  double from_zeros = 0.0;    // sign-change zeros, endpoint zeros weighted 1/2
  double from_formula = 0.0;  // (T/pi) log(q/pi) + S~(T) + gamma integral / 2 pi
};

// N(T, chi) two ways. NumericalError when they differ by 1e-6 or more.
ZeroCount count_zeros(double T, const DirichletCharacter& chi);
// Formula side only, given S~(T).
double zero_count_formula(double T, std::uint32_t q, int gamma_shift, double tilde_s);

// Zeros of L(s, chi) inside sigma_lo < Re s < sigma_hi, |Im s| < T, by the argument
// principle along the rectangle boundary.
int rectangle_zero_count(const DirichletCharacter& chi, double sigma_lo, double sigma_hi, double T);

}  // namespace dlarg
