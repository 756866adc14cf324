#include "dlarg/characters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dlarg/arith.hpp"
#include "dlarg/error.hpp"

namespace dlarg {

namespace {
constexpr std::uint32_t kMaxModulus = 100'000;
}

CharacterGroup::CharacterGroup(std::uint32_t q) : q_(q) {
  if (q < 3 || !is_prime(q))
    throw DomainError("characters: modulus " + std::to_string(q) + " is not an odd prime");
  if (q > kMaxModulus)
    throw DomainError("characters: modulus " + std::to_string(q) + " above table cap");
  g_ = static_cast<std::uint32_t>(least_primitive_root(q));
  dlog_.assign(q, -1);
  powers_.resize(q - 1);
  std::uint64_t x = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    powers_[k] = static_cast<std::uint32_t>(x);
    dlog_[x] = static_cast<std::int32_t>(k);
    x = x * g_ % q;
  }
  roots_.resize(q - 1);
  for (std::uint32_t m = 0; m < q - 1; ++m) {
    // Exact values on the axes keep real characters exactly real.
    const std::uint32_t n = q - 1;
    if (m == 0) roots_[m] = {1.0, 0.0};
    else if (2 * m == n) roots_[m] = {-1.0, 0.0};
    else if (4 * m == n) roots_[m] = {0.0, 1.0};
    else if (4 * m == 3 * n) roots_[m] = {0.0, -1.0};
    else roots_[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
  }
}

std::int32_t CharacterGroup::index_of(std::int64_t n) const {
  const auto qi = static_cast<std::int64_t>(q_);
  const std::int64_t r = ((n % qi) + qi) % qi;
  return dlog_[static_cast<std::size_t>(r)];
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterGroup> group,
                                       std::uint32_t j)
    : group_(std::move(group)), j_(j) {
  if (j_ >= group_->order()) throw DomainError("character index out of range");
}

cplx DirichletCharacter::operator()(std::int64_t n) const {
  const std::int32_t k = group_->index_of(n);
  if (k < 0) return {0.0, 0.0};
  const std::uint64_t m = static_cast<std::uint64_t>(j_) * static_cast<std::uint64_t>(k);
  return group_->root(static_cast<std::uint32_t>(m % group_->order()));
}

DirichletCharacter DirichletCharacter::conj() const {
  const std::uint32_t n = group_->order();
  return DirichletCharacter(group_, (n - j_) % n);
}

std::vector<DirichletCharacter> enumerate_characters(std::uint32_t q) {
  auto group = std::make_shared<const CharacterGroup>(q);
  std::vector<DirichletCharacter> out;
  out.reserve(q - 1);
  for (std::uint32_t j = 0; j < q - 1; ++j) out.emplace_back(group, j);
  return out;
}

std::int64_t orthogonality_sum(std::uint32_t q, std::int64_t n) {
  if (q < 3 || !is_prime(q))
    throw DomainError("orthogonality_sum: " + std::to_string(q) + " is not an odd prime");
  const auto qi = static_cast<std::int64_t>(q);
  const std::int64_t r = ((n % qi) + qi) % qi;
  if (r == 0) return 0;
  if (r == 1) return qi - 2;
  return -1;
}

RootNumber root_number(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw DomainError("root_number: principal character");
  const std::uint32_t q = chi.modulus();
  cplx tau{0.0, 0.0};
  for (std::uint32_t a = 1; a < q; ++a)
    tau += chi(a) * std::polar(1.0, 2.0 * std::numbers::pi * a / q);
  const cplx i_pow = chi.gamma_shift() == 0 ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
  return {tau / (i_pow * std::sqrt(static_cast<double>(q))), tau};
}

}  // namespace dlarg
