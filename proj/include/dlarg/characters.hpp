#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace dlarg {

using cplx = std::complex<double>;

// Shared per-modulus data: discrete-log table against the least primitive root
// and the (q-1)-th roots of unity. Immutable once built.
class CharacterGroup {
 public:
  explicit CharacterGroup(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  std::uint32_t generator() const { return g_; }
  std::uint32_t order() const { return q_ - 1; }
  // ind(n) with g^ind(n) = n mod q; undefined (returns -1) when q | n.
  std::int32_t index_of(std::int64_t n) const;
  // g^k mod q.
  std::uint32_t residue_at(std::uint32_t k) const { return powers_[k % order()]; }
  // e^{2 pi i m / (q-1)}
  const cplx& root(std::uint32_t m) const { return roots_[m % order()]; }

 private:
  std::uint32_t q_;
  std::uint32_t g_;
  std::vector<std::int32_t> dlog_;
  std::vector<std::uint32_t> powers_;
  std::vector<cplx> roots_;
};

// chi_j(g^k) = e^{2 pi i j k / (q-1)}; j = 0 is the principal character.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::uint32_t j);

  std::uint32_t modulus() const { return group_->modulus(); }
  std::uint32_t generator() const { return group_->generator(); }
  std::uint32_t index() const { return j_; }
  bool is_principal() const { return j_ == 0; }
  bool is_even() const { return j_ % 2 == 0; }
  // 1 iff chi(-1) = 1.
  int parity_delta() const { return is_even() ? 1 : 0; }
  // Shift a in the Gamma factor Gamma((s+a)/2): 0 for even, 1 for odd characters.
  int gamma_shift() const { return is_even() ? 0 : 1; }

  cplx operator()(std::int64_t n) const;
  DirichletCharacter conj() const;

  const std::shared_ptr<const CharacterGroup>& group() const { return group_; }

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::uint32_t j_;
};

std::vector<DirichletCharacter> enumerate_characters(std::uint32_t q);

inline cplx char_value(const DirichletCharacter& chi, std::int64_t n) { return chi(n); }

// Sum of chi(n) over non-principal chi mod q, from the orthogonality relation.
std::int64_t orthogonality_sum(std::uint32_t q, std::int64_t n);

struct RootNumber {
  cplx epsilon;
  cplx gauss_sum;
};

// tau(chi) = sum_a chi(a) e^{2 pi i a/q}; epsilon = tau / (i^a sqrt q).
RootNumber root_number(const DirichletCharacter& chi);

}  // namespace dlarg
