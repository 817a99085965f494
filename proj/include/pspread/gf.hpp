#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pspread/errors.hpp"

namespace pspread::gf {

// A field element of F_q, encoded as an integer v in [0, q) whose base-p
// digits are the coefficients of the element w.r.t. the power basis
// 1, z, ..., z^{e-1} of F_q over F_p.
using Elem = std::uint16_t;

// Polynomial over a field, coefficients in ascending degree order.
using Poly = std::vector<Elem>;

struct PrimePower {
  unsigned p;
  unsigned e;
};

// Decomposes q = p^e with p prime; nullopt if q is not a prime power.
std::optional<PrimePower> factor_prime_power(unsigned long long q);

// Exact arithmetic in F_q for q = p^e <= 2^16, backed by log/antilog tables
// (plus dense add/mul tables for small q). Immutable after construction and
// safe to share across threads; all operations are pure.
class Field {
 public:
  static constexpr unsigned kMaxOrder = 1u << 16;
  static constexpr unsigned kDenseTableCap = 256;

  explicit Field(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }

  // Monic irreducible polynomial defining F_q over F_p (degree e,
  // coefficients ascending). Empty for prime fields.
  const Poly& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    return dense_ ? add_tab_[size_t(a) * q_ + b] : add_generic(a, b);
  }
  Elem sub(Elem a, Elem b) const {
    return dense_ ? sub_tab_[size_t(a) * q_ + b] : add_generic(a, neg(b));
  }
  Elem neg(Elem a) const { return neg_tab_[a]; }
  Elem mul(Elem a, Elem b) const {
    if (dense_) return mul_tab_[size_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_tab_[(unsigned(log_tab_[a]) + log_tab_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const;
  // a^k, with a^0 = 1 and negative k meaning powers of the inverse.
  Elem pow(Elem a, long long k) const;

  bool dense_tables() const { return dense_; }
  // Row of the dense multiplication table for a fixed left factor.
  const Elem* mul_row(Elem a) const { return mul_tab_.data() + size_t(a) * q_; }
  const Elem* add_row(Elem a) const { return add_tab_.data() + size_t(a) * q_; }
  const Elem* sub_lhs_row(Elem a) const { return sub_tab_.data() + size_t(a) * q_; }

 private:
  Elem add_generic(Elem a, Elem b) const;

  unsigned q_, p_, e_;
  Poly modulus_;
  bool dense_;
  std::vector<Elem> exp_tab_, log_tab_;  // discrete log w.r.t. a fixed generator
  std::vector<Elem> neg_tab_, inv_tab_;
  std::vector<Elem> add_tab_, sub_tab_, mul_tab_;  // q*q, only when dense_
};

using FieldPtr = std::shared_ptr<const Field>;

// Builds F_q. Throws NotAPrimePower / TooLarge.
FieldPtr make_field(unsigned q);

// Lexicographically smallest monic irreducible polynomial of degree m over
// the given field, comparing coefficient tuples (c_{m-1},...,c_0) as base-q
// integers in ascending order. Irreducibility is certified by the standard
// criterion: x^{q^m} == x (mod f) and gcd(x^{q^{m/l}} - x, f) = 1 for every
// prime l dividing m.
Poly find_irreducible(const Field& f, unsigned m);

// F_{q^m} as an F_q-vector space with basis 1, z, ..., z^{m-1}; elements are
// coefficient vectors over F_q. Used by the spread construction, where the
// required extension orders exceed the table-backed cap.
class ExtField {
 public:
  using Coeffs = std::vector<Elem>;  // length m

  ExtField(FieldPtr base, unsigned m);

  const Field& base() const { return *base_; }
  unsigned m() const { return m_; }
  const Poly& modulus() const { return modulus_; }

  Coeffs zero() const { return Coeffs(m_, 0); }
  Coeffs one() const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs scalar_mul(Elem c, const Coeffs& a) const;
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  // a *= z, reducing by the modulus.
  void mul_by_z_inplace(Coeffs& a) const;
  // Advances to the next element in ascending coefficient-encoding order;
  // returns false (and resets to zero) after the largest element.
  bool next_element(Coeffs& a) const;

 private:
  FieldPtr base_;
  unsigned m_;
  Poly modulus_;
};

}  // namespace pspread::gf
