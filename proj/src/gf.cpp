#include "pspread/gf.hpp"

#include <algorithm>
#include <cstddef>

namespace pspread::gf {

namespace {

std::vector<unsigned> prime_factors(unsigned long long n) {
  std::vector<unsigned> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(unsigned(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(unsigned(n));
  return out;
}

void to_digits(unsigned v, unsigned p, unsigned e, Elem* out) {
  for (unsigned i = 0; i < e; ++i) {
    out[i] = Elem(v % p);
    v /= p;
  }
}

unsigned from_digits(const Elem* d, unsigned p, unsigned e) {
  unsigned v = 0;
  for (unsigned i = e; i-- > 0;) v = v * p + d[i];
  return v;
}

// ---- polynomial arithmetic over an arbitrary Field (coefficients ascending)

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Field& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  poly_trim(a);
  return a;
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

// a mod m, m monic.
Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  poly_trim(a);
  while (a.size() >= m.size()) {
    Elem lead = a.back();
    size_t shift = a.size() - m.size();
    if (lead != 0) {
      for (size_t i = 0; i + 1 < m.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  return poly_mod(f, poly_mul(f, a, b), m);
}

Poly poly_powmod(const Field& f, Poly base, unsigned long long k, const Poly& m) {
  Poly r{1};
  base = poly_mod(f, std::move(base), m);
  while (k > 0) {
    if (k & 1) r = poly_mulmod(f, r, base, m);
    base = poly_mulmod(f, base, base, m);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(const Field& f, Poly a, const Poly& b0) {
  Poly b = b0;
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // make b monic before reducing
    Elem lead_inv = f.inv(b.back());
    for (auto& c : b) c = f.mul(c, lead_inv);
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Field& f, const Poly& cand, unsigned m) {
  if (m == 1) return true;
  auto lfactors = prime_factors(m);
  const Poly x{0, 1};
  // Frobenius iterates g_j = x^(q^j) mod cand, computed incrementally.
  Poly g = poly_mod(f, x, cand);
  for (unsigned j = 1; j <= m; ++j) {
    g = poly_powmod(f, g, f.q(), cand);
    bool check_gcd = false;
    for (unsigned l : lfactors)
      if (j == m / l) check_gcd = true;
    if (check_gcd) {
      Poly d = poly_gcd(f, poly_sub(f, g, x), cand);
      if (d.size() != 1) return false;
    }
  }
  // after the loop g = x^(q^m) mod cand; g must equal x
  Poly gx = poly_sub(f, g, x);
  return gx.empty();
}

}  // namespace

std::optional<PrimePower> factor_prime_power(unsigned long long q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  unsigned p = f[0];
  unsigned e = 0;
  while (q > 1) {
    if (q % p != 0) return std::nullopt;
    q /= p;
    ++e;
  }
  return PrimePower{p, e};
}

Field::Field(unsigned q) : q_(q) {
  if (q > kMaxOrder) throw TooLarge("field order " + std::to_string(q) + " exceeds 2^16");
  auto pp = factor_prime_power(q);
  if (!pp) throw NotAPrimePower(std::to_string(q) + " is not a prime power");
  p_ = pp->p;
  e_ = pp->e;

  // slow reference multiplication used to bootstrap the tables
  std::unique_ptr<Field> prime_field;
  if (e_ > 1) {
    prime_field = std::make_unique<Field>(p_);
    modulus_ = find_irreducible(*prime_field, e_);
  }
  auto slow_mul = [&](unsigned a, unsigned b) -> unsigned {
    if (e_ == 1) return (a * b) % p_;
    Poly pa(e_), pb(e_);
    to_digits(a, p_, e_, pa.data());
    to_digits(b, p_, e_, pb.data());
    Poly prod = poly_mod(*prime_field, poly_mul(*prime_field, pa, pb), modulus_);
    prod.resize(e_, 0);
    return from_digits(prod.data(), p_, e_);
  };

  neg_tab_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    Elem d[32];
    to_digits(a, p_, e_, d);
    for (unsigned i = 0; i < e_; ++i) d[i] = Elem(d[i] == 0 ? 0 : p_ - d[i]);
    neg_tab_[a] = Elem(from_digits(d, p_, e_));
  }

  // log/antilog tables from the smallest primitive element
  exp_tab_.assign(q_ - 1, 0);
  log_tab_.assign(q_, 0);
  {
    auto slow_pow = [&](unsigned a, unsigned k) {
      unsigned r = 1;
      while (k > 0) {
        if (k & 1) r = slow_mul(r, a);
        a = slow_mul(a, a);
        k >>= 1;
      }
      return r;
    };
    unsigned gen = 1;
    if (q_ > 2) {
      auto lf = prime_factors(q_ - 1);
      for (unsigned g = 2; g < q_; ++g) {
        bool primitive = true;
        for (unsigned l : lf)
          if (slow_pow(g, (q_ - 1) / l) == 1) {
            primitive = false;
            break;
          }
        if (primitive) {
          gen = g;
          break;
        }
      }
    }
    unsigned acc = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
      exp_tab_[i] = Elem(acc);
      log_tab_[acc] = Elem(i);
      acc = slow_mul(acc, gen);
    }
  }

  inv_tab_.resize(q_);
  inv_tab_[0] = 0;  // guarded by inv()
  for (unsigned a = 1; a < q_; ++a)
    inv_tab_[a] = exp_tab_[(q_ - 1 - log_tab_[a]) % (q_ - 1)];

  dense_ = q_ <= kDenseTableCap;
  if (dense_) {
    add_tab_.resize(size_t(q_) * q_);
    sub_tab_.resize(size_t(q_) * q_);
    mul_tab_.resize(size_t(q_) * q_);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        add_tab_[size_t(a) * q_ + b] = add_generic(Elem(a), Elem(b));
        sub_tab_[size_t(a) * q_ + b] = add_generic(Elem(a), neg_tab_[b]);
        mul_tab_[size_t(a) * q_ + b] = Elem(slow_mul(a, b));
      }
  }
}

Elem Field::add_generic(Elem a, Elem b) const {
  if (e_ == 1) {
    unsigned s = unsigned(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem da[32], db[32];
  to_digits(a, p_, e_, da);
  to_digits(b, p_, e_, db);
  for (unsigned i = 0; i < e_; ++i) {
    unsigned s = unsigned(da[i]) + db[i];
    da[i] = Elem(s >= p_ ? s - p_ : s);
  }
  return Elem(from_digits(da, p_, e_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  return inv_tab_[a];
}

Elem Field::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  if (a == 0) return k == 0 ? Elem(1) : Elem(0);
  if (q_ == 2) return 1;  // a == 1
  unsigned long long r = (unsigned long long)(k) % (q_ - 1);
  return exp_tab_[(unsigned long long)(log_tab_[a]) * r % (q_ - 1)];
}

FieldPtr make_field(unsigned q) { return std::make_shared<const Field>(q); }

Poly find_irreducible(const Field& f, unsigned m) {
  if (m < 1) throw BadParams("find_irreducible: degree must be >= 1");
  const unsigned q = f.q();
  // Candidates x^m + c_{m-1} x^{m-1} + ... + c_0, enumerated by the value
  // of (c_{m-1},...,c_0) as a base-q integer, ascending.
  Poly cand(m + 1, 0);
  cand[m] = 1;
  for (;;) {
    if (is_irreducible(f, cand, m)) return cand;
    // odometer increment on (c_0, c_1, ...): c_0 is the least significant
    unsigned i = 0;
    while (i < m && cand[i] == q - 1) {
      cand[i] = 0;
      ++i;
    }
    if (i == m) throw Error("find_irreducible: exhausted candidates");  // unreachable
    ++cand[i];
  }
}

ExtField::ExtField(FieldPtr base, unsigned m)
    : base_(std::move(base)), m_(m), modulus_(find_irreducible(*base_, m)) {
  if (m < 1) throw BadParams("ExtField: degree must be >= 1");
}

ExtField::Coeffs ExtField::one() const {
  Coeffs a(m_, 0);
  a[0] = 1;
  return a;
}

ExtField::Coeffs ExtField::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs c(m_);
  for (unsigned i = 0; i < m_; ++i) c[i] = base_->add(a[i], b[i]);
  return c;
}

ExtField::Coeffs ExtField::scalar_mul(Elem c, const Coeffs& a) const {
  Coeffs r(m_);
  for (unsigned i = 0; i < m_; ++i) r[i] = base_->mul(c, a[i]);
  return r;
}

void ExtField::mul_by_z_inplace(Coeffs& a) const {
  Elem carry = a[m_ - 1];
  for (unsigned i = m_ - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  if (carry != 0)
    for (unsigned i = 0; i < m_; ++i)
      a[i] = base_->sub(a[i], base_->mul(carry, modulus_[i]));
}

ExtField::Coeffs ExtField::mul(const Coeffs& a, const Coeffs& b) const {
  // schoolbook product, then reduce via repeated z-shifts of a
  Coeffs acc(m_, 0);
  Coeffs shifted = a;
  for (unsigned j = 0; j < m_; ++j) {
    if (b[j] != 0)
      for (unsigned i = 0; i < m_; ++i)
        acc[i] = base_->add(acc[i], base_->mul(b[j], shifted[i]));
    if (j + 1 < m_) mul_by_z_inplace(shifted);
  }
  return acc;
}

bool ExtField::next_element(Coeffs& a) const {
  const unsigned q = base_->q();
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] + 1u < q) {
      ++a[i];
      return true;
    }
    a[i] = 0;
  }
  return false;
}

}  // namespace pspread::gf
