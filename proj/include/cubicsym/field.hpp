#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cubicsym {

/// Z/qZ for a prime q < 2^31, elements kept as least non-negative residues.
class PrimeField {
public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t q = 32003) : q_(q) {
    if (q < 2 || q >= (1u << 31)) throw std::invalid_argument("prime field modulus out of range");
  }

  std::uint32_t modulus() const { return q_; }
  std::uint32_t characteristic() const { return q_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % q_; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + q_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = q_, nr = a;
    while (nr != 0) {
      std::int64_t quot = r / nr;
      std::int64_t tmp = t - quot * nt;
      t = nt;
      nt = tmp;
      tmp = r - quot * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += q_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<value_type>(r);
  }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), q_);
    return static_cast<value_type>(r.get_ui());
  }
  /// Throws std::domain_error when the denominator vanishes modulo q.
  value_type from_rational(const mpq_class& v) const {
    value_type den = from_integer(v.get_den());
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    return div(from_integer(v.get_num()), den);
  }

  std::string to_string(value_type a) const { return std::to_string(a); }
  /// Canonical representative as a rational integer in [0, q).
  mpq_class to_rational(value_type a) const { return mpq_class(static_cast<unsigned long>(a)); }

  std::string name() const { return "F" + std::to_string(q_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.q_ == b.q_; }

private:
  std::uint32_t q_;
};

/// The rationals with exact GMP arithmetic.
class RationalField {
public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in rational field");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_integer(const mpz_class& v) const { return mpq_class(v); }
  value_type from_rational(const mpq_class& v) const { return v; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  mpq_class to_rational(const value_type& a) const { return a; }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace cubicsym
