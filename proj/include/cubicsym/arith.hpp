#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"

namespace cubicsym {

using Residue = std::uint32_t;
using Exponents = std::array<Residue, 6>;

inline Residue mod(std::int64_t a, Residue n) {
  std::int64_t r = a % static_cast<std::int64_t>(n);
  return static_cast<Residue>(r < 0 ? r + n : r);
}

/// Representative in (-n/2, n/2].
inline std::int64_t signed_residue(Residue r, Residue n) {
  return 2 * static_cast<std::int64_t>(r) > n ? static_cast<std::int64_t>(r) - n : r;
}

inline std::vector<Residue> units_mod(Residue n) {
  std::vector<Residue> u;
  for (Residue a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) u.push_back(a);
  if (n == 1) u.push_back(0);
  return u;
}

/// (p, m) with n = p^m, or (0, 0) when n is not a prime power; (1, 0) for n = 1.
inline std::pair<Residue, int> prime_power_of(Residue n) {
  if (n == 1) return {1, 0};
  Residue p = 2;
  while (n % p) ++p;
  int m = 0;
  Residue r = n;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  return r == 1 ? std::pair<Residue, int>{p, m} : std::pair<Residue, int>{0, 0};
}

/// A diagonal action diag(zeta^e_0, ..., zeta^e_5) of order n together with the character j of the cubic.
class Automorphism {
public:
  Automorphism() = default;

  static Automorphism from_order(Residue n, const std::array<std::int64_t, 6>& e, std::int64_t j) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    Automorphism a;
    a.n_ = n;
    for (int i = 0; i < 6; ++i) a.e_[i] = mod(e[i], n);
    a.j_ = mod(j, n);
    return a;
  }
  static Automorphism from_prime_power(Residue p, int m, const std::array<std::int64_t, 6>& e, std::int64_t j) {
    if (m < 0) throw std::invalid_argument("exponent m must be non-negative");
    if (m > 0 && !is_prime(p)) throw std::invalid_argument("p must be prime");
    std::uint64_t n = 1;
    for (int k = 0; k < m; ++k) {
      n *= p;
      if (n > (1u << 30)) throw std::invalid_argument("order too large");
    }
    return from_order(static_cast<Residue>(n), e, j);
  }
  static Automorphism identity() { return {}; }

  Residue n() const { return n_; }
  Residue p() const { return prime_power_of(n_).first; }
  int m() const { return prime_power_of(n_).second; }
  const Exponents& exponents() const { return e_; }
  Residue e(int i) const { return e_[i]; }
  Residue j() const { return j_; }

  bool is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [&](Residue v) { return v == e_[0]; });
  }
  /// e_0 + ... + e_5 = 2j (mod n).
  bool satisfies_symplectic_condition() const {
    std::uint64_t s = 0;
    for (auto v : e_) s += v;
    return s % n_ == (2ull * j_) % n_;
  }
  /// Order of the projective map.
  Residue projective_order() const {
    Residue g = n_;
    for (auto v : e_) g = std::gcd(g, mod(static_cast<std::int64_t>(v) - e_[0], n_));
    return n_ / g;
  }

  nlohmann::json to_json(bool signed_form = false) const {
    nlohmann::json j;
    auto [p, m] = prime_power_of(n_);
    if (p) {
      j["p"] = p;
      j["m"] = m;
    }
    j["n"] = n_;
    std::vector<std::int64_t> e;
    for (auto v : e_) e.push_back(signed_form ? signed_residue(v, n_) : v);
    j["e"] = e;
    j["j"] = signed_form ? signed_residue(j_, n_) : j_;
    return j;
  }
  static Automorphism from_json(const nlohmann::json& j) {
    auto e = j.at("e").get<std::vector<std::int64_t>>();
    if (e.size() != 6) throw std::invalid_argument("automorphism needs six exponents");
    std::array<std::int64_t, 6> ea{};
    std::copy(e.begin(), e.end(), ea.begin());
    std::int64_t jj = j.value("j", std::int64_t{0});
    if (j.contains("p")) {
      auto a = from_prime_power(j.at("p").get<Residue>(), j.value("m", 1), ea, jj);
      if (j.contains("n") && j.at("n").get<Residue>() != a.n()) throw std::invalid_argument("n disagrees with p^m");
      return a;
    }
    return from_order(j.at("n").get<Residue>(), ea, jj);
  }

  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + " e=(";
    for (int i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(signed_residue(e_[i], n_));
    return s + ") j=" + std::to_string(signed_residue(j_, n_));
  }

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) {
    return std::tie(a.n_, a.e_, a.j_) <=> std::tie(b.n_, b.e_, b.j_);
  }

private:
  Residue n_ = 1;
  Exponents e_{};
  Residue j_ = 0;
};

/// Coordinate permutation, choice of primitive root and rescaling of the linear lift.
struct SymmetryElement {
  std::array<int, 6> permutation{0, 1, 2, 3, 4, 5};
  Residue unit = 1;
  Residue shift = 0;
};

/// e_i -> u e_{sigma(i)} + c, j -> u j + 3c.
inline Automorphism apply(const SymmetryElement& g, const Automorphism& a) {
  const Residue n = a.n();
  std::array<std::int64_t, 6> e{};
  for (int i = 0; i < 6; ++i)
    e[i] = static_cast<std::int64_t>(g.unit) * a.e(g.permutation[i]) + g.shift;
  return Automorphism::from_order(n, e, static_cast<std::int64_t>(g.unit) * a.j() + 3ll * g.shift);
}

/// Shifts so that e_0 = 0 and drops a common factor of the exponents from the order.
/// Throws std::invalid_argument when the character is not divisible by that factor (no cubic has it).
inline Automorphism normalize(const Automorphism& a) {
  const Residue n = a.n();
  const Residue e0 = a.e(0);
  std::array<std::int64_t, 6> e{};
  for (int i = 0; i < 6; ++i) e[i] = mod(static_cast<std::int64_t>(a.e(i)) - e0, n);
  std::int64_t j = mod(static_cast<std::int64_t>(a.j()) - 3ll * e0, n);
  Residue d = n;
  for (auto v : e) d = std::gcd(d, static_cast<Residue>(v));
  if (d == 1) return Automorphism::from_order(n, e, j);
  if (j % d) throw std::invalid_argument("character is not a multiple of the common exponent factor");
  for (auto& v : e) v /= d;
  return Automorphism::from_order(n / d, e, j / d);
}

/// Lexicographically smallest (exponents, j) in the orbit under all symmetry elements.
/// For fixed unit u the best shift pins some coordinate to 0 and the best permutation sorts.
inline Automorphism canonicalize(const Automorphism& a) {
  const Residue n = a.n();
  bool have = false;
  Exponents best_e{};
  Residue best_j = 0;
  for (Residue u : units_mod(n)) {
    for (int k = 0; k < 6; ++k) {
      Exponents e;
      for (int i = 0; i < 6; ++i)
        e[i] = mod(static_cast<std::int64_t>(u) * (static_cast<std::int64_t>(a.e(i)) - a.e(k)), n);
      std::sort(e.begin(), e.end());
      Residue j = mod(static_cast<std::int64_t>(u) * (static_cast<std::int64_t>(a.j()) - 3ll * a.e(k)), n);
      if (!have || std::tie(e, j) < std::tie(best_e, best_j)) {
        best_e = e;
        best_j = j;
        have = true;
      }
    }
  }
  std::array<std::int64_t, 6> e{};
  std::copy(best_e.begin(), best_e.end(), e.begin());
  return Automorphism::from_order(n, e, best_j);
}

/// Product of commuting actions of coprime orders: residues reduce to a mod a.n and b mod b.n.
inline Automorphism compose_crt(const Automorphism& a, const Automorphism& b) {
  if (std::gcd(a.n(), b.n()) != 1) throw std::invalid_argument("compose_crt needs coprime orders");
  const std::uint64_t n = static_cast<std::uint64_t>(a.n()) * b.n();
  if (n > (1u << 30)) throw std::invalid_argument("composed order too large");
  // x = ra + a.n * t, with t = (rb - ra) * inv(a.n) mod b.n
  auto inv_an = [&]() -> std::int64_t {
    if (b.n() == 1) return 0;
    for (Residue t = 1; t < b.n(); ++t)
      if ((static_cast<std::uint64_t>(a.n()) * t) % b.n() == 1) return t;
    return 0;
  }();
  auto crt = [&](Residue ra, Residue rb) -> std::int64_t {
    std::int64_t t = mod((static_cast<std::int64_t>(rb) - ra) * inv_an, b.n());
    return ra + static_cast<std::int64_t>(a.n()) * t;
  };
  std::array<std::int64_t, 6> e{};
  for (int i = 0; i < 6; ++i) e[i] = crt(a.e(i), b.e(i));
  return Automorphism::from_order(static_cast<Residue>(n), e, crt(a.j(), b.j()));
}

}  // namespace cubicsym
