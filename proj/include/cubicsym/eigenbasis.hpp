#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "polynomial.hpp"

namespace cubicsym {

/// Exponent tuple of a cubic monomial in x0..x5.
struct ExponentVector {
  std::array<int, 6> a{};

  int degree() const {
    int d = 0;
    for (int v : a) d += v;
    return d;
  }
  Monomial monomial() const {
    Monomial m;
    for (int i = 0; i < 6; ++i) m.exp[i] = static_cast<std::uint8_t>(a[i]);
    return m;
  }
  static ExponentVector from_monomial(const Monomial& m) {
    ExponentVector v;
    for (int i = 0; i < 6; ++i) v.a[i] = m.exp[i];
    return v;
  }
  /// x_i^2 x_k, or x_i^3 when i == k.
  static ExponentVector square_times(int i, int k) {
    ExponentVector v;
    v.a[i] += 2;
    v.a[k] += 1;
    return v;
  }
  std::string to_string() const { return monomial_to_string(monomial(), 6); }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

/// Serialized order: graded lex with x0 > ... > x5, largest first.
inline bool basis_order(const ExponentVector& x, const ExponentVector& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx > dy;
  return x.a > y.a;
}

inline Residue character(const Automorphism& aut, const ExponentVector& v) {
  std::uint64_t s = 0;
  for (int i = 0; i < 6; ++i) s += static_cast<std::uint64_t>(aut.e(i)) * v.a[i];
  return static_cast<Residue>(s % aut.n());
}

inline Residue character(const Automorphism& aut, const Monomial& m) {
  return character(aut, ExponentVector::from_monomial(m));
}

/// All 56 cubic monomials in basis order.
inline const std::vector<ExponentVector>& lambda_all() {
  static const std::vector<ExponentVector> all = [] {
    std::vector<ExponentVector> out;
    ExponentVector v;
    for (v.a[0] = 3; v.a[0] >= 0; --v.a[0])
      for (v.a[1] = 3 - v.a[0]; v.a[1] >= 0; --v.a[1])
        for (v.a[2] = 3 - v.a[0] - v.a[1]; v.a[2] >= 0; --v.a[2])
          for (v.a[3] = 3 - v.a[0] - v.a[1] - v.a[2]; v.a[3] >= 0; --v.a[3])
            for (v.a[4] = 3 - v.a[0] - v.a[1] - v.a[2] - v.a[3]; v.a[4] >= 0; --v.a[4]) {
              v.a[5] = 3 - v.a[0] - v.a[1] - v.a[2] - v.a[3] - v.a[4];
              out.push_back(v);
            }
    return out;
  }();
  return all;
}

struct FamilyBasis {
  Automorphism aut;
  Residue j = 0;
  std::vector<ExponentVector> monomials;

  bool empty() const { return monomials.empty(); }
  std::size_t size() const { return monomials.size(); }
  bool contains(const ExponentVector& v) const {
    return std::find(monomials.begin(), monomials.end(), v) != monomials.end();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < monomials.size(); ++k) s += (k ? ", " : "") + monomials[k].to_string();
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["aut"] = aut.to_json();
    out["j"] = j;
    nlohmann::json mons = nlohmann::json::array();
    for (auto& v : monomials) mons.push_back(v.a);
    out["monomials"] = mons;
    return out;
  }
  /// Monomials are re-sorted; a missing list is recomputed from the character.
  static FamilyBasis from_json(const nlohmann::json& in);
};

inline FamilyBasis lambda_j(const Automorphism& aut, Residue j) {
  FamilyBasis b{aut, static_cast<Residue>(j % aut.n()), {}};
  for (auto& v : lambda_all())
    if (character(aut, v) == b.j) b.monomials.push_back(v);
  return b;
}

/// Basis of the automorphism's own character.
inline FamilyBasis lambda_j(const Automorphism& aut) { return lambda_j(aut, aut.j()); }

inline FamilyBasis FamilyBasis::from_json(const nlohmann::json& in) {
  Automorphism aut = Automorphism::from_json(in.at("aut"));
  Residue j = mod(in.contains("j") ? in.at("j").get<std::int64_t>() : aut.j(), aut.n());
  if (!in.contains("monomials")) return lambda_j(aut, j);
  FamilyBasis b{aut, j, {}};
  for (auto& item : in.at("monomials")) {
    auto e = item.get<std::vector<int>>();
    if (e.size() != 6) throw std::invalid_argument("monomial exponent must have six entries");
    ExponentVector v;
    std::copy(e.begin(), e.end(), v.a.begin());
    if (v.degree() != 3 || std::any_of(v.a.begin(), v.a.end(), [](int x) { return x < 0; }))
      throw std::invalid_argument("basis monomials must be cubic");
    b.monomials.push_back(v);
  }
  std::sort(b.monomials.begin(), b.monomials.end(), basis_order);
  b.monomials.erase(std::unique(b.monomials.begin(), b.monomials.end()), b.monomials.end());
  return b;
}

struct StarResult {
  bool holds = true;
  int violating_index = -1;  // first i with no x_i^2 x_k in the family
  explicit operator bool() const { return holds; }
};

/// For every i some x_i^2 x_k lies in the monomial set.
inline StarResult star_condition(const std::vector<ExponentVector>& monomials) {
  for (int i = 0; i < 6; ++i) {
    bool found = false;
    for (int k = 0; k < 6 && !found; ++k)
      found = std::find(monomials.begin(), monomials.end(), ExponentVector::square_times(i, k)) != monomials.end();
    if (!found) return {false, i};
  }
  return {};
}

/// 2 e_i + e_k = j (mod n) solvable in k for every i.
inline StarResult star_condition(const Automorphism& aut, Residue j) {
  const Residue n = aut.n();
  for (int i = 0; i < 6; ++i) {
    bool found = false;
    for (int k = 0; k < 6 && !found; ++k) found = (2ull * aut.e(i) + aut.e(k)) % n == j % n;
    if (!found) return {false, i};
  }
  return {};
}

inline std::vector<ExponentVector> intersect_bases(const FamilyBasis& b1, const FamilyBasis& b2) {
  std::vector<ExponentVector> out;
  for (auto& v : b1.monomials)
    if (b2.contains(v)) out.push_back(v);
  return out;
}

/// Member with independent uniform coefficients in [1, q-1] on exactly the basis monomials.
inline Polynomial<PrimeField> random_member(const std::vector<ExponentVector>& monomials, const PrimeField& field,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(1, field.modulus() - 1);
  std::vector<Polynomial<PrimeField>::Term> terms;
  for (auto& v : monomials) terms.emplace_back(v.monomial(), coef(rng));
  return Polynomial<PrimeField>::from_terms(field, 6, std::move(terms));
}

inline Polynomial<PrimeField> random_member(const FamilyBasis& basis, const PrimeField& field, std::uint64_t seed) {
  return random_member(basis.monomials, field, seed);
}

/// Sum of the basis monomials with the given integer coefficients, over any field.
template <class Field>
Polynomial<Field> member_with(const std::vector<ExponentVector>& monomials, const std::vector<std::int64_t>& coeffs,
                              const Field& field) {
  std::vector<typename Polynomial<Field>::Term> terms;
  for (std::size_t k = 0; k < monomials.size(); ++k) terms.emplace_back(monomials[k].monomial(), field.from_int(coeffs[k]));
  return Polynomial<Field>::from_terms(field, 6, std::move(terms));
}

/// f preserves X = (T = 0) with character j, and the induced action on F(X) is symplectic.
template <class Field>
bool is_symplectic_pair(const Automorphism& aut, const Polynomial<Field>& T) {
  if (T.nvars() != 6 || T.is_zero() || !T.is_homogeneous(3)) throw std::invalid_argument("expected a cubic form in six variables");
  for (auto& [m, c] : T.terms())
    if (character(aut, m) != aut.j()) return false;
  return aut.satisfies_symplectic_condition();
}

}  // namespace cubicsym
