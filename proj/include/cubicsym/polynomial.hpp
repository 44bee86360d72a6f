#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "field.hpp"

namespace cubicsym {

inline constexpr int kMaxVars = 8;

/// Dense exponent vector over at most kMaxVars variables.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  Monomial() = default;
  Monomial(std::initializer_list<int> e) {
    if (e.size() > kMaxVars) throw std::invalid_argument("too many exponents");
    int i = 0;
    for (int v : e) exp[i++] = static_cast<std::uint8_t>(v);
  }

  static Monomial variable(int i) {
    Monomial m;
    m.exp[i] = 1;
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto v : exp) d += v;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = exp[i] + o.exp[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.exp[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - o.exp[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp[i] && b.exp[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison, x0 > x1 > ... ; negative, zero or positive.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  return 0;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

inline std::string monomial_to_string(const Monomial& m, int nvars) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

/// Sparse polynomial with nonzero coefficients, terms sorted by descending grlex.
template <class Field>
class Polynomial {
public:
  using value_type = typename Field::value_type;
  using Term = std::pair<Monomial, value_type>;

  Polynomial() = default;
  Polynomial(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  }

  static Polynomial constant(const Field& f, int nvars, const value_type& c) {
    Polynomial p(f, nvars);
    if (!f.is_zero(c)) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }
  static Polynomial variable(const Field& f, int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
    Polynomial p(f, nvars);
    p.terms_.emplace_back(Monomial::variable(i), f.one());
    return p;
  }
  static Polynomial monomial(const Field& f, int nvars, const Monomial& m, const value_type& c) {
    Polynomial p(f, nvars);
    if (!f.is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(const Field& f, int nvars, std::vector<Term> terms) {
    Polynomial p(f, nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = f.add(p.terms_.back().second, t.second);
        if (f.is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!f.is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  bool is_homogeneous(int degree) const {
    for (auto& t : terms_)
      if (t.first.degree() != degree) return false;
    return true;
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  value_type coefficient(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.first == m) return t.second;
    return field_.zero();
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = field_.neg(t.second);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_, nvars_);
    std::map<Monomial, value_type, GrlexGreater> acc;
    for (auto& a : terms_)
      for (auto& b : o.terms_) {
        auto m = a.first * b.first;
        auto c = field_.mul(a.second, b.second);
        auto [it, inserted] = acc.try_emplace(m, c);
        if (!inserted) it->second = field_.add(it->second, c);
      }
    Polynomial r(field_, nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!field_.is_zero(c)) r.terms_.emplace_back(m, c);
    return r;
  }

  Polynomial scaled(const value_type& c) const {
    if (field_.is_zero(c)) return Polynomial(field_, nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = field_.mul(t.second, c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(field_, nvars_, field_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Polynomial derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!t.first.exp[i]) continue;
      Monomial m = t.first;
      value_type c = field_.mul(t.second, field_.from_int(m.exp[i]));
      m.exp[i] -= 1;
      out.emplace_back(m, c);
    }
    return from_terms(field_, nvars_, std::move(out));
  }

  value_type evaluate(std::span<const value_type> point) const {
    if (static_cast<int>(point.size()) < nvars_) throw std::invalid_argument("evaluation point too short");
    value_type sum = field_.zero();
    for (auto& t : terms_) {
      value_type v = t.second;
      for (int i = 0; i < nvars_; ++i)
        if (t.first.exp[i]) v = field_.mul(v, field_.pow(point[i], t.first.exp[i]));
      sum = field_.add(sum, v);
    }
    return sum;
  }

  /// Replaces x_i by images[i]; images live in a common ring.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    if (images.empty()) return *this;
    const Field& f = images[0].field();
    int target_vars = images[0].nvars();
    Polynomial result(f, target_vars);
    for (auto& t : terms_) {
      Polynomial acc = constant(f, target_vars, t.second);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < t.first.exp[i]; ++k) acc = acc * images[i];
      result = result + acc;
    }
    return result;
  }

  /// x_i -> x_{perm[i]}.
  Polynomial permuted(std::span<const int> perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < nvars_; ++i) m.exp[perm[i]] = t.first.exp[i];
      out.emplace_back(m, t.second);
    }
    return from_terms(field_, nvars_, std::move(out));
  }

  /// Same exponents in a different (possibly larger) ring of variables.
  Polynomial with_nvars(int nvars) const {
    for (auto& t : terms_)
      for (int i = nvars; i < kMaxVars; ++i)
        if (t.first.exp[i]) throw std::invalid_argument("cannot drop a variable in use");
    Polynomial r(*this);
    r.nvars_ = nvars;
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) s += " + ";
      auto& [m, c] = terms_[k];
      if (m.is_one()) {
        s += field_.to_string(c);
      } else {
        if (!field_.is_one(c)) s += field_.to_string(c) + "*";
        s += monomial_to_string(m, nvars_);
      }
    }
    return s;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
      std::vector<int> e(m.exp.begin(), m.exp.begin() + nvars_);
      arr.push_back({field_.to_string(c), e});
    }
    return arr;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomials over different fields");
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable sets");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(field_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, k = 0;
    while (i < terms_.size() || k < o.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (k == o.terms_.size()) cmp = 1;
      else cmp = grlex_compare(terms_[i].first, o.terms_[k].first);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        auto c = subtract ? field_.neg(o.terms_[k].second) : o.terms_[k].second;
        r.terms_.emplace_back(o.terms_[k].first, c);
        ++k;
      } else {
        auto c = subtract ? field_.sub(terms_[i].second, o.terms_[k].second)
                          : field_.add(terms_[i].second, o.terms_[k].second);
        if (!field_.is_zero(c)) r.terms_.emplace_back(terms_[i].first, c);
        ++i;
        ++k;
      }
    }
    return r;
  }

  Field field_{};
  int nvars_ = 0;
  std::vector<Term> terms_;
};

template <class Field>
std::vector<Polynomial<Field>> jacobian(const Polynomial<Field>& T) {
  std::vector<Polynomial<Field>> out;
  out.reserve(T.nvars());
  for (int i = 0; i < T.nvars(); ++i) out.push_back(T.derivative(i));
  return out;
}

/// Coefficients of s^3, s^2 t, s t^2, t^3 in T(s*v + t*w); index = power of t.
template <class Field>
std::array<Polynomial<Field>, 4> substitute_line(const Polynomial<Field>& T,
                                                 std::span<const Polynomial<Field>> v,
                                                 std::span<const Polynomial<Field>> w) {
  if (static_cast<int>(v.size()) != T.nvars() || static_cast<int>(w.size()) != T.nvars())
    throw std::invalid_argument("line points must have one coordinate per variable");
  if (!T.is_homogeneous(3) || T.is_zero()) throw std::invalid_argument("substitute_line expects a cubic form");
  const Field& f = v[0].field();
  const int k = v[0].nvars();
  using P = Polynomial<Field>;
  std::array<P, 4> result{P(f, k), P(f, k), P(f, k), P(f, k)};
  for (auto& [m, c] : T.terms()) {
    std::array<P, 4> acc{P::constant(f, k, f.from_rational(T.field().to_rational(c))), P(f, k), P(f, k), P(f, k)};
    for (int i = 0; i < T.nvars(); ++i)
      for (int rep = 0; rep < m.exp[i]; ++rep) {
        std::array<P, 4> next{P(f, k), P(f, k), P(f, k), P(f, k)};
        for (int d = 0; d < 4; ++d) {
          if (acc[d].is_zero()) continue;
          if (!v[i].is_zero()) next[d] = next[d] + acc[d] * v[i];
          if (d + 1 < 4 && !w[i].is_zero()) next[d + 1] = next[d + 1] + acc[d] * w[i];
        }
        acc = std::move(next);
      }
    for (int d = 0; d < 4; ++d) result[d] = result[d] + acc[d];
  }
  return result;
}

/// Re-reads the coefficients of p as rationals and maps them into another field.
template <class To, class From>
Polynomial<To> change_field(const Polynomial<From>& p, const To& field) {
  std::vector<typename Polynomial<To>::Term> terms;
  terms.reserve(p.size());
  for (auto& [m, c] : p.terms()) terms.emplace_back(m, field.from_rational(p.field().to_rational(c)));
  return Polynomial<To>::from_terms(field, p.nvars(), std::move(terms));
}

namespace detail {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  std::vector<std::pair<Monomial, mpq_class>> parse(int nvars) {
    std::vector<std::pair<Monomial, mpq_class>> out;
    skip_ws();
    if (at_end()) throw error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (!first) {
        if (peek() == '+') ++pos_;
        else if (peek() == '-') { sign = -sign; ++pos_; }
        else throw error("expected '+' or '-'");
        skip_ws();
      }
      while (!at_end() && (peek() == '-' || peek() == '+')) {
        if (peek() == '-') sign = -sign;
        ++pos_;
        skip_ws();
      }
      auto term = parse_term(nvars);
      if (sign < 0) term.second = -term.second;
      out.push_back(std::move(term));
      first = false;
      skip_ws();
    }
    return out;
  }

private:
  std::pair<Monomial, mpq_class> parse_term(int nvars) {
    mpq_class coef = 1;
    Monomial m;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= parse_number();
      } else if (c == 'x') {
        ++pos_;
        int idx = static_cast<int>(parse_uint());
        if (idx >= nvars) throw error("variable index out of range");
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_uint();
        }
        if (m.exp[idx] + e > 255) throw error("exponent too large");
        m.exp[idx] = static_cast<std::uint8_t>(m.exp[idx] + e);
      } else {
        throw error(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw error("empty term");
    coef.canonicalize();
    return {m, coef};
  }

  mpq_class parse_number() {
    mpz_class num{std::string(digits())};
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      mpz_class den{std::string(digits())};
      if (den == 0) throw error("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }
  unsigned parse_uint() {
    auto d = digits();
    if (d.size() > 6) throw error("integer too large");
    return static_cast<unsigned>(std::stoul(std::string(d)));
  }
  std::string_view digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected digits");
    return s_.substr(start, pos_ - start);
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "c*x0^a*x1^b + ..." with integer or p/q coefficients.
template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const Field& field, int nvars = 6) {
  detail::PolyParser parser(text);
  auto raw = parser.parse(nvars);
  std::vector<typename Polynomial<Field>::Term> terms;
  terms.reserve(raw.size());
  for (auto& [m, c] : raw) terms.emplace_back(m, field.from_rational(c));
  return Polynomial<Field>::from_terms(field, nvars, std::move(terms));
}

template <class Field>
Polynomial<Field> polynomial_from_json(const nlohmann::json& j, const Field& field, int nvars = 6) {
  std::vector<typename Polynomial<Field>::Term> terms;
  for (auto& item : j) {
    mpq_class c(item.at(0).get<std::string>());
    c.canonicalize();
    auto e = item.at(1).get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent array has wrong length");
    Monomial m;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
      m.exp[i] = static_cast<std::uint8_t>(e[i]);
    }
    terms.emplace_back(m, field.from_rational(c));
  }
  return Polynomial<Field>::from_terms(field, nvars, std::move(terms));
}

}  // namespace cubicsym
