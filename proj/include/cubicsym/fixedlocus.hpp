#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "eigenbasis.hpp"
#include "family.hpp"
#include "groebner.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace cubicsym {

struct Eigenspace {
  Residue character;
  std::vector<int> coords;
};

/// Coordinates grouped by exponent, ordered by character; `order` fixes the coordinate order inside each group.
inline std::vector<Eigenspace> eigen_decomposition(const Automorphism& aut,
                                                   const std::array<int, 6>& order = {0, 1, 2, 3, 4, 5}) {
  std::vector<Eigenspace> out;
  for (int i : order) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Eigenspace& s) { return s.character == aut.e(i); });
    if (it == out.end())
      out.push_back({aut.e(i), {i}});
    else
      it->coords.push_back(i);
  }
  std::sort(out.begin(), out.end(), [](const Eigenspace& x, const Eigenspace& y) { return x.character < y.character; });
  return out;
}

/// Invariant lines inside P(V_a) (diagonal, a == b) or joining P(V_a) and P(V_b) (cross, a < b).
struct Stratum {
  enum class Kind { diagonal, cross } kind = Kind::diagonal;
  Residue a = 0, b = 0;
  std::vector<int> source, target;

  std::string label() const {
    return kind == Kind::diagonal ? "diag(" + std::to_string(a) + ")"
                                  : "cross(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  /// Parameter count of each chart, in chart order.
  std::vector<int> chart_dimensions() const {
    std::vector<int> dims;
    const int da = static_cast<int>(source.size());
    if (kind == Kind::cross) {
      const int db = static_cast<int>(target.size());
      for (int ca = 0; ca < da; ++ca)
        for (int cb = 0; cb < db; ++cb) dims.push_back((da - 1 - ca) + (db - 1 - cb));
    } else {
      for (int p1 = 0; p1 < da; ++p1)
        for (int p2 = p1 + 1; p2 < da; ++p2) dims.push_back((da - 2 - p1) + (da - 1 - p2));
    }
    return dims;
  }
  int chart_count() const { return static_cast<int>(chart_dimensions().size()); }
};

/// Diagonal strata for eigenspaces of dimension >= 2, then cross strata, ordered by character pair.
inline std::vector<Stratum> strata_of(const std::vector<Eigenspace>& spaces) {
  std::vector<Stratum> out;
  for (std::size_t x = 0; x < spaces.size(); ++x) {
    if (spaces[x].coords.size() >= 2)
      out.push_back({Stratum::Kind::diagonal, spaces[x].character, spaces[x].character, spaces[x].coords, {}});
    for (std::size_t y = x + 1; y < spaces.size(); ++y)
      out.push_back({Stratum::Kind::cross, spaces[x].character, spaces[y].character, spaces[x].coords, spaces[y].coords});
  }
  std::sort(out.begin(), out.end(), [](const Stratum& s, const Stratum& t) { return std::tie(s.a, s.b) < std::tie(t.a, t.b); });
  return out;
}

namespace detail {

/// (p1, p2) pivot pairs of G(2, d) in chart order.
inline std::vector<std::pair<int, int>> pivot_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int p1 = 0; p1 < d; ++p1)
    for (int p2 = p1 + 1; p2 < d; ++p2) out.emplace_back(p1, p2);
  return out;
}

/// Point of P^{d-1} in the cell with first nonzero coordinate at `pivot`; free entries use variables from `next_var`.
template <class Field>
std::vector<Polynomial<Field>> cell_point(const Field& f, int nvars, int d, int pivot, int& next_var) {
  using P = Polynomial<Field>;
  std::vector<P> pt(d, P(f, nvars));
  pt[pivot] = P::constant(f, nvars, f.one());
  for (int k = pivot + 1; k < d; ++k) pt[k] = P::variable(f, nvars, next_var++);
  return pt;
}

template <class Field>
std::vector<Polynomial<Field>> embed(const std::vector<Polynomial<Field>>& local, const std::vector<int>& coords,
                                     const Field& f, int nvars) {
  std::vector<Polynomial<Field>> full(6, Polynomial<Field>(f, nvars));
  for (std::size_t k = 0; k < coords.size(); ++k) full[coords[k]] = local[k];
  return full;
}

}  // namespace detail

/// Coefficient conditions for lines of the stratum in one chart, over the field of T.
/// Throws std::logic_error if a coefficient of the wrong character is not identically zero.
template <class Field>
std::vector<Polynomial<Field>> stratum_ideal(const Polynomial<Field>& T, const Automorphism& aut, const Stratum& s,
                                             int chart) {
  if (chart < 0 || chart >= s.chart_count()) throw std::out_of_range("chart index out of range for stratum");
  const Field& f = T.field();
  const int nvars = s.chart_dimensions()[chart];
  int next = 0;
  std::vector<Polynomial<Field>> v, w;
  std::array<bool, 4> active{true, true, true, true};
  if (s.kind == Stratum::Kind::cross) {
    const int db = static_cast<int>(s.target.size());
    v = detail::embed(detail::cell_point(f, nvars, static_cast<int>(s.source.size()), chart / db, next), s.source, f, nvars);
    w = detail::embed(detail::cell_point(f, nvars, db, chart % db, next), s.target, f, nvars);
    // coefficient of s^{3-k} t^k has character (3-k) a + k b
    for (int k = 0; k < 4; ++k)
      active[k] = (static_cast<std::uint64_t>(3 - k) * s.a + static_cast<std::uint64_t>(k) * s.b) % aut.n() == aut.j();
  } else {
    const int d = static_cast<int>(s.source.size());
    auto [p1, p2] = detail::pivot_pairs(d)[chart];
    using P = Polynomial<Field>;
    std::vector<P> r1(d, P(f, nvars)), r2(d, P(f, nvars));
    r1[p1] = P::constant(f, nvars, f.one());
    for (int k = p1 + 1; k < d; ++k)
      if (k != p2) r1[k] = P::variable(f, nvars, next++);
    r2[p2] = P::constant(f, nvars, f.one());
    for (int k = p2 + 1; k < d; ++k) r2[k] = P::variable(f, nvars, next++);
    v = detail::embed(r1, s.source, f, nvars);
    w = detail::embed(r2, s.source, f, nvars);
  }
  auto coeffs = substitute_line(T, std::span<const Polynomial<Field>>(v), std::span<const Polynomial<Field>>(w));
  std::vector<Polynomial<Field>> gens;
  for (int k = 0; k < 4; ++k) {
    if (!active[k]) {
      if (!coeffs[k].is_zero()) throw std::logic_error("coefficient of the wrong character is not zero");
      continue;
    }
    if (!coeffs[k].is_zero()) gens.push_back(coeffs[k]);
  }
  return gens;
}

struct ChartResult {
  int dimension = -1;  // of the affine zero set in the chart
  std::optional<std::uint64_t> count;
};

struct StratumResult {
  Stratum stratum;
  int dimension = -1;
  std::optional<std::uint64_t> count;  // with multiplicity, when zero-dimensional
  std::vector<ChartResult> charts;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["stratum"] = stratum.label();
    j["kind"] = stratum.kind == Stratum::Kind::cross ? "cross" : "diagonal";
    j["characters"] = {stratum.a, stratum.b};
    j["dimension"] = dimension;
    j["count"] = count ? nlohmann::json(*count) : nlohmann::json(nullptr);
    return j;
  }
};

template <class Field>
ChartResult solve_chart(const std::vector<Polynomial<Field>>& gens, const Field& f, int nvars) {
  auto gb = buchberger<Field>(f, nvars, gens);
  ChartResult r;
  r.dimension = krull_dimension(gb);
  if (r.dimension <= 0) r.count = r.dimension < 0 ? std::optional<std::uint64_t>(0) : quotient_dimension(gb);
  return r;
}

inline void finish_stratum(StratumResult& r) {
  r.dimension = -1;
  std::uint64_t total = 0;
  bool finite = true;
  for (auto& c : r.charts) {
    r.dimension = std::max(r.dimension, c.dimension);
    if (c.count)
      total += *c.count;
    else
      finite = false;
  }
  r.count = finite ? std::optional<std::uint64_t>(total) : std::nullopt;
}

template <class Field>
StratumResult stratum_result(const Polynomial<Field>& T, const Automorphism& aut, const Stratum& s) {
  StratumResult r{s, -1, std::nullopt, {}};
  if (s.kind == Stratum::Kind::diagonal && s.source.size() == 2) {
    // the unique line of the plane P(V_a)
    auto gens = stratum_ideal(T, aut, s, 0);
    bool contained = gens.empty();
    r.charts.push_back({contained ? 0 : -1, contained ? 1u : 0u});
  } else {
    auto dims = s.chart_dimensions();
    for (int c = 0; c < static_cast<int>(dims.size()); ++c)
      r.charts.push_back(solve_chart(stratum_ideal(T, aut, s, c), T.field(), dims[c]));
  }
  finish_stratum(r);
  return r;
}

struct FixedLocusReport {
  std::string field;
  std::vector<StratumResult> strata;
  std::uint64_t isolated = 0;
  std::vector<int> positive_dimensions;  // one entry per positive-dimensional stratum
  std::string note;

  std::string summary() const {
    std::string s = std::to_string(isolated) + " points";
    for (int d : positive_dimensions) s += " + dim-" + std::to_string(d) + " stratum";
    return s;
  }
  const StratumResult* find(Stratum::Kind kind, Residue a, Residue b) const {
    for (auto& r : strata)
      if (r.stratum.kind == kind && r.stratum.a == a && r.stratum.b == b) return &r;
    return nullptr;
  }
  /// Same dimension and count on every stratum.
  bool same_counts(const FixedLocusReport& o) const {
    if (strata.size() != o.strata.size()) return false;
    for (std::size_t k = 0; k < strata.size(); ++k)
      if (strata[k].stratum.label() != o.strata[k].stratum.label() || strata[k].dimension != o.strata[k].dimension ||
          strata[k].count != o.strata[k].count)
        return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["field"] = field;
    j["isolated"] = isolated;
    j["positive_dimensional"] = positive_dimensions;
    j["summary"] = summary();
    nlohmann::json arr = nlohmann::json::array();
    for (auto& s : strata) arr.push_back(s.to_json());
    j["strata"] = arr;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

inline void finish_report(FixedLocusReport& rep) {
  rep.isolated = 0;
  rep.positive_dimensions.clear();
  for (auto& s : rep.strata) {
    if (s.dimension == 0 && s.count) rep.isolated += *s.count;
    if (s.dimension > 0) rep.positive_dimensions.push_back(s.dimension);
  }
}

struct FixedLocusOptions {
  std::array<int, 6> coordinate_order{0, 1, 2, 3, 4, 5};
  unsigned threads = default_concurrency();
};

/// f-invariant lines on X = (T = 0), stratum by stratum.
template <class Field>
FixedLocusReport fixed_lines_report(const Polynomial<Field>& T, const Automorphism& aut,
                                    const FixedLocusOptions& opt = {}) {
  if (T.nvars() != 6 || T.is_zero() || !T.is_homogeneous(3)) throw std::invalid_argument("expected a cubic form in six variables");
  FixedLocusReport rep;
  rep.field = T.field().name();
  if (aut.projective_order() == 1) {
    // every line is fixed; F(X) has dimension 4
    rep.strata.push_back({Stratum{Stratum::Kind::diagonal, aut.e(0), aut.e(0), {0, 1, 2, 3, 4, 5}, {}}, 4, std::nullopt, {}});
    rep.note = "identity action: every line of X is fixed";
    finish_report(rep);
    return rep;
  }
  auto strata = strata_of(eigen_decomposition(aut, opt.coordinate_order));
  rep.strata = parallel_map(strata.size(), [&](std::size_t k) { return stratum_result(T, aut, strata[k]); }, opt.threads);
  finish_report(rep);
  return rep;
}

/// Number of lines (with multiplicity) on the cubic T in d <= 4 variables, or nullopt if infinitely many.
template <class Field>
std::optional<std::uint64_t> lines_in_subspace_count(const Polynomial<Field>& T_restricted, int d) {
  if (d < 2 || d > 4 || T_restricted.nvars() != d) throw std::invalid_argument("expected a cubic in 2 to 4 variables");
  const Field& f = T_restricted.field();
  if (T_restricted.is_zero()) return d == 2 ? std::optional<std::uint64_t>(1) : std::nullopt;
  auto T6 = T_restricted.with_nvars(6);
  std::vector<int> coords(d);
  std::iota(coords.begin(), coords.end(), 0);
  Stratum s{Stratum::Kind::diagonal, 0, 0, coords, {}};
  auto aut = Automorphism::identity();
  if (d == 2) return stratum_ideal(T6, aut, s, 0).empty() ? 1 : 0;
  StratumResult r{s, -1, std::nullopt, {}};
  auto dims = s.chart_dimensions();
  for (int c = 0; c < static_cast<int>(dims.size()); ++c) r.charts.push_back(solve_chart(stratum_ideal(T6, aut, s, c), f, dims[c]));
  finish_stratum(r);
  return r.dimension <= 0 ? r.count : std::nullopt;
}

enum class CertificationStatus { certified, not_certified };

struct FixedLocusCertificate {
  FixedLocusReport primary;
  FixedLocusReport secondary;
  CertificationStatus status = CertificationStatus::not_certified;

  bool certified() const { return status == CertificationStatus::certified; }
  nlohmann::json to_json() const {
    nlohmann::json j = primary.to_json();
    j["status"] = certified() ? "certified" : "not-certified";
    j["fields"] = {primary.field, secondary.field};
    if (!certified()) j["secondary"] = secondary.to_json();
    return j;
  }
};

/// Same integer-coefficient cubic reduced at two primes; disagreement is not-certified.
inline FixedLocusCertificate fixed_lines_two_prime(const Polynomial<RationalField>& T, const Automorphism& aut,
                                                   std::uint32_t q1 = kDefaultPrime, std::uint32_t q2 = kSecondPrime,
                                                   const FixedLocusOptions& opt = {}) {
  FixedLocusCertificate c;
  c.primary = fixed_lines_report(change_field(T, PrimeField(q1)), aut, opt);
  c.secondary = fixed_lines_report(change_field(T, PrimeField(q2)), aut, opt);
  c.status = c.primary.same_counts(c.secondary) ? CertificationStatus::certified : CertificationStatus::not_certified;
  return c;
}

/// Pairs {a, b} of coordinates with no basis monomial supported inside {a, b}; for six distinct
/// exponents these are exactly the invariant lines P_a P_b contained in a general member.
inline std::uint64_t distinct_eigenvalue_line_count(const std::vector<ExponentVector>& monomials) {
  std::uint64_t count = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      bool supported = false;
      for (auto& v : monomials) {
        bool inside = true;
        for (int i = 0; i < 6; ++i)
          if (v.a[i] && i != a && i != b) inside = false;
        if (inside) supported = true;
      }
      if (!supported) ++count;
    }
  return count;
}

}  // namespace cubicsym
