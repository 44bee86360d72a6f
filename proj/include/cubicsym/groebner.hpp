#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace cubicsym {

struct MonomialOrder {
  enum class Kind { grevlex, lex };

  Kind kind = Kind::grevlex;
  /// priority[0] is the largest variable; empty means x0 > x1 > ...
  std::vector<int> priority;

  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }
  static MonomialOrder lex() { return {Kind::lex, {}}; }

  std::vector<int> resolved_priority(int nvars) const {
    if (priority.empty()) {
      std::vector<int> p(nvars);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }
    if (static_cast<int>(priority.size()) != nvars) throw std::invalid_argument("variable priority has wrong length");
    auto sorted = priority;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < nvars; ++i)
      if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
    return priority;
  }
};

namespace detail {

inline constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

/// Exponents packed one per byte (each < 128) in an order-dependent byte layout.
struct PackedMono {
  std::uint64_t bits = 0;
  std::uint16_t deg = 0;
  friend bool operator==(const PackedMono&, const PackedMono&) = default;
};

inline bool divides(PackedMono a, PackedMono b) {
  return a.deg <= b.deg && (((b.bits | kHighBits) - a.bits) & kHighBits) == kHighBits;
}
inline PackedMono mul(PackedMono a, PackedMono b) {
  PackedMono r{a.bits + b.bits, static_cast<std::uint16_t>(a.deg + b.deg)};
  if (r.bits & kHighBits) throw std::overflow_error("exponent exceeds 127 during Groebner computation");
  return r;
}
inline PackedMono quot(PackedMono a, PackedMono b) { return {a.bits - b.bits, static_cast<std::uint16_t>(a.deg - b.deg)}; }
inline PackedMono lcm(PackedMono a, PackedMono b) {
  PackedMono r;
  for (int k = 0; k < 8; ++k) {
    std::uint64_t x = (a.bits >> (8 * k)) & 0xff, y = (b.bits >> (8 * k)) & 0xff;
    std::uint64_t m = std::max(x, y);
    r.bits |= m << (8 * k);
    r.deg = static_cast<std::uint16_t>(r.deg + m);
  }
  return r;
}
inline bool coprime(PackedMono a, PackedMono b) {
  for (int k = 0; k < 8; ++k)
    if (((a.bits >> (8 * k)) & 0xff) && ((b.bits >> (8 * k)) & 0xff)) return false;
  return true;
}

/// Converts between the grlex-sorted Polynomial and order-sorted packed vectors.
template <class Field>
class OrderedRing {
public:
  using value_type = typename Field::value_type;
  using Term = std::pair<PackedMono, value_type>;
  using Poly = std::vector<Term>;

  OrderedRing(Field field, int nvars, const MonomialOrder& order)
      : field_(std::move(field)), nvars_(nvars), kind_(order.kind), priority_(order.resolved_priority(nvars)) {
    for (int k = 0; k < nvars_; ++k) {
      int pos = kind_ == MonomialOrder::Kind::lex ? 7 - k : k + 8 - nvars_;
      shift_[priority_[k]] = 8 * pos;
    }
  }

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }

  /// Positive when a > b.
  int compare(PackedMono a, PackedMono b) const {
    if (kind_ == MonomialOrder::Kind::lex) return a.bits == b.bits ? 0 : (a.bits > b.bits ? 1 : -1);
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    return a.bits == b.bits ? 0 : (a.bits < b.bits ? 1 : -1);
  }

  PackedMono pack(const Monomial& m) const {
    PackedMono p;
    for (int i = 0; i < nvars_; ++i) {
      if (m.exp[i] >= 128) throw std::overflow_error("exponent exceeds 127");
      p.bits |= static_cast<std::uint64_t>(m.exp[i]) << shift_[i];
      p.deg = static_cast<std::uint16_t>(p.deg + m.exp[i]);
    }
    return p;
  }
  Monomial unpack(PackedMono p) const {
    Monomial m;
    for (int i = 0; i < nvars_; ++i) m.exp[i] = static_cast<std::uint8_t>((p.bits >> shift_[i]) & 0xff);
    return m;
  }

  Poly to_internal(const Polynomial<Field>& f) const {
    Poly out;
    out.reserve(f.size());
    for (auto& [m, c] : f.terms()) out.emplace_back(pack(m), c);
    std::sort(out.begin(), out.end(), [this](const Term& a, const Term& b) { return compare(a.first, b.first) > 0; });
    return out;
  }
  Polynomial<Field> to_polynomial(const Poly& f) const {
    std::vector<typename Polynomial<Field>::Term> terms;
    terms.reserve(f.size());
    for (auto& [m, c] : f) terms.emplace_back(unpack(m), c);
    return Polynomial<Field>::from_terms(field_, nvars_, std::move(terms));
  }

  void make_monic(Poly& f) const {
    if (f.empty() || field_.is_one(f[0].second)) return;
    auto inv = field_.inv(f[0].second);
    for (auto& t : f) t.second = field_.mul(t.second, inv);
  }

  /// h[from..] - c * m * g, where g is monic; writes into out.
  void sub_mul(const Poly& h, std::size_t from, const value_type& c, PackedMono m, const Poly& g, Poly& out) const {
    out.clear();
    out.reserve(h.size() - from + g.size());
    std::size_t i = from, k = 0;
    while (i < h.size() || k < g.size()) {
      if (k == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      PackedMono gm = mul(g[k].first, m);
      int cmp = i == h.size() ? -1 : compare(h[i].first, gm);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.emplace_back(gm, field_.neg(field_.mul(c, g[k].second)));
        ++k;
      } else {
        auto v = field_.sub(h[i].second, field_.mul(c, g[k].second));
        if (!field_.is_zero(v)) out.emplace_back(gm, std::move(v));
        ++i;
        ++k;
      }
    }
  }

  /// Full reduction of f by the monic polynomials basis[idx] for idx in active.
  Poly reduce(Poly h, const std::vector<Poly>& basis, const std::vector<std::size_t>& active) const {
    Poly rem, scratch;
    std::size_t start = 0;
    while (start < h.size()) {
      const PackedMono lm = h[start].first;
      const Poly* divisor = nullptr;
      for (auto idx : active)
        if (divides(basis[idx][0].first, lm)) {
          divisor = &basis[idx];
          break;
        }
      if (!divisor) {
        rem.push_back(std::move(h[start]));
        ++start;
        continue;
      }
      auto c = h[start].second;
      sub_mul(h, start, c, quot(lm, (*divisor)[0].first), *divisor, scratch);
      std::swap(h, scratch);
      start = 0;
    }
    return rem;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    PackedMono l = lcm(f[0].first, g[0].first);
    Poly a;
    a.reserve(f.size());
    PackedMono mf = quot(l, f[0].first);
    for (auto& t : f) a.emplace_back(mul(t.first, mf), t.second);
    Poly out;
    sub_mul(a, 0, field_.one(), quot(l, g[0].first), g, out);
    return out;
  }

private:
  Field field_;
  int nvars_;
  MonomialOrder::Kind kind_;
  std::vector<int> priority_;
  std::array<int, kMaxVars> shift_{};
};

}  // namespace detail

/// Reduced Groebner basis with monic generators sorted by descending leading monomial.
template <class Field>
class GroebnerBasis {
public:
  GroebnerBasis(Field field, int nvars, MonomialOrder order, std::vector<Polynomial<Field>> gens,
                std::vector<Monomial> leading)
      : field_(std::move(field)), nvars_(nvars), order_(std::move(order)), gens_(std::move(gens)),
        leading_(std::move(leading)) {}

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<Field>>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit() const { return leading_.size() == 1 && leading_[0].is_one(); }

private:
  Field field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Polynomial<Field>> gens_;
  std::vector<Monomial> leading_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t reductions_to_zero = 0;
};

template <class Field>
GroebnerBasis<Field> buchberger(const Field& field, int nvars, std::span<const Polynomial<Field>> gens,
                                const MonomialOrder& order = MonomialOrder::grevlex(), GroebnerStats* stats = nullptr) {
  using Ring = detail::OrderedRing<Field>;
  using Poly = typename Ring::Poly;
  using detail::PackedMono;
  const Ring ring(field, nvars, order);

  std::vector<Poly> polys;
  std::vector<std::size_t> active;

  struct Pair {
    std::size_t i, k;
    PackedMono lcm;
  };
  std::vector<Pair> pairs;

  auto unit_basis = [&] {
    auto one = Polynomial<Field>::constant(field, nvars, field.one());
    return GroebnerBasis<Field>(field, nvars, order, {one}, {Monomial{}});
  };

  // Gebauer-Moeller update for a new element h.
  auto update = [&](std::size_t h) {
    const PackedMono lh = polys[h][0].first;
    std::vector<Pair> candidates;
    for (auto g : active) candidates.push_back({g, h, detail::lcm(polys[g][0].first, lh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& c = candidates[a];
      bool keep = detail::coprime(polys[c.i][0].first, lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (detail::divides(candidates[b].lcm, c.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (detail::divides(kept[b].lcm, c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = detail::divides(lh, p.lcm) && !(detail::lcm(polys[p.i][0].first, lh) == p.lcm) &&
                  !(detail::lcm(polys[p.k][0].first, lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (auto& p : kept)
      if (!detail::coprime(polys[p.i][0].first, lh)) next.push_back(p);
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (auto g : active)
      if (!detail::divides(lh, polys[g][0].first)) still.push_back(g);
    still.push_back(h);
    active = std::move(still);
  };

  // Seed the basis, processing inputs in increasing leading-monomial order.
  std::vector<Poly> inputs;
  for (auto& g : gens) {
    if (g.nvars() != nvars || !(g.field() == field)) throw std::invalid_argument("generator ring mismatch");
    auto p = ring.to_internal(g);
    if (!p.empty()) inputs.push_back(std::move(p));
  }
  std::sort(inputs.begin(), inputs.end(),
            [&](const Poly& a, const Poly& b) { return ring.compare(a[0].first, b[0].first) < 0; });
  for (auto& in : inputs) {
    auto r = ring.reduce(std::move(in), polys, active);
    if (r.empty()) continue;
    if (r[0].first.deg == 0) return unit_basis();
    ring.make_monic(r);
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
      int c = ring.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.k, a.i) < std::tie(b.k, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    if (stats) ++stats->pairs_considered;
    auto r = ring.reduce(ring.spoly(polys[p.i], polys[p.k]), polys, active);
    if (r.empty()) {
      if (stats) ++stats->reductions_to_zero;
      continue;
    }
    if (r[0].first.deg == 0) return unit_basis();
    ring.make_monic(r);
    polys.push_back(std::move(r));
    update(polys.size() - 1);
  }

  // Interreduce the minimal basis.
  std::sort(active.begin(), active.end(),
            [&](std::size_t a, std::size_t b) { return ring.compare(polys[a][0].first, polys[b][0].first) > 0; });
  std::vector<Polynomial<Field>> out;
  std::vector<Monomial> leading;
  for (std::size_t a = 0; a < active.size(); ++a) {
    std::vector<std::size_t> others;
    for (auto b : active)
      if (b != active[a]) others.push_back(b);
    Poly& g = polys[active[a]];
    Poly tail(g.begin() + 1, g.end());
    Poly reduced_tail = ring.reduce(std::move(tail), polys, others);
    Poly full;
    full.reserve(reduced_tail.size() + 1);
    full.push_back(g[0]);
    full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
    g = full;
    leading.push_back(ring.unpack(g[0].first));
    out.push_back(ring.to_polynomial(g));
  }
  return GroebnerBasis<Field>(field, nvars, order, std::move(out), std::move(leading));
}

template <class Field>
GroebnerBasis<Field> buchberger(std::span<const Polynomial<Field>> gens,
                                const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (gens.empty()) throw std::invalid_argument("cannot infer the ring of an empty generator list");
  return buchberger(gens[0].field(), gens[0].nvars(), gens, order);
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& f, const GroebnerBasis<Field>& gb) {
  detail::OrderedRing<Field> ring(gb.field(), gb.nvars(), gb.order());
  std::vector<typename detail::OrderedRing<Field>::Poly> polys;
  std::vector<std::size_t> active;
  for (auto& g : gb.generators()) {
    active.push_back(polys.size());
    polys.push_back(ring.to_internal(g));
  }
  return ring.to_polynomial(ring.reduce(ring.to_internal(f), polys, active));
}

/// Every S-polynomial reduces to zero and no leading monomial divides another.
template <class Field>
bool is_reduced_groebner(const GroebnerBasis<Field>& gb) {
  detail::OrderedRing<Field> ring(gb.field(), gb.nvars(), gb.order());
  std::vector<typename detail::OrderedRing<Field>::Poly> polys;
  std::vector<std::size_t> active;
  for (auto& g : gb.generators()) {
    active.push_back(polys.size());
    polys.push_back(ring.to_internal(g));
    if (!gb.field().is_one(polys.back()[0].second)) return false;
  }
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = 0; b < polys.size(); ++b)
      if (a != b && detail::divides(polys[a][0].first, polys[b][0].first)) return false;
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = a + 1; b < polys.size(); ++b)
      if (!ring.reduce(ring.spoly(polys[a], polys[b]), polys, active).empty()) return false;
  return true;
}

/// Dimension of the affine zero set; -1 for the unit ideal.
template <class Field>
int krull_dimension(const GroebnerBasis<Field>& gb) {
  if (gb.is_unit()) return -1;
  const int n = gb.nvars();
  int best = 0;
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    int size = __builtin_popcount(subset);
    if (size <= best) continue;
    bool independent = true;
    for (auto& lm : gb.leading_monomials()) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (lm.exp[i] && !(subset & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

/// Number of standard monomials; nullopt when the ideal is not zero-dimensional.
template <class Field>
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis<Field>& gb) {
  if (gb.is_unit()) return 0;
  const int n = gb.nvars();
  const auto& lms = gb.leading_monomials();
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (auto& lm : lms)
      if (lm.exp[i] && lm.degree() == lm.exp[i]) pure = true;
    if (!pure) return std::nullopt;
  }
  auto divisible = [&](const Monomial& m) {
    for (auto& lm : lms)
      if (lm.divides(m)) return true;
    return false;
  };
  // Standard monomials form an order ideal: once a prefix is divisible, all its extensions are.
  std::uint64_t count = 0;
  Monomial m;
  auto rec = [&](auto&& self, int var) -> void {
    if (var == n) {
      ++count;
      return;
    }
    for (int e = 0;; ++e) {
      m.exp[var] = static_cast<std::uint8_t>(e);
      if (divisible(m)) break;
      self(self, var + 1);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0);
  return count;
}

/// Jacobian criterion: the partials of a cubic form vanish only at the origin.
template <class Field>
bool is_smooth_cubic(const Polynomial<Field>& T) {
  auto ch = T.field().characteristic();
  if (ch == 2 || ch == 3) throw std::invalid_argument("smoothness test needs characteristic other than 2 and 3");
  if (T.is_zero() || !T.is_homogeneous(3)) throw std::invalid_argument("is_smooth_cubic expects a nonzero cubic form");
  auto partials = jacobian(T);
  auto gb = buchberger<Field>(T.field(), T.nvars(), partials);
  return quotient_dimension(gb).has_value();
}

}  // namespace cubicsym
