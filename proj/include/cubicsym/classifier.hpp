#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "eigenbasis.hpp"
#include "family.hpp"
#include "parallel.hpp"

namespace cubicsym {

class StarViolation : public std::invalid_argument {
public:
  explicit StarViolation(int index)
      : std::invalid_argument("no x_i^2 x_k of the required character for i = " + std::to_string(index)),
        index_(index) {}
  int index() const { return index_; }

private:
  int index_;
};

/// Vertices are classes of coordinates with equal exponent; each vertex points to the class of value j - 2e.
struct Diagram {
  std::vector<std::vector<int>> vertices;
  std::vector<Residue> values;
  std::vector<int> arrow;

  /// Cycles as vertex lists, each starting at its smallest vertex, ordered by that vertex.
  std::vector<std::vector<int>> cycles() const {
    const int V = static_cast<int>(vertices.size());
    std::vector<int> state(V, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::vector<int>> out;
    for (int s = 0; s < V; ++s) {
      std::vector<int> path;
      int v = s;
      while (state[v] == 0) {
        state[v] = 1;
        path.push_back(v);
        v = arrow[v];
      }
      if (state[v] == 1) {
        auto it = std::find(path.begin(), path.end(), v);
        std::vector<int> cyc(it, path.end());
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        out.push_back(cyc);
      }
      for (int u : path) state[u] = 2;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> cycle_lengths() const {
    std::vector<int> out;
    for (auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of arrows into each vertex.
  std::vector<int> in_degrees() const {
    std::vector<int> d(vertices.size(), 0);
    for (int t : arrow) ++d[t];
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (v) s += "; ";
      s += "{";
      for (std::size_t k = 0; k < vertices[v].size(); ++k) s += (k ? "," : "") + std::to_string(vertices[v][k]);
      s += "}->" + std::to_string(arrow[v]);
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = vertices;
    j["values"] = values;
    j["arrows"] = arrow;
    j["cycle_lengths"] = cycle_lengths();
    return j;
  }
};

/// Throws StarViolation when some coordinate has no outgoing arrow.
inline Diagram build_diagram(const Automorphism& aut, Residue j) {
  if (auto star = star_condition(aut, j); !star) throw StarViolation(star.violating_index);
  const Residue n = aut.n();
  Diagram d;
  for (int i = 0; i < 6; ++i) {
    auto it = std::find(d.values.begin(), d.values.end(), aut.e(i));
    if (it == d.values.end()) {
      d.values.push_back(aut.e(i));
      d.vertices.push_back({i});
    } else {
      d.vertices[it - d.values.begin()].push_back(i);
    }
  }
  for (Residue x : d.values) {
    Residue target = mod(static_cast<std::int64_t>(j) - 2ll * x, n);
    d.arrow.push_back(static_cast<int>(std::find(d.values.begin(), d.values.end(), target) - d.values.begin()));
  }
  return d;
}

/// ((-2)^l - 1) / 3, the integer a cycle of length l forces p to divide.
inline std::int64_t cycle_obstruction(int l) {
  std::int64_t v = 1;
  for (int k = 0; k < l; ++k) v *= -2;
  return (v - 1) / 3;
}

struct CycleCheck {
  bool admissible = true;
  std::string violated_clause;
  explicit operator bool() const { return admissible; }
};

inline CycleCheck cycle_admissible(const Diagram& d, Residue p, int /*m*/) {
  int fixed = 0;
  for (int l : d.cycle_lengths()) {
    if (l == 1) {
      ++fixed;
    } else if (l == 2) {
      return {false, "cycle of length 2"};
    } else if (l <= 6 && cycle_obstruction(l) % static_cast<std::int64_t>(p) != 0) {
      return {false, "cycle of length " + std::to_string(l) + " needs p | " + std::to_string(cycle_obstruction(l))};
    }
  }
  if (p != 3 && fixed > 1) return {false, "more than one 1-cycle with p != 3"};
  return {};
}

/// Eq.: sum e_i = 2j, condition (*), projective order exactly n.
inline bool solves_system(const Automorphism& a) {
  return a.satisfies_symplectic_condition() && star_condition(a, a.j()) && a.projective_order() == a.n();
}

/// Largest order the enumeration accepts for p: 32 for p = 2, 9 for p = 3, p otherwise.
inline Residue order_bound(Residue p) { return p == 2 ? 32 : p == 3 ? 9 : p; }

/// All canonical solutions of order n by brute force over sorted tuples 0 = e_0 <= ... <= e_5 < n.
inline std::vector<Automorphism> solve_by_sorted_tuples(Residue n) {
  std::set<Automorphism> found;
  std::array<std::int64_t, 6> e{};
  auto rec = [&](auto&& self, int i, std::int64_t lo) -> void {
    if (i == 6) {
      std::int64_t s = 0;
      for (auto v : e) s += v;
      for (Residue j = 0; j < n; ++j) {
        if ((2ll * j - s) % n != 0) continue;
        auto a = Automorphism::from_order(n, e, j);
        if (solves_system(a)) found.insert(canonicalize(a));
      }
      return;
    }
    for (std::int64_t v = lo; v < n; ++v) {
      e[i] = v;
      self(self, i + 1, v);
    }
  };
  e[0] = 0;
  rec(rec, 1, 0);
  return {found.begin(), found.end()};
}

/// All canonical solutions of order n via value sets closed under x -> j - 2x.
/// A shift fixes j to a representative of Z/n modulo 3, and every value lies on a forward orbit of size <= 6.
inline std::vector<Automorphism> solve_by_closure(Residue n) {
  std::set<Automorphism> found;
  std::vector<Residue> js = n % 3 == 0 ? std::vector<Residue>{0, 1, 2} : std::vector<Residue>{0};
  for (Residue j : js) {
    auto phi = [&](Residue x) { return mod(static_cast<std::int64_t>(j) - 2ll * x, n); };
    std::vector<std::pair<Residue, std::vector<Residue>>> seeds;
    for (Residue x = 0; x < n; ++x) {
      std::vector<Residue> orbit{x};
      Residue y = x;
      bool small = true;
      for (;;) {
        y = phi(y);
        if (std::find(orbit.begin(), orbit.end(), y) != orbit.end()) break;
        if (orbit.size() == 6) {
          small = false;
          break;
        }
        orbit.push_back(y);
      }
      if (small) {
        std::sort(orbit.begin(), orbit.end());
        seeds.emplace_back(x, orbit);
      }
    }
    std::set<std::vector<Residue>> closed_sets;
    std::vector<Residue> current;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      if (!current.empty()) closed_sets.insert(current);
      for (std::size_t k = from; k < seeds.size(); ++k) {
        if (std::binary_search(current.begin(), current.end(), seeds[k].first)) continue;
        std::vector<Residue> merged;
        std::set_union(current.begin(), current.end(), seeds[k].second.begin(), seeds[k].second.end(),
                       std::back_inserter(merged));
        if (merged.size() > 6) continue;
        auto saved = current;
        current = merged;
        self(self, k + 1);
        current = saved;
      }
    };
    grow(grow, 0);
    for (auto& values : closed_sets) {
      // multiplicities >= 1 summing to 6
      std::vector<int> mult(values.size(), 1);
      auto distribute = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx + 1 == values.size()) {
          mult[idx] = 1 + left;
          std::array<std::int64_t, 6> e{};
          int pos = 0;
          for (std::size_t v = 0; v < values.size(); ++v)
            for (int r = 0; r < mult[v]; ++r) e[pos++] = values[v];
          auto a = Automorphism::from_order(n, e, j);
          if (solves_system(a)) found.insert(canonicalize(a));
          return;
        }
        for (int extra = 0; extra <= left; ++extra) {
          mult[idx] = 1 + extra;
          self(self, idx + 1, left - extra);
        }
      };
      distribute(distribute, 0, 6 - static_cast<int>(values.size()));
    }
  }
  return {found.begin(), found.end()};
}

/// Sorted-tuple search up to this order, closure search above it.
inline constexpr Residue kSortedTupleLimit = 32;
/// Orders above this are not searched.
inline constexpr Residue kSearchLimit = 1u << 22;

inline std::vector<Automorphism> solve_system(Residue n) {
  if (n < 2) return {};
  return n <= kSortedTupleLimit ? solve_by_sorted_tuples(n) : solve_by_closure(n);
}

/// A row of the classification: canonical automorphism (carrying j), its family and verdict.
struct CandidateClass {
  Automorphism aut;
  FamilyBasis basis;
  SmoothnessVerdict smoothness;
  std::optional<Diagram> diagram;
  CycleCheck cycles;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["aut"] = aut.to_json();
    j["aut_signed"] = aut.to_json(true);
    j["basis_size"] = basis.size();
    j["basis"] = basis.to_json()["monomials"];
    j["smoothness"] = smoothness.to_json();
    if (diagram) j["diagram"] = diagram->to_json();
    j["cycle_admissible"] = cycles.admissible;
    if (!cycles.admissible) j["cycle_violation"] = cycles.violated_clause;
    return j;
  }
};

/// Family of (aut, j) with its verdict; star-violated families are not sampled.
inline CandidateClass classify_family(const Automorphism& aut, int trials, std::uint64_t seed,
                                      const SmoothnessOptions& opt = {}) {
  CandidateClass c{aut, lambda_j(aut), {}, std::nullopt, {}};
  if (auto star = star_condition(aut, aut.j()); !star) {
    c.smoothness.status = SmoothnessStatus::star_violated;
    c.smoothness.star_violating_index = star.violating_index;
    c.cycles = {false, "condition (*) fails"};
    return c;
  }
  c.diagram = build_diagram(aut, aut.j());
  auto [p, m] = prime_power_of(aut.n());
  c.cycles = p > 1 ? cycle_admissible(*c.diagram, p, m) : CycleCheck{};
  c.smoothness = generic_smoothness(c.basis, trials, seed, opt);
  return c;
}

/// Canonical classes of order exactly p^m solving the system, each with a smoothness verdict.
/// Orders beyond the known bounds yield no classes.
inline std::vector<CandidateClass> enumerate_candidates(Residue p, int m, int trials, std::uint64_t seed,
                                                        const SmoothnessOptions& opt = {}) {
  if (!is_prime(p) || m < 1) throw std::invalid_argument("enumerate_candidates needs a prime p and m >= 1");
  std::uint64_t n = 1;
  for (int k = 0; k < m; ++k) {
    n *= p;
    if (n > order_bound(p)) return {};
  }
  auto sols = solve_system(static_cast<Residue>(n));
  SmoothnessOptions inner = opt;
  inner.threads = 1;
  return parallel_map(
      sols.size(), [&](std::size_t k) { return classify_family(sols[k], trials, derive_seed(seed, k), inner); },
      opt.threads);
}

/// Level of x in the tree of Z/2^M with j = 0: 1 for 0, else M + 1 - v_2(x).
inline int binary_tree_level(Residue x, int M) {
  if (x == 0) return 1;
  return M + 1 - std::countr_zero(x);
}

struct TreeLevelCount {
  int level;
  std::size_t solutions;  // solution multisets whose deepest vertex sits at this level
};

/// For Z/2^M with j = 0: multisets of six values closed under x -> -2x with zero sum,
/// bucketed by the deepest tree level they use.
inline std::vector<TreeLevelCount> binary_tree_transcript(int M = 5) {
  const Residue n = Residue{1} << M;
  std::vector<std::size_t> by_level(M + 2, 0);
  std::array<std::int64_t, 6> e{};
  auto rec = [&](auto&& self, int i, std::int64_t lo) -> void {
    if (i == 6) {
      auto a = Automorphism::from_order(n, e, 0);
      if (!a.satisfies_symplectic_condition() || !star_condition(a, 0)) return;
      int deepest = 1;
      for (auto v : e) deepest = std::max(deepest, binary_tree_level(static_cast<Residue>(v), M));
      ++by_level[deepest];
      return;
    }
    for (std::int64_t v = lo; v < n; ++v) {
      e[i] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 0);
  std::vector<TreeLevelCount> out;
  for (int l = 1; l <= M + 1; ++l) out.push_back({l, by_level[l]});
  return out;
}

}  // namespace cubicsym
