#include <gtest/gtest.h>

#include <set>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

namespace {

Automorphism canonical_of(const std::string& id) { return canonicalize(normalize(golden().find(id)->aut)); }

Diagram cycle_diagram(const std::vector<int>& lengths) {
  Diagram d;
  int base = 0;
  for (int l : lengths) {
    for (int k = 0; k < l; ++k) {
      d.vertices.push_back({base + k});
      d.values.push_back(static_cast<Residue>(base + k));
      d.arrow.push_back(base + (k + 1) % l);
    }
    base += l;
  }
  return d;
}

/// Direct congruence check: sum e = 2j, every i has some k with 2 e_i + e_k = j, order exactly n.
bool congruences_hold(const std::array<Residue, 6>& e, Residue j, Residue n) {
  Residue sum = 0;
  for (auto v : e) sum = (sum + v) % n;
  if (sum != (2 * j) % n) return false;
  for (int i = 0; i < 6; ++i) {
    bool found = false;
    for (int k = 0; k < 6; ++k) found = found || (2 * e[i] + e[k]) % n == j;
    if (!found) return false;
  }
  Residue g = n;
  for (auto v : e) g = std::gcd(g, v);
  return g == 1;
}

std::set<Automorphism> brute_force_classes(Residue p) {
  std::set<Automorphism> out;
  std::array<Residue, 6> e{};
  std::uint64_t total = 1;
  for (int i = 0; i < 6; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 1; i < 6; ++i, c /= p) e[i] = static_cast<Residue>(c % p);
    Residue j = static_cast<Residue>(c % p);
    if (!congruences_hold(e, j, p)) continue;
    std::array<std::int64_t, 6> ee{};
    std::copy(e.begin(), e.end(), ee.begin());
    out.insert(canonicalize(Automorphism::from_order(p, ee, j)));
  }
  return out;
}

std::set<Automorphism> as_set(const std::vector<Automorphism>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Diagram, CycleFamily) {
  auto d = build_diagram(golden().find("I")->aut, 1);
  EXPECT_EQ(d.vertices.size(), 6u);
  EXPECT_EQ(d.cycle_lengths(), (std::vector<int>{1, 5}));
  auto cycles = d.cycles();
  EXPECT_EQ(cycles[0].size() == 1 ? d.vertices[cycles[0][0]] : d.vertices[cycles[1][0]], std::vector<int>{5});
}

TEST(Diagram, Identity) {
  auto d = build_diagram(Automorphism::identity(), 0);
  ASSERT_EQ(d.vertices.size(), 1u);
  EXPECT_EQ(d.vertices[0], (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(d.arrow[0], 0);
}

TEST(Diagram, TwoThreeCycles) {
  auto d = build_diagram(golden().find("IV-(4)")->aut, golden().find("IV-(4)")->aut.j());
  EXPECT_EQ(d.cycle_lengths(), (std::vector<int>{3, 3}));
}

TEST(Diagram, OneArrowPerVertexAndBijectiveForOddPrimes) {
  for (auto& f : golden().families) {
    if (f.aut.projective_order() == 1) continue;
    auto d = build_diagram(f.aut, f.aut.j());
    EXPECT_EQ(d.arrow.size(), d.vertices.size());
    if (f.aut.p() != 2)
      for (int deg : d.in_degrees()) EXPECT_EQ(deg, 1) << f.id;
  }
}

TEST(Diagram, StarViolationReportsIndex) {
  try {
    build_diagram(Automorphism::from_order(3, {0, 0, 0, 0, 0, 1}, 1), 1);
    FAIL() << "expected StarViolation";
  } catch (const StarViolation& e) {
    EXPECT_EQ(e.index(), 5);
  }
}

TEST(CycleAdmissible, Examples) {
  EXPECT_EQ(cycle_obstruction(5), -11);
  EXPECT_TRUE(cycle_admissible(build_diagram(golden().find("I")->aut, 1), 11, 1).admissible);
  EXPECT_TRUE(cycle_admissible(cycle_diagram({5}), 11, 1).admissible);
  EXPECT_FALSE(cycle_admissible(cycle_diagram({4}), 7, 1).admissible);
  for (Residue p : {2u, 3u, 5u, 7u, 11u}) EXPECT_FALSE(cycle_admissible(cycle_diagram({2, 1}), p, 1).admissible);
  EXPECT_FALSE(cycle_admissible(cycle_diagram({1, 1}), 2, 1).admissible);
  EXPECT_TRUE(cycle_admissible(cycle_diagram({1, 1, 1}), 3, 1).admissible);
  EXPECT_TRUE(cycle_admissible(cycle_diagram({3, 3}), 3, 2).admissible);
}

TEST(Solver, SortedTuplesAgreeWithClosure) {
  for (Residue n : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u})
    EXPECT_EQ(as_set(solve_by_sorted_tuples(n)), as_set(solve_by_closure(n))) << n;
}

TEST(Solver, CompleteAgainstBruteForceOverPrimeOrders) {
  for (Residue p : {5u, 7u, 11u}) {
    auto brute = brute_force_classes(p);
    EXPECT_EQ(as_set(solve_system(p)), brute) << p;
  }
}

TEST(Solver, EverySolutionIsSound) {
  for (Residue n : {2u, 4u, 8u, 16u, 32u, 3u, 9u, 27u, 5u, 7u, 11u})
    for (auto& a : solve_system(n)) {
      EXPECT_TRUE(congruences_hold(a.exponents(), a.j(), n)) << a.to_string();
      EXPECT_EQ(canonicalize(a), a);
    }
}

TEST(Enumerate, OrderElevenGivesTheCycleFamily) {
  auto classes = enumerate_candidates(11, 1, 20, 0);
  std::vector<Automorphism> smooth;
  for (auto& c : classes)
    if (c.smoothness.status == SmoothnessStatus::generically_smooth) smooth.push_back(c.aut);
  EXPECT_EQ(smooth, std::vector<Automorphism>{canonical_of("I")});
}

TEST(Enumerate, OrderFiveHasOneSmoothAndOneSingularClass) {
  auto classes = enumerate_candidates(5, 1, 20, 0);
  ASSERT_EQ(classes.size(), 2u);
  auto iii_i = std::find_if(golden().rejected.begin(), golden().rejected.end(),
                            [](const RejectedRecord& r) { return r.id == "III(i)"; });
  for (auto& c : classes) {
    if (c.aut == canonical_of("III"))
      EXPECT_EQ(c.smoothness.status, SmoothnessStatus::generically_smooth);
    else {
      EXPECT_EQ(c.aut, canonicalize(iii_i->aut));
      EXPECT_EQ(c.smoothness.status, SmoothnessStatus::probably_all_singular);
      EXPECT_EQ(c.smoothness.samples, 20);
    }
  }
}

TEST(Enumerate, LargerPrimesHaveNoClasses) {
  for (Residue p : {13u, 17u, 19u, 23u, 29u, 31u}) EXPECT_TRUE(enumerate_candidates(p, 1, 20, 0).empty()) << p;
}

TEST(Enumerate, BeyondOrderBoundIsEmpty) {
  EXPECT_TRUE(enumerate_candidates(2, 6, 20, 0).empty());
  EXPECT_TRUE(enumerate_candidates(3, 3, 20, 0).empty());
  EXPECT_TRUE(enumerate_candidates(5, 2, 20, 0).empty());
  EXPECT_THROW(enumerate_candidates(4, 1, 20, 0), std::invalid_argument);
}

TEST(Enumerate, InvolutionKeepsOnlyEvenCharacter) {
  auto classes = enumerate_candidates(2, 1, 20, 0);
  ASSERT_EQ(classes.size(), 2u);
  for (auto& c : classes) {
    EXPECT_EQ(c.aut.exponents(), golden().find("V-(1)")->aut.exponents());
    EXPECT_EQ(c.smoothness.status == SmoothnessStatus::generically_smooth, c.aut.j() == 0);
  }
}

TEST(Enumerate, SurvivingOrdersDivideEightAndNine) {
  for (auto [p, m] : std::vector<std::pair<Residue, int>>{{2, 4}, {2, 5}, {3, 3}})
    for (auto& c : enumerate_candidates(p, m, 20, 0))
      EXPECT_NE(c.smoothness.status, SmoothnessStatus::generically_smooth);
  EXPECT_TRUE(solve_system(16).empty());
  EXPECT_TRUE(solve_system(32).empty());
  EXPECT_TRUE(solve_system(27).empty());
}

TEST(Enumerate, CyclePruningIsConservative) {
  for (auto [p, m] : std::vector<std::pair<Residue, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {11, 1}})
    for (auto& c : enumerate_candidates(p, m, 20, 0))
      if (!c.cycles.admissible) EXPECT_NE(c.smoothness.status, SmoothnessStatus::generically_smooth) << c.aut.to_string();
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  SmoothnessOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = enumerate_candidates(2, 3, 20, 9, one), b = enumerate_candidates(2, 3, 20, 9, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].to_json(), b[k].to_json());
}

TEST(Enumerate, OrderEightRejectedRowsHaveOneAdmissibleCharacter) {
  for (auto& r : golden().rejected) {
    if (r.aut.n() != 8) continue;
    int passing = 0;
    for (Residue j = 0; j < 8; ++j) {
      std::array<std::int64_t, 6> e{};
      for (int i = 0; i < 6; ++i) e[i] = r.aut.e(i);
      auto a = Automorphism::from_order(8, e, j);
      if (a.satisfies_symplectic_condition() && star_condition(a, j)) ++passing;
    }
    EXPECT_EQ(passing, 1) << r.id;
    EXPECT_EQ(lambda_j(r.aut).size(), r.basis_size) << r.id;
  }
}

TEST(BinaryTree, DeepLevelsEliminated) {
  auto t = binary_tree_transcript(5);
  std::vector<std::size_t> counts;
  for (auto& l : t) counts.push_back(l.solutions);
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 2, 7, 8, 0, 0}));
  EXPECT_EQ(binary_tree_level(0, 5), 1);
  EXPECT_EQ(binary_tree_level(16, 5), 2);
  EXPECT_EQ(binary_tree_level(1, 5), 6);
}
