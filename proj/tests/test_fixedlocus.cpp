#include <gtest/gtest.h>

#include <random>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

namespace {

const PrimeField F(32003);

const FamilyRecord& family(const std::string& id) { return *golden().find(id); }

Polynomial<PrimeField> member(const std::string& id, std::uint64_t seed = 1) {
  return random_member(lambda_j(family(id).aut), F, seed);
}

Stratum cross_stratum(const Automorphism& aut, Residue a, Residue b) {
  for (auto& s : strata_of(eigen_decomposition(aut)))
    if (s.kind == Stratum::Kind::cross && s.a == a && s.b == b) return s;
  throw std::out_of_range("no such stratum");
}

}  // namespace

TEST(EigenDecomposition, Examples) {
  auto one = eigen_decomposition(family("I").aut);
  EXPECT_EQ(one.size(), 6u);
  for (auto& s : one) EXPECT_EQ(s.coords.size(), 1u);

  auto inv = eigen_decomposition(family("V-(1)").aut);
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv[0].character, 0u);
  EXPECT_EQ(inv[0].coords, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(inv[1].character, 1u);
  EXPECT_EQ(inv[1].coords, (std::vector<int>{4, 5}));

  auto id = eigen_decomposition(Automorphism::identity());
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].coords.size(), 6u);
}

TEST(EigenDecomposition, PartitionsCoordinates) {
  for (auto& f : golden().families) {
    std::vector<int> all;
    std::set<Residue> chars;
    for (auto& s : eigen_decomposition(f.aut)) {
      all.insert(all.end(), s.coords.begin(), s.coords.end());
      chars.insert(s.character);
      for (int i : s.coords) EXPECT_EQ(f.aut.e(i), s.character);
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, (std::vector<int>{0, 1, 2, 3, 4, 5})) << f.id;
    EXPECT_EQ(chars.size(), eigen_decomposition(f.aut).size()) << f.id;
  }
}

TEST(StratumIdeal, AbelianTypeCrossStratumHasTwoCubics) {
  auto aut = family("IV-(2)").aut;
  auto T = member("IV-(2)");
  auto s = cross_stratum(aut, 0, 1);
  EXPECT_EQ(s.chart_count(), 9);
  for (int c = 0; c < s.chart_count(); ++c) {
    auto gens = stratum_ideal(T, aut, s, c);
    EXPECT_EQ(gens.size(), 2u) << c;
  }
}

TEST(StratumIdeal, InvolutionCrossStratumHasCubicAndQuadraticCondition) {
  auto aut = family("V-(1)").aut;
  auto T = member("V-(1)");
  auto s = cross_stratum(aut, 0, 1);
  for (int c = 0; c < s.chart_count(); ++c) {
    auto gens = stratum_ideal(T, aut, s, c);
    ASSERT_EQ(gens.size(), 2u) << c;
  }
}

TEST(StratumIdeal, RejectsOutOfRangeChart) {
  Stratum point{Stratum::Kind::diagonal, 0, 0, {0}, {}};
  EXPECT_EQ(point.chart_count(), 0);
  EXPECT_THROW(stratum_ideal(member("I"), family("I").aut, point, 0), std::out_of_range);
  auto s = cross_stratum(family("I").aut, 0, 1);
  EXPECT_THROW(stratum_ideal(member("I"), family("I").aut, s, 1), std::out_of_range);
}

TEST(StratumIdeal, WrongCharacterCoefficientsAreChecked) {
  // A cubic that is not invariant must trip the character filter somewhere.
  auto aut = family("II").aut;
  auto T = random_member(lambda_all(), F, 3);
  bool tripped = false;
  for (auto& s : strata_of(eigen_decomposition(aut)))
    for (int c = 0; c < s.chart_count(); ++c) {
      try {
        stratum_ideal(T, aut, s, c);
      } catch (const std::logic_error&) {
        tripped = true;
      }
    }
  EXPECT_TRUE(tripped);
}

TEST(FixedLines, TableCounts) {
  std::map<std::string, std::string> expect{{"I", "5 points"},        {"II", "9 points"},
                                            {"III", "14 points"},     {"IV-(1)", "27 points"},
                                            {"IV-(2)", "0 points + dim-2 stratum"},
                                            {"IV-(3)", "27 points"},  {"IV-(4)", "9 points"},
                                            {"IV-(5)", "9 points"},   {"V-(1)", "28 points + dim-2 stratum"},
                                            {"V-(3)", "6 points"}};
  for (auto& [id, summary] : expect) {
    auto T = change_field(member(id, 11), RationalField{});
    auto cert = fixed_lines_two_prime(T, family(id).aut);
    EXPECT_TRUE(cert.certified()) << id;
    EXPECT_EQ(cert.primary.summary(), summary) << id;
  }
}

TEST(FixedLines, InvolutionSplitsAsOnePlusTwentySeven) {
  auto rep = fixed_lines_report(member("V-(1)"), family("V-(1)").aut);
  auto diag0 = rep.find(Stratum::Kind::diagonal, 0, 0);
  auto diag1 = rep.find(Stratum::Kind::diagonal, 1, 1);
  auto cross = rep.find(Stratum::Kind::cross, 0, 1);
  ASSERT_TRUE(diag0 && diag1 && cross);
  EXPECT_EQ(diag0->count, 27u);
  EXPECT_EQ(diag1->count, 1u);
  EXPECT_EQ(cross->dimension, 2);
}

TEST(FixedLines, FlaggedFamiliesPerStratum) {
  for (auto& id : {"V-(2)(a)", "V-(2)(b)"}) {
    const auto& exp = family(id).fixed;
    for (std::uint64_t seed : {1, 2, 3}) {
      auto T = change_field(member(id, seed), RationalField{});
      auto cert = fixed_lines_two_prime(T, family(id).aut);
      ASSERT_TRUE(cert.certified()) << id;
      EXPECT_EQ(cert.primary.isolated, 16u) << id;
      std::uint64_t listed = 0;
      for (auto& [label, want] : exp.listed_strata) {
        listed += want;
        auto it = std::find_if(cert.primary.strata.begin(), cert.primary.strata.end(),
                               [&](const StratumResult& r) { return r.stratum.label() == label; });
        ASSERT_NE(it, cert.primary.strata.end()) << label;
        EXPECT_EQ(it->count, want) << id << " " << label;
      }
      EXPECT_EQ(listed, 15u);
      for (auto& [label, want] : exp.unlisted_strata) {
        auto it = std::find_if(cert.primary.strata.begin(), cert.primary.strata.end(),
                               [&](const StratumResult& r) { return r.stratum.label() == label; });
        ASSERT_NE(it, cert.primary.strata.end()) << label;
        EXPECT_EQ(it->count, want) << id << " " << label;
      }
    }
  }
}

TEST(FixedLines, PointwiseFixedLineLiesOnEveryMember) {
  // The line through the coordinate points of the character-2 eigenspace in V-(2)(a).
  auto aut = family("V-(2)(a)").aut;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto T = member("V-(2)(a)", seed);
    for (auto& [m, c] : T.terms()) EXPECT_FALSE(m.exp[2] + m.exp[3] == 3);
  }
  auto s = strata_of(eigen_decomposition(aut));
  auto it = std::find_if(s.begin(), s.end(), [](const Stratum& x) { return x.label() == "diag(2)"; });
  ASSERT_NE(it, s.end());
  EXPECT_EQ(it->source, (std::vector<int>{2, 3}));
}

TEST(FixedLines, DistinctEigenvalueOracle) {
  for (auto& id : {"I", "II", "IV-(4)", "V-(3)"}) {
    auto basis = lambda_j(family(id).aut);
    auto rep = fixed_lines_report(random_member(basis, F, 21), family(id).aut);
    EXPECT_EQ(rep.isolated, distinct_eigenvalue_line_count(basis.monomials)) << id;
    EXPECT_TRUE(rep.positive_dimensions.empty()) << id;
  }
}

TEST(FixedLines, IndependentOfChartOrder) {
  std::mt19937_64 rng(51);
  for (auto& f : golden().families) {
    if (f.fixed.whole) continue;
    auto T = member(f.id, 4);
    auto base = fixed_lines_report(T, f.aut);
    for (int t = 0; t < 3; ++t) {
      FixedLocusOptions opt;
      std::shuffle(opt.coordinate_order.begin(), opt.coordinate_order.end(), rng);
      auto other = fixed_lines_report(T, f.aut, opt);
      EXPECT_EQ(other.isolated, base.isolated) << f.id;
      EXPECT_EQ(other.positive_dimensions, base.positive_dimensions) << f.id;
      EXPECT_TRUE(other.same_counts(base)) << f.id;
    }
  }
}

TEST(FixedLines, WitnessMatchesGenericMember) {
  for (auto& id : {"I", "II", "III", "IV-(4)", "IV-(5)", "V-(3)"}) {
    auto w = fixed_lines_two_prime(*witness_for(id), family(id).aut);
    auto g = fixed_lines_two_prime(change_field(member(id, 9), RationalField{}), family(id).aut);
    ASSERT_TRUE(w.certified() && g.certified()) << id;
    EXPECT_TRUE(w.primary.same_counts(g.primary)) << id;
  }
}

TEST(FixedLines, IdentityIsWholeVariety) {
  auto rep = fixed_lines_report(change_field(*witness_for("IV-(1)"), F), Automorphism::identity());
  EXPECT_EQ(rep.positive_dimensions, std::vector<int>{4});
  EXPECT_FALSE(rep.note.empty());
}

TEST(FixedLines, RejectsNonCubic) {
  EXPECT_THROW(fixed_lines_report(parse_polynomial("x0^2", F), family("I").aut), std::invalid_argument);
}

TEST(LinesInSubspace, FermatSurface) {
  EXPECT_EQ(lines_in_subspace_count(parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", F, 4), 4), 27u);
}

TEST(LinesInSubspace, RandomSmoothSurfaces) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<std::uint32_t> coeff(1, 32002);
  for (int t = 0; t < 5; ++t) {
    std::vector<Polynomial<PrimeField>::Term> terms;
    for (auto& v : lambda_all())
      if (v.a[4] == 0 && v.a[5] == 0) terms.emplace_back(v.monomial(), coeff(rng));
    auto T = Polynomial<PrimeField>::from_terms(F, 4, std::move(terms));
    EXPECT_EQ(lines_in_subspace_count(T, 4), 27u);
  }
}

TEST(LinesInSubspace, PlaneCubicAndBinaryCubic) {
  EXPECT_EQ(lines_in_subspace_count(parse_polynomial("x0^3 + x1^3 + x2^3", F, 3), 3), 0u);
  EXPECT_EQ(lines_in_subspace_count(parse_polynomial("x0^3 + x1^3", F, 2), 2), 0u);
  EXPECT_EQ(lines_in_subspace_count(Polynomial<PrimeField>(F, 2), 2), 1u);
}

TEST(Certificate, DisagreementIsNotCertified) {
  FixedLocusReport a, b;
  a.strata.push_back({Stratum{Stratum::Kind::cross, 0, 1, {0}, {1}}, 0, 1u, {}});
  b.strata.push_back({Stratum{Stratum::Kind::cross, 0, 1, {0}, {1}}, -1, 0u, {}});
  EXPECT_FALSE(a.same_counts(b));
  EXPECT_TRUE(a.same_counts(a));
}
