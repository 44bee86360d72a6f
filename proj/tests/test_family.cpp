#include <gtest/gtest.h>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

namespace {

std::vector<ExponentVector> parse_basis(const std::vector<std::string>& monomials) {
  std::vector<ExponentVector> out;
  for (auto& m : monomials) {
    auto p = parse_polynomial(m, RationalField{});
    out.push_back(ExponentVector::from_monomial(p.terms()[0].first));
  }
  return out;
}

const RejectedRecord& rejected(const std::string& id) {
  for (auto& r : golden().rejected)
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

}  // namespace

TEST(WitnessTable, TwelveFamiliesSupportedAndSmooth) {
  auto table = witness_table();
  EXPECT_EQ(table.size(), 12u);
  for (auto& [id, W] : table) {
    const FamilyRecord* f = golden().find(id);
    ASSERT_NE(f, nullptr) << id;
    EXPECT_TRUE(supported_in(W, lambda_j(f->aut).monomials)) << id;
    EXPECT_TRUE(is_symplectic_pair(f->aut, W)) << id;
    EXPECT_TRUE(is_smooth_cubic(W)) << id;
  }
}

TEST(WitnessTable, NamedExamples) {
  EXPECT_EQ(*witness_for("III"), parse_polynomial("x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x0 + x4^3 + x5^3", RationalField{}));
  EXPECT_EQ(*witness_for("IV-(4)"),
            parse_polynomial("x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x4^2*x5 + x5^2*x3", RationalField{}));
  EXPECT_EQ(*witness_for("V-(1)"),
            parse_polynomial("x4^2*x0 + x5^2*x1 + x4*x5*x2 + x0^3 + x1^3 + x2^3 + x3^3", RationalField{}));
  EXPECT_EQ(*witness_for("IV-(2)"), *witness_for("IV-(1)"));
  EXPECT_FALSE(witness_for("nonexistent").has_value());
}

TEST(GenericSmoothness, CycleOfFourUsesNamedWitness) {
  auto v = generic_smoothness(lambda_j(golden().find("III")->aut), 20, 0);
  EXPECT_EQ(v.status, SmoothnessStatus::generically_smooth);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, *witness_for("III"));
  EXPECT_EQ(v.witness_field, "Q");
}

TEST(GenericSmoothness, RejectedCycleSubcaseIsSingular) {
  auto basis = parse_basis({"x0^2*x1", "x1^2*x2", "x2^2*x3", "x3^2*x0", "x4^2*x1", "x3^2*x4", "x1^2*x5", "x5^2*x3",
                            "x0*x1*x4", "x2*x3*x5"});
  auto v = generic_smoothness(basis, 20, 0);
  EXPECT_EQ(v.status, SmoothnessStatus::probably_all_singular);
  EXPECT_EQ(v.samples, 20);
  EXPECT_FALSE(v.witness.has_value());
  ASSERT_TRUE(v.singular_locus_dimension.has_value());
  EXPECT_GE(*v.singular_locus_dimension, 0);
  // the same ten monomials as the rejected order-5 row
  auto row = lambda_j(rejected("III(i)").aut).monomials;
  EXPECT_EQ(row.size(), basis.size());
  for (auto& m : basis) EXPECT_NE(std::find(row.begin(), row.end(), m), row.end());
}

TEST(GenericSmoothness, ConeIsSingular) {
  auto v = generic_smoothness(parse_basis({"x0^3"}), 5, 0);
  EXPECT_EQ(v.status, SmoothnessStatus::probably_all_singular);
  EXPECT_EQ(*v.singular_locus_dimension, 4);
}

TEST(GenericSmoothness, EmptyFamily) {
  auto v = generic_smoothness(std::vector<ExponentVector>{}, 5, 0);
  EXPECT_EQ(v.status, SmoothnessStatus::probably_all_singular);
  EXPECT_EQ(v.note, "empty family");
}

TEST(GenericSmoothness, RejectsZeroTrials) {
  EXPECT_THROW(generic_smoothness(parse_basis({"x0^3"}), 0, 0), std::invalid_argument);
}

TEST(GenericSmoothness, RandomSamplingFindsSmoothMembers) {
  // Without the named witnesses, 20 samples at the default prime must contain a smooth member.
  SmoothnessOptions opt;
  opt.use_named_witnesses = false;
  for (auto& f : golden().families) {
    if (f.aut.projective_order() == 1) continue;
    auto outcomes = sample_family(lambda_j(f.aut).monomials, 20, 17, opt);
    int smooth = 0;
    for (auto& o : outcomes) smooth += o.smooth_q1;
    EXPECT_GE(smooth, 1) << f.id;
    auto v = generic_smoothness(lambda_j(f.aut), 20, 17, opt);
    EXPECT_EQ(v.status, SmoothnessStatus::generically_smooth) << f.id;
    EXPECT_TRUE(is_smooth_cubic(*v.witness)) << f.id;
  }
}

TEST(GenericSmoothness, RejectedFamiliesAllSingular) {
  for (auto& r : golden().rejected) {
    auto basis = lambda_j(r.aut);
    EXPECT_EQ(basis.size(), r.basis_size) << r.id;
    auto outcomes = sample_family(basis.monomials, 50, 5);
    int smooth = 0;
    for (auto& o : outcomes) smooth += o.smooth();
    EXPECT_EQ(smooth, 0) << r.id;
  }
}

TEST(GenericSmoothness, IndependentOfWorkerCount) {
  SmoothnessOptions one, many;
  one.threads = 1;
  many.threads = 3;
  one.use_named_witnesses = many.use_named_witnesses = false;
  for (auto& id : {"II", "V-(3)"}) {
    auto basis = lambda_j(golden().find(id)->aut);
    EXPECT_EQ(generic_smoothness(basis, 20, 3, one).to_json(), generic_smoothness(basis, 20, 3, many).to_json()) << id;
  }
  auto singular = lambda_j(rejected("III(i)").aut);
  EXPECT_EQ(generic_smoothness(singular, 20, 3, one).to_json(), generic_smoothness(singular, 20, 3, many).to_json());
}

TEST(StatusNames, Stable) {
  EXPECT_EQ(to_string(SmoothnessStatus::generically_smooth), "generically-smooth");
  EXPECT_EQ(to_string(SmoothnessStatus::probably_all_singular), "probably-all-singular");
  EXPECT_EQ(to_string(SmoothnessStatus::star_violated), "star-violated");
}

TEST(ClassifyFamily, StarViolatedIsNotSampled) {
  auto c = classify_family(Automorphism::from_order(3, {0, 0, 0, 0, 0, 1}, 1), 20, 0);
  EXPECT_EQ(c.smoothness.status, SmoothnessStatus::star_violated);
  EXPECT_EQ(c.smoothness.star_violating_index, 5);
  EXPECT_EQ(c.smoothness.samples, 0);
}
