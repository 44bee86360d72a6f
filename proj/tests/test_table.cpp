#include <gtest/gtest.h>

#include <sstream>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

namespace {

const ClassificationTable& default_table() {
  static const ClassificationTable t = [] {
    TableOptions opt;
    opt.seed = 7;
    return classification_table(opt);
  }();
  return t;
}

}  // namespace

TEST(Golden, Shape) {
  EXPECT_EQ(golden().families.size(), 13u);
  EXPECT_EQ(golden().rejected.size(), 8u);
  EXPECT_TRUE(golden().find("0")->fixed.whole);
  EXPECT_TRUE(golden().find("V-(2)(a)")->fixed.flagged());
  EXPECT_EQ(golden().find("V-(1)")->fixed.expected_summary(), "28 points + dim-2 stratum");
}

TEST(Golden, ParsesCommentedJson) {
  auto g = parse_golden(R"({
    // comment
    "families": [{"id": "x", "n": 11, "e": [0,1,-1,3,-5,4], "j": 1, "basis_size": 6, "witness": "I",
                  "fixed_locus": {"isolated": 5}}],
    "rejected": []
  })");
  ASSERT_EQ(g.families.size(), 1u);
  EXPECT_EQ(g.families[0].aut, golden().find("I")->aut);
}

TEST(Table, DefaultRunMatchesExpectations) {
  const auto& t = default_table();
  EXPECT_EQ(t.exit_code(), 0);
  EXPECT_TRUE(t.problems.empty());
  ASSERT_EQ(t.rows.size(), 13u);
  int smooth_rows = 0;
  for (auto& r : t.rows) {
    EXPECT_TRUE(r.problems.empty()) << r.record.id;
    if (r.record.id == "V-(2)(a)" || r.record.id == "V-(2)(b)")
      EXPECT_EQ(r.status, RowStatus::flagged);
    else
      EXPECT_EQ(r.status, RowStatus::ok) << r.record.id;
    if (r.class_status == SmoothnessStatus::generically_smooth) ++smooth_rows;
  }
  EXPECT_EQ(smooth_rows, 12);
}

TEST(Table, InvolutionRowKeepsOnlyEvenCharacter) {
  const auto& t = default_table();
  auto v1 = golden().find("V-(1)")->aut;
  int seen = 0;
  for (auto& c : t.classes) {
    if (c.aut.n() != 2 || c.aut.exponents() != v1.exponents()) continue;
    ++seen;
    EXPECT_EQ(c.smoothness.status == SmoothnessStatus::generically_smooth, c.aut.j() == 0);
  }
  EXPECT_EQ(seen, 2);
}

TEST(Table, BinaryTreeTranscript) {
  const auto& t = default_table();
  ASSERT_EQ(t.binary_tree.size(), 6u);
  EXPECT_EQ(t.binary_tree[4].solutions, 0u);
  EXPECT_EQ(t.binary_tree[5].solutions, 0u);
}

TEST(Table, DeterministicAcrossWorkerCounts) {
  TableOptions one, many;
  one.seed = many.seed = 3;
  one.threads = 1;
  many.threads = 4;
  EXPECT_EQ(render_table(classification_table(one), Format::json),
            render_table(classification_table(many), Format::json));
}

TEST(Table, SkipFixedLoci) {
  TableOptions opt;
  opt.skip_fixed_loci = true;
  auto t = classification_table(opt);
  EXPECT_EQ(t.exit_code(), 0);
  for (auto& r : t.rows) EXPECT_FALSE(r.fixed.has_value());
}

TEST(Table, WrongExpectationIsMismatch) {
  const auto& t = default_table();
  const TableRow* row = nullptr;
  for (auto& r : t.rows)
    if (r.record.id == "I") row = &r;
  ASSERT_TRUE(row && row->fixed);
  FixedLocusExpectation wrong;
  wrong.isolated = 6;
  std::vector<std::string> problems;
  std::string note;
  EXPECT_EQ(check_fixed_locus(wrong, *row->fixed, problems, note), RowStatus::mismatch);
  EXPECT_EQ(problems.size(), 1u);
  auto uncertified = *row->fixed;
  uncertified.status = CertificationStatus::not_certified;
  problems.clear();
  EXPECT_EQ(check_fixed_locus(row->record.fixed, uncertified, problems, note), RowStatus::not_certified);
}

TEST(Render, Formats) {
  const auto& t = default_table();
  auto md = render_table(t, Format::md);
  EXPECT_NE(md.find("| V-(2)(a) |"), std::string::npos);
  EXPECT_NE(md.find("unlisted invariant line"), std::string::npos);

  auto j = nlohmann::json::parse(render_table(t, Format::json));
  EXPECT_EQ(j.at("rows").size(), 13u);
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_EQ(j.at("rows")[1].at("fixed_locus"), "5 points");

  auto csv = render_table(t, Format::csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 14);
  EXPECT_EQ(csv.rfind("family,p,n,", 0), 0u);

  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Verify, EmptySelectionPassesVacuously) {
  VerifyOptions o;
  o.only = {0};
  EXPECT_TRUE(run_verify(o).empty());
  o.only.clear();
  for (int id = 1; id <= 9; ++id) o.skip.insert(id);
  EXPECT_TRUE(run_verify(o).empty());
}

TEST(Verify, SelectedCriteriaPass) {
  VerifyOptions o;
  o.only = {3, 4, 8};
  auto results = run_verify(o);
  ASSERT_EQ(results.size(), 3u);
  for (auto& r : results) EXPECT_TRUE(r.passed) << format_result(r);
  EXPECT_NE(format_result(results[2]).find("distinct-eigenvalue"), std::string::npos);
}
