#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "family.hpp"
#include "fixedlocus.hpp"
#include "golden.hpp"

namespace cubicsym {

struct TableOptions {
  Residue max_p = 11;
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  bool skip_fixed_loci = false;
  std::uint32_t q1 = kDefaultPrime;
  std::uint32_t q2 = kSecondPrime;
  unsigned threads = default_concurrency();
};

enum class RowStatus { ok, flagged, mismatch, not_certified };

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::flagged: return "flagged";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::not_certified: return "not-certified";
  }
  return "?";
}

struct TableRow {
  FamilyRecord record;
  Automorphism canonical;
  FamilyBasis basis;
  bool witness_in_family = false;
  bool witness_smooth = false;
  std::optional<SmoothnessStatus> class_status;  // verdict of the matching enumerated class
  std::optional<FixedLocusCertificate> fixed;
  RowStatus status = RowStatus::ok;
  std::vector<std::string> problems;
  std::string note;

  std::string fixed_summary() const {
    if (record.fixed.whole) return record.fixed.expected_summary();
    return fixed ? fixed->primary.summary() : "skipped";
  }
};

struct ClassificationTable {
  TableOptions options;
  std::vector<TableRow> rows;
  std::vector<CandidateClass> classes;
  std::vector<TreeLevelCount> binary_tree;
  std::vector<std::string> problems;

  int exit_code() const {
    bool uncertified = false;
    if (!problems.empty()) return 1;
    for (auto& r : rows) {
      if (r.status == RowStatus::mismatch) return 1;
      if (r.status == RowStatus::not_certified) uncertified = true;
    }
    return uncertified ? 2 : 0;
  }
};

/// Canonical classes of every order p^m within the known bounds, for all primes p <= max_p.
inline std::vector<CandidateClass> enumerate_all(Residue max_p, int trials, std::uint64_t seed,
                                                 const SmoothnessOptions& opt = {}) {
  std::vector<CandidateClass> out;
  for (Residue p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    Residue n = p;
    for (int m = 1; n <= order_bound(p); ++m, n *= p) {
      auto part = enumerate_candidates(p, m, trials, derive_seed(seed, n), opt);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return out;
}

/// Compares a computed report with the expectation; flagged rows check the listed strata instead of the total.
inline RowStatus check_fixed_locus(const FixedLocusExpectation& exp, const FixedLocusCertificate& cert,
                                   std::vector<std::string>& problems, std::string& note) {
  if (!cert.certified()) {
    problems.push_back("counts differ between " + cert.primary.field + " and " + cert.secondary.field);
    return RowStatus::not_certified;
  }
  const auto& rep = cert.primary;
  if (!exp.flagged()) {
    auto dims = rep.positive_dimensions;
    auto want = exp.positive;
    std::sort(dims.begin(), dims.end());
    std::sort(want.begin(), want.end());
    if (rep.isolated != exp.isolated || dims != want) {
      problems.push_back("fixed locus " + rep.summary() + ", expected " + exp.expected_summary());
      return RowStatus::mismatch;
    }
    return RowStatus::ok;
  }
  std::uint64_t listed = 0, extra = 0;
  bool fine = true;
  auto check = [&](const std::map<std::string, std::uint64_t>& strata, std::uint64_t& sum) {
    for (auto& [label, want] : strata) {
      sum += want;
      const StratumResult* found = nullptr;
      for (auto& s : rep.strata)
        if (s.stratum.label() == label) found = &s;
      if (!found || found->dimension != 0 || found->count != want) {
        problems.push_back("stratum " + label + " expected " + std::to_string(want));
        fine = false;
      }
    }
  };
  check(exp.listed_strata, listed);
  check(exp.unlisted_strata, extra);
  if (listed != exp.isolated) {
    problems.push_back("listed strata do not add up to " + std::to_string(exp.isolated));
    fine = false;
  }
  if (rep.isolated != listed + extra || !rep.positive_dimensions.empty()) {
    problems.push_back("computed " + rep.summary() + " beyond listed and unlisted strata");
    fine = false;
  }
  note = "computed " + std::to_string(rep.isolated) + " = " + std::to_string(listed) + " listed + " +
         std::to_string(extra) + " (" + exp.flag + ")";
  return fine ? RowStatus::flagged : RowStatus::mismatch;
}

inline ClassificationTable classification_table(const TableOptions& opt = {}) {
  ClassificationTable t;
  t.options = opt;
  SmoothnessOptions sopt;
  sopt.q1 = opt.q1;
  sopt.q2 = opt.q2;
  sopt.threads = opt.threads;
  t.classes = enumerate_all(opt.max_p, opt.trials, opt.seed, sopt);
  if (opt.max_p >= 2) t.binary_tree = binary_tree_transcript(5);

  const auto& families = golden().families;
  FixedLocusOptions fopt;
  fopt.threads = 1;
  t.rows = parallel_map(
      families.size(),
      [&](std::size_t k) {
        TableRow row;
        row.record = families[k];
        const auto& aut = row.record.aut;
        row.basis = lambda_j(aut);
        row.canonical = aut.projective_order() == 1 ? Automorphism::identity() : canonicalize(normalize(aut));
        if (row.basis.size() != row.record.basis_size)
          row.problems.push_back("basis size " + std::to_string(row.basis.size()) + ", expected " +
                                 std::to_string(row.record.basis_size));
        if (auto W = witness_for(row.record.witness)) {
          row.witness_in_family = supported_in(*W, row.basis.monomials);
          row.witness_smooth = is_smooth_cubic(*W);
        }
        if (!row.witness_in_family) row.problems.push_back("witness not in family");
        if (!row.witness_smooth) row.problems.push_back("witness not smooth");
        if (row.canonical.n() > 1) {
          for (auto& c : t.classes)
            if (c.aut == row.canonical) row.class_status = c.smoothness.status;
          if (!row.class_status && aut.p() <= opt.max_p)
            row.problems.push_back("no enumerated class " + row.canonical.to_string());
          else if (row.class_status && *row.class_status != SmoothnessStatus::generically_smooth)
            row.problems.push_back("enumerated class is " + to_string(*row.class_status));
        }
        RowStatus fixed_status = RowStatus::ok;
        if (!opt.skip_fixed_loci && !row.record.fixed.whole) {
          auto T = change_field(random_member(row.basis, PrimeField(opt.q1), derive_seed(opt.seed, 1000 + k)),
                                RationalField{});
          row.fixed = fixed_lines_two_prime(T, aut, opt.q1, opt.q2, fopt);
          fixed_status = check_fixed_locus(row.record.fixed, *row.fixed, row.problems, row.note);
        }
        if (fixed_status == RowStatus::not_certified)
          row.status = RowStatus::not_certified;
        else if (fixed_status == RowStatus::mismatch || !row.problems.empty())
          row.status = RowStatus::mismatch;
        else
          row.status = fixed_status;
        return row;
      },
      opt.threads);

  for (auto& c : t.classes) {
    if (c.smoothness.status != SmoothnessStatus::generically_smooth) continue;
    bool matched = std::any_of(t.rows.begin(), t.rows.end(), [&](const TableRow& r) { return r.canonical == c.aut; });
    if (!matched) t.problems.push_back("generically smooth class without a table row: " + c.aut.to_string());
  }
  return t;
}

}  // namespace cubicsym
