#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "family.hpp"
#include "fixedlocus.hpp"
#include "golden.hpp"
#include "groebner.hpp"
#include "render.hpp"
#include "table.hpp"

namespace cubicsym {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  int trials = kDefaultTrials;
  int negative_samples = 50;
  int stability_members = 5;
  int order_ideal_trials = 20;
  std::set<int> only;  // empty: all
  std::set<int> skip;
  unsigned threads = default_concurrency();

  bool selected(int id) const { return (only.empty() || only.count(id)) && !skip.count(id); }
};

namespace detail {

inline std::set<Automorphism> golden_canonical_classes() {
  std::set<Automorphism> out;
  for (auto& f : golden().families)
    if (f.aut.projective_order() > 1) out.insert(canonicalize(normalize(f.aut)));
  return out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

/// Basis size by direct filtering of {0..3}^6, independent of lambda_all.
inline std::size_t brute_force_basis_size(const Automorphism& a) {
  std::size_t count = 0;
  for (int code = 0; code < 4096; ++code) {
    int alpha[6], deg = 0;
    std::int64_t ch = 0;
    for (int i = 0; i < 6; ++i) {
      alpha[i] = (code >> (2 * i)) & 3;
      deg += alpha[i];
      ch += static_cast<std::int64_t>(alpha[i]) * a.e(i);
    }
    if (deg == 3 && ch % a.n() == a.j()) ++count;
  }
  return count;
}

}  // namespace detail

inline CriterionResult check_classification(const VerifyOptions& o) {
  CriterionResult r{1, "classification completeness", true, {}};
  SmoothnessOptions sopt;
  sopt.threads = o.threads;
  auto classes = enumerate_all(31, o.trials, o.seed, sopt);
  std::set<Automorphism> smooth;
  for (auto& c : classes)
    if (c.smoothness.status == SmoothnessStatus::generically_smooth) smooth.insert(c.aut);
  auto expected = detail::golden_canonical_classes();
  std::size_t rows = 0;
  for (auto& f : golden().families) rows += f.aut.projective_order() > 1;
  r.passed = smooth == expected;
  r.details.push_back(std::to_string(smooth.size()) + " generically smooth canonical classes, expected " +
                      std::to_string(expected.size()) + " (from " + std::to_string(rows) + " nonidentity rows)");
  // rows sharing a canonical form
  std::map<Automorphism, std::vector<std::string>> by_class;
  for (auto& f : golden().families)
    if (f.aut.projective_order() > 1) by_class[canonicalize(normalize(f.aut))].push_back(f.id);
  for (auto& [a, ids] : by_class)
    if (ids.size() > 1) r.details.push_back("one orbit: " + detail::join(ids, " ~ "));
  for (auto& a : smooth)
    if (!expected.count(a)) r.details.push_back("unexpected smooth class " + a.to_string());
  for (auto& a : expected)
    if (!smooth.count(a)) r.details.push_back("missing class " + a.to_string());
  for (auto& c : classes)
    if (c.smoothness.status == SmoothnessStatus::generically_smooth && c.aut.p() > 11) {
      r.passed = false;
      r.details.push_back("smooth class for p > 11: " + c.aut.to_string());
    }
  return r;
}

inline CriterionResult check_order_bounds(const VerifyOptions& o) {
  CriterionResult r{2, "order bounds", true, {}};
  for (auto [p, m] : std::vector<std::pair<Residue, int>>{{2, 4}, {2, 5}, {3, 3}}) {
    auto classes = enumerate_candidates(p, m, o.trials, o.seed);
    std::size_t n = 1;
    for (int k = 0; k < m; ++k) n *= p;
    auto raw = solve_system(static_cast<Residue>(n));
    std::size_t smooth = std::count_if(classes.begin(), classes.end(), [](const CandidateClass& c) {
      return c.smoothness.status == SmoothnessStatus::generically_smooth;
    });
    if (smooth || !raw.empty()) r.passed = false;
    r.details.push_back("order " + std::to_string(n) + ": " + std::to_string(smooth) + " surviving, " +
                        std::to_string(raw.size()) + " solutions of the congruence system");
  }
  auto tree = binary_tree_transcript(5);
  std::string levels;
  for (auto& l : tree) levels += " L" + std::to_string(l.level) + "=" + std::to_string(l.solutions);
  if (tree[4].solutions || tree[5].solutions) r.passed = false;
  r.details.push_back("Z/32 tree:" + levels);
  return r;
}

inline CriterionResult check_basis_sizes(const VerifyOptions&) {
  CriterionResult r{3, "basis sizes", true, {}};
  std::vector<std::string> parts;
  for (auto& f : golden().families) {
    if (f.aut.projective_order() == 1) continue;
    auto size = lambda_j(f.aut).size();
    auto brute = detail::brute_force_basis_size(f.aut);
    if (size != f.basis_size || brute != f.basis_size) r.passed = false;
    parts.push_back(f.id + "=" + std::to_string(size) + (size == f.basis_size && brute == size ? "" : "(!)"));
  }
  r.details.push_back(detail::join(parts, " "));
  return r;
}

inline CriterionResult check_witnesses(const VerifyOptions&) {
  CriterionResult r{4, "witness smoothness over Q", true, {}};
  std::vector<std::string> parts;
  for (auto& [id, W] : witness_table()) {
    bool smooth = is_smooth_cubic(W);
    const FamilyRecord* rec = golden().find(id);
    bool inside = rec && supported_in(W, lambda_j(rec->aut).monomials);
    if (!smooth || !inside) r.passed = false;
    parts.push_back(id + (smooth ? "" : "(singular)") + (inside ? "" : "(outside family)"));
  }
  r.details.push_back(detail::join(parts, " "));
  return r;
}

inline CriterionResult check_negative_families(const VerifyOptions& o) {
  CriterionResult r{5, "negative families", true, {}};
  SmoothnessOptions sopt;
  sopt.threads = o.threads;
  for (std::size_t k = 0; k < golden().rejected.size(); ++k) {
    const auto& rec = golden().rejected[k];
    auto basis = lambda_j(rec.aut);
    auto star = star_condition(rec.aut, rec.aut.j());
    auto outcomes = sample_family(basis.monomials, o.negative_samples, derive_seed(o.seed, 5000 + k), sopt);
    auto singular = std::count_if(outcomes.begin(), outcomes.end(), [](const SampleOutcome& s) { return !s.smooth(); });
    bool ok = star && rec.aut.satisfies_symplectic_condition() && basis.size() == rec.basis_size &&
              singular == o.negative_samples;
    if (!ok) r.passed = false;
    r.details.push_back(rec.id + ": " + std::to_string(singular) + "/" + std::to_string(o.negative_samples) +
                        " singular, basis " + std::to_string(basis.size()));
  }
  return r;
}

inline CriterionResult check_fixed_loci(const VerifyOptions& o) {
  CriterionResult r{6, "fixed-locus counts", true, {}};
  const auto& fams = golden().families;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < fams.size(); ++k)
    if (!fams[k].fixed.whole && !fams[k].fixed.flagged()) idx.push_back(k);
  FixedLocusOptions fopt;
  fopt.threads = 1;
  auto lines = parallel_map(
      idx.size(),
      [&](std::size_t t) {
        const auto& f = fams[idx[t]];
        auto T = change_field(random_member(lambda_j(f.aut), PrimeField(kDefaultPrime), derive_seed(o.seed, 6000 + t)),
                              RationalField{});
        auto cert = fixed_lines_two_prime(T, f.aut, kDefaultPrime, kSecondPrime, fopt);
        std::vector<std::string> problems;
        std::string note;
        auto status = check_fixed_locus(f.fixed, cert, problems, note);
        return std::make_pair(status == RowStatus::ok, f.id + "=" + cert.primary.summary() +
                                                           (cert.certified() ? "" : " (not certified)"));
      },
      o.threads);
  for (auto& [ok, text] : lines) {
    if (!ok) r.passed = false;
    r.details.push_back(text);
  }
  return r;
}

inline CriterionResult check_v2_discrepancy(const VerifyOptions& o) {
  CriterionResult r{7, "V-(2) flagged counts", true, {}};
  FixedLocusOptions fopt;
  fopt.threads = 1;
  for (auto& f : golden().families) {
    if (!f.fixed.flagged()) continue;
    auto basis = lambda_j(f.aut);
    std::set<std::uint64_t> totals;
    bool listed_ok = true;
    std::string note;
    auto runs = parallel_map(
        static_cast<std::size_t>(o.stability_members),
        [&](std::size_t k) {
          auto T = change_field(random_member(basis, PrimeField(kDefaultPrime), derive_seed(o.seed, 7000 + k)),
                                RationalField{});
          return fixed_lines_two_prime(T, f.aut, kDefaultPrime, kSecondPrime, fopt);
        },
        o.threads);
    for (auto& cert : runs) {
      totals.insert(cert.primary.isolated);
      totals.insert(cert.secondary.isolated);
      std::vector<std::string> problems;
      if (check_fixed_locus(f.fixed, cert, problems, note) != RowStatus::flagged) listed_ok = false;
    }
    bool stable = totals.size() == 1;
    if (!stable || !listed_ok) r.passed = false;
    r.details.push_back(f.id + ": computed " + (stable ? std::to_string(*totals.begin()) : std::string("unstable")) +
                        " on " + std::to_string(o.stability_members) + " members x 2 primes; listed " +
                        std::to_string(f.fixed.isolated) + (listed_ok ? " contained" : " NOT contained") + "; " + note);
  }
  return r;
}

inline CriterionResult check_engine_oracles(const VerifyOptions& o) {
  CriterionResult r{8, "engine oracles", true, {}};
  PrimeField F(kDefaultPrime);
  auto surface = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", F, 4);
  auto lines = lines_in_subspace_count(surface, 4);
  if (lines != std::optional<std::uint64_t>(27)) r.passed = false;
  r.details.push_back("Fermat surface lines: " + (lines ? std::to_string(*lines) : std::string("inf")));

  auto fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", F);
  auto qd = quotient_dimension(buchberger<PrimeField>(F, 6, jacobian(fermat)));
  if (qd != std::optional<std::uint64_t>(64)) r.passed = false;
  r.details.push_back("Fermat Jacobian quotient dimension: " + (qd ? std::to_string(*qd) : std::string("inf")));

  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, F.modulus() - 1);
  int agree = 0;
  for (int t = 0; t < o.order_ideal_trials; ++t) {
    // three dense quadrics in three variables
    std::vector<Polynomial<PrimeField>> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Polynomial<PrimeField>::Term> terms;
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
          for (int c = 0; a + b + c <= 2; ++c) terms.emplace_back(Monomial{a, b, c}, coef(rng));
      gens.push_back(Polynomial<PrimeField>::from_terms(F, 3, terms));
    }
    auto g1 = quotient_dimension(buchberger<PrimeField>(F, 3, gens, MonomialOrder::grevlex()));
    auto g2 = quotient_dimension(buchberger<PrimeField>(F, 3, gens, MonomialOrder::lex()));
    if (g1 && g1 == g2) ++agree;
  }
  if (agree != o.order_ideal_trials) r.passed = false;
  r.details.push_back("grevlex/lex agreement: " + std::to_string(agree) + "/" + std::to_string(o.order_ideal_trials));

  std::vector<std::string> parts;
  for (auto& f : golden().families) {
    std::set<Residue> values(f.aut.exponents().begin(), f.aut.exponents().end());
    if (values.size() != 6) continue;
    auto basis = lambda_j(f.aut);
    auto oracle = distinct_eigenvalue_line_count(basis.monomials);
    auto T = random_member(basis, F, derive_seed(o.seed, 8000));
    auto rep = fixed_lines_report(T, f.aut);
    bool ok = rep.isolated == oracle && rep.positive_dimensions.empty();
    if (!ok) r.passed = false;
    parts.push_back(f.id + " " + std::to_string(oracle) + "/" + std::to_string(rep.isolated));
  }
  r.details.push_back("distinct-eigenvalue oracle/Groebner: " + detail::join(parts, ", "));
  return r;
}

/// In-process determinism: the same table at 1 worker and at the default worker count.
inline CriterionResult check_determinism(const VerifyOptions& o) {
  CriterionResult r{9, "determinism", true, {}};
  TableOptions t;
  t.seed = 7;
  t.threads = 1;
  auto a = render_table(classification_table(t), Format::md);
  t.threads = std::max(2u, o.threads);
  auto b = render_table(classification_table(t), Format::md);
  r.passed = a == b;
  r.details.push_back(std::string("table --seed 7 ") + (r.passed ? "identical" : "differs") + " across worker counts (" +
                      std::to_string(a.size()) + " bytes)");
  return r;
}

inline const std::vector<std::pair<int, std::function<CriterionResult(const VerifyOptions&)>>>& criteria() {
  static const std::vector<std::pair<int, std::function<CriterionResult(const VerifyOptions&)>>> all = {
      {1, check_classification}, {2, check_order_bounds},   {3, check_basis_sizes},
      {4, check_witnesses},      {5, check_negative_families}, {6, check_fixed_loci},
      {7, check_v2_discrepancy}, {8, check_engine_oracles}, {9, check_determinism},
  };
  return all;
}

inline std::vector<CriterionResult> run_verify(const VerifyOptions& o) {
  std::vector<CriterionResult> out;
  for (auto& [id, fn] : criteria())
    if (o.selected(id)) out.push_back(fn(o));
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::string s = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name;
  for (auto& d : r.details) s += "\n    " + d;
  return s;
}

}  // namespace cubicsym
