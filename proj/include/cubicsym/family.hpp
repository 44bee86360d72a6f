#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eigenbasis.hpp"
#include "groebner.hpp"
#include "parallel.hpp"

namespace cubicsym {

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 65537;
inline constexpr int kDefaultTrials = 20;

/// Named smooth members, keyed by family id, in table order.
inline const std::vector<std::pair<std::string, std::string>>& witness_texts() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"I", "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x0 + x5^3"},
      {"II", "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x5 + x5^2*x0"},
      {"III", "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x0 + x4^3 + x5^3"},
      {"IV-(1)", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"},
      {"IV-(2)", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"},
      {"IV-(3)", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3"},
      {"IV-(4)", "x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^2*x4 + x4^2*x5 + x5^2*x3"},
      {"IV-(5)", "x0^2*x1 + x1^2*x2 + x2^2*x0 + x3^3 + x4^3 + x5^3"},
      {"V-(1)", "x4^2*x0 + x5^2*x1 + x4*x5*x2 + x0^3 + x1^3 + x2^3 + x3^3"},
      {"V-(2)(a)", "x0^3 + x1^3 + x2^2*x0 + x3^2*x1 + x4^2*x2 + x5^2*x3"},
      {"V-(2)(b)", "x2^3 + x3^3 + x2*x0^2 + x3*x1^2 + x0*x4^2 + x1*x5^2"},
      {"V-(3)", "x0^3 + x0*x1^2 + x1*x2^2 + x1*x3^2 + x0*x2*x3 + x3*x4^2 + x2*x5^2"},
  };
  return table;
}

inline std::vector<std::pair<std::string, Polynomial<RationalField>>> witness_table() {
  std::vector<std::pair<std::string, Polynomial<RationalField>>> out;
  for (auto& [id, text] : witness_texts()) out.emplace_back(id, parse_polynomial(text, RationalField{}));
  return out;
}

inline std::optional<Polynomial<RationalField>> witness_for(const std::string& id) {
  for (auto& [key, text] : witness_texts())
    if (key == id) return parse_polynomial(text, RationalField{});
  return std::nullopt;
}

inline bool supported_in(const Polynomial<RationalField>& T, const std::vector<ExponentVector>& monomials) {
  for (auto& [m, c] : T.terms())
    if (std::find(monomials.begin(), monomials.end(), ExponentVector::from_monomial(m)) == monomials.end())
      return false;
  return true;
}

enum class SmoothnessStatus { generically_smooth, probably_all_singular, star_violated };

inline std::string to_string(SmoothnessStatus s) {
  switch (s) {
    case SmoothnessStatus::generically_smooth: return "generically-smooth";
    case SmoothnessStatus::probably_all_singular: return "probably-all-singular";
    case SmoothnessStatus::star_violated: return "star-violated";
  }
  return "?";
}

/// Outcome of one random member: smooth at the first prime, at the second, or at neither.
struct SampleOutcome {
  std::uint64_t seed = 0;
  bool smooth_q1 = false;
  bool smooth_q2 = false;
  bool smooth() const { return smooth_q1 || smooth_q2; }
};

struct SmoothnessVerdict {
  SmoothnessStatus status = SmoothnessStatus::probably_all_singular;
  /// Integer-coefficient smooth member; its certificate field is witness_field.
  std::optional<Polynomial<RationalField>> witness;
  std::string witness_field;
  std::string witness_name;  // family id when a named witness was used
  std::size_t samples = 0;
  std::vector<std::string> fields;
  std::vector<SampleOutcome> sample_log;
  /// Projective dimension of the singular locus of the first sample, when sampled and singular.
  std::optional<int> singular_locus_dimension;
  int star_violating_index = -1;
  std::string note;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["status"] = to_string(status);
    j["witness"] = witness ? nlohmann::json(witness->to_string()) : nlohmann::json(nullptr);
    if (witness) j["witness_field"] = witness_field;
    if (!witness_name.empty()) j["witness_name"] = witness_name;
    j["samples"] = samples;
    j["fields"] = fields;
    if (singular_locus_dimension) j["singular_locus_dimension"] = *singular_locus_dimension;
    if (star_violating_index >= 0) j["star_violating_index"] = star_violating_index;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

struct SmoothnessOptions {
  std::uint32_t q1 = kDefaultPrime;
  std::uint32_t q2 = kSecondPrime;
  bool use_named_witnesses = true;
  unsigned threads = default_concurrency();
};

/// Smoothness of one random member; a failure at q1 is retried with the same integer coefficients at q2.
inline SampleOutcome sample_member(const std::vector<ExponentVector>& monomials, std::uint64_t seed,
                                   const SmoothnessOptions& opt) {
  SampleOutcome out;
  out.seed = seed;
  auto T = random_member(monomials, PrimeField(opt.q1), seed);
  out.smooth_q1 = is_smooth_cubic(T);
  if (!out.smooth_q1) out.smooth_q2 = is_smooth_cubic(change_field(T, PrimeField(opt.q2)));
  return out;
}

/// Jacobian ideal dimension of a member, as a projective dimension (-1 means smooth).
inline int singular_locus_dimension(const Polynomial<PrimeField>& T) {
  auto gb = buchberger<PrimeField>(T.field(), 6, jacobian(T));
  return krull_dimension(gb) - 1;
}

/// Named witness first, then random members in index order; the first smooth one decides.
inline SmoothnessVerdict generic_smoothness(const std::vector<ExponentVector>& monomials, int trials,
                                            std::uint64_t seed, const SmoothnessOptions& opt = {}) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  SmoothnessVerdict v;
  if (monomials.empty()) {
    v.note = "empty family";
    return v;
  }
  if (opt.use_named_witnesses) {
    for (auto& [id, W] : witness_table()) {
      if (!supported_in(W, monomials) || !is_smooth_cubic(W)) continue;
      v.status = SmoothnessStatus::generically_smooth;
      v.witness = W;
      v.witness_field = "Q";
      v.witness_name = id;
      v.fields = {"Q"};
      return v;
    }
  }
  v.fields = {PrimeField(opt.q1).name(), PrimeField(opt.q2).name()};
  // Batches of the worker count keep the verdict independent of scheduling.
  const std::size_t batch = std::max(1u, opt.threads);
  for (std::size_t start = 0; start < static_cast<std::size_t>(trials); start += batch) {
    std::size_t len = std::min<std::size_t>(batch, trials - start);
    auto outcomes = parallel_map(
        len, [&](std::size_t k) { return sample_member(monomials, derive_seed(seed, start + k), opt); },
        opt.threads);
    for (auto& o : outcomes) {
      v.sample_log.push_back(o);
      ++v.samples;
      if (o.smooth()) {
        v.status = SmoothnessStatus::generically_smooth;
        auto T = random_member(monomials, PrimeField(opt.q1), o.seed);
        v.witness = change_field(T, RationalField{});
        v.witness_field = o.smooth_q1 ? PrimeField(opt.q1).name() : PrimeField(opt.q2).name();
        return v;
      }
    }
  }
  v.singular_locus_dimension = singular_locus_dimension(random_member(monomials, PrimeField(opt.q1), v.sample_log[0].seed));
  return v;
}

inline SmoothnessVerdict generic_smoothness(const FamilyBasis& basis, int trials, std::uint64_t seed,
                                            const SmoothnessOptions& opt = {}) {
  return generic_smoothness(basis.monomials, trials, seed, opt);
}

/// Runs exactly `count` samples without stopping early.
inline std::vector<SampleOutcome> sample_family(const std::vector<ExponentVector>& monomials, int count,
                                                std::uint64_t seed, const SmoothnessOptions& opt = {}) {
  return parallel_map(
      static_cast<std::size_t>(count),
      [&](std::size_t k) { return sample_member(monomials, derive_seed(seed, k), opt); }, opt.threads);
}

}  // namespace cubicsym
