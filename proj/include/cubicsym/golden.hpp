#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith.hpp"
#include "cubicsym/golden_data.hpp"

namespace cubicsym {

struct FixedLocusExpectation {
  bool whole = false;  // identity: every line fixed
  std::uint64_t isolated = 0;
  std::vector<int> positive;
  std::string surface_type;
  std::string summary;
  /// Flagged rows: strata the expected count is made of, and computed strata outside it.
  std::map<std::string, std::uint64_t> listed_strata;
  std::map<std::string, std::uint64_t> unlisted_strata;
  std::string flag;

  bool flagged() const { return !flag.empty(); }
  std::string expected_summary() const {
    if (!summary.empty()) return summary;
    std::string s = std::to_string(isolated) + " points";
    for (int d : positive) s += " + dim-" + std::to_string(d) + " stratum";
    return s;
  }
};

struct FamilyRecord {
  std::string id;
  Automorphism aut;
  std::size_t basis_size = 0;
  std::string witness;
  FixedLocusExpectation fixed;
};

struct RejectedRecord {
  std::string id;
  Automorphism aut;
  std::size_t basis_size = 0;
  std::string reason;
};

struct GoldenData {
  std::vector<FamilyRecord> families;
  std::vector<RejectedRecord> rejected;

  const FamilyRecord* find(const std::string& id) const {
    for (auto& f : families)
      if (f.id == id) return &f;
    return nullptr;
  }
};

namespace detail {

inline Automorphism record_aut(const nlohmann::json& j) {
  auto e = j.at("e").get<std::vector<std::int64_t>>();
  std::array<std::int64_t, 6> ea{};
  std::copy(e.begin(), e.end(), ea.begin());
  return Automorphism::from_order(j.at("n").get<Residue>(), ea, j.at("j").get<std::int64_t>());
}

}  // namespace detail

inline GoldenData parse_golden(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  GoldenData g;
  for (auto& f : doc.at("families")) {
    FamilyRecord r;
    r.id = f.at("id").get<std::string>();
    r.aut = detail::record_aut(f);
    r.basis_size = f.at("basis_size").get<std::size_t>();
    r.witness = f.at("witness").get<std::string>();
    auto& fl = f.at("fixed_locus");
    r.fixed.whole = fl.value("whole", false);
    r.fixed.isolated = fl.value("isolated", std::uint64_t{0});
    r.fixed.positive = fl.value("positive", std::vector<int>{});
    r.fixed.surface_type = fl.value("surface_type", std::string{});
    r.fixed.summary = fl.value("summary", std::string{});
    r.fixed.listed_strata = fl.value("listed_strata", std::map<std::string, std::uint64_t>{});
    r.fixed.unlisted_strata = fl.value("unlisted_strata", std::map<std::string, std::uint64_t>{});
    r.fixed.flag = fl.value("flag", std::string{});
    g.families.push_back(std::move(r));
  }
  for (auto& f : doc.at("rejected"))
    g.rejected.push_back({f.at("id").get<std::string>(), detail::record_aut(f), f.at("basis_size").get<std::size_t>(),
                          f.value("reason", std::string{})});
  return g;
}

inline const GoldenData& golden() {
  static const GoldenData g = parse_golden(kGoldenFamiliesJson);
  return g;
}

}  // namespace cubicsym
