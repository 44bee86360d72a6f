#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "table.hpp"

namespace cubicsym {

enum class Format { md, json, csv };

inline Format parse_format(const std::string& s) {
  if (s == "md") return Format::md;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + s);
}

namespace detail {

inline std::string signed_exponents(const Automorphism& a) {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(signed_residue(a.e(i), a.n()));
  return s + ")";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string witness_text(const TableRow& r) {
  auto W = witness_for(r.record.witness);
  return W ? W->to_string() : "";
}

}  // namespace detail

inline nlohmann::json classes_json(const std::vector<CandidateClass>& classes) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& c : classes) arr.push_back(c.to_json());
  return arr;
}

inline nlohmann::json table_json(const ClassificationTable& t) {
  nlohmann::json j;
  j["seed"] = t.options.seed;
  j["trials"] = t.options.trials;
  j["fields"] = {PrimeField(t.options.q1).name(), PrimeField(t.options.q2).name()};
  j["exit_code"] = t.exit_code();
  nlohmann::json rows = nlohmann::json::array();
  for (auto& r : t.rows) {
    nlohmann::json row;
    row["family"] = r.record.id;
    row["p"] = r.record.aut.p();
    row["n"] = r.record.aut.n();
    row["aut"] = r.record.aut.to_json(true);
    row["canonical"] = r.canonical.to_json();
    row["basis_size"] = r.basis.size();
    nlohmann::json mons = nlohmann::json::array();
    for (auto& v : r.basis.monomials) mons.push_back(v.to_string());
    row["basis"] = mons;
    row["witness"] = detail::witness_text(r);
    row["witness_smooth"] = r.witness_smooth;
    row["class_status"] = r.class_status ? nlohmann::json(to_string(*r.class_status)) : nlohmann::json(nullptr);
    row["fixed_locus"] = r.fixed_summary();
    row["fixed_locus_expected"] = r.record.fixed.expected_summary();
    if (!r.record.fixed.surface_type.empty()) row["surface_type_annotation"] = r.record.fixed.surface_type;
    if (r.fixed) row["fixed_locus_detail"] = r.fixed->to_json();
    row["status"] = to_string(r.status);
    if (!r.note.empty()) row["note"] = r.note;
    row["problems"] = r.problems;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["classes"] = classes_json(t.classes);
  nlohmann::json tree = nlohmann::json::array();
  for (auto& l : t.binary_tree) tree.push_back({{"level", l.level}, {"solutions", l.solutions}});
  j["binary_tree_z32"] = tree;
  j["problems"] = t.problems;
  return j;
}

inline std::string render_table(const ClassificationTable& t, Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    out << table_json(t).dump(2) << "\n";
    return out.str();
  }
  if (f == Format::csv) {
    out << "family,p,n,exponents,j,basis_size,basis,witness,smoothness,fixed_locus,expected,status\n";
    for (auto& r : t.rows) {
      const auto& a = r.record.aut;
      std::vector<std::string> cells = {r.record.id,
                                        std::to_string(a.p()),
                                        std::to_string(a.n()),
                                        detail::signed_exponents(a),
                                        std::to_string(signed_residue(a.j(), a.n())),
                                        std::to_string(r.basis.size()),
                                        r.basis.to_string(),
                                        detail::witness_text(r),
                                        r.witness_smooth ? "smooth" : "singular",
                                        r.fixed_summary(),
                                        r.record.fixed.expected_summary(),
                                        to_string(r.status)};
      for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << detail::csv_field(cells[k]);
      out << "\n";
    }
    return out.str();
  }
  out << "| Family | p | n | exponents | j | size | basis | witness | fixed locus | expected | status |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (auto& r : t.rows) {
    const auto& a = r.record.aut;
    std::string expected = r.record.fixed.expected_summary();
    if (!r.record.fixed.surface_type.empty()) expected += " (" + r.record.fixed.surface_type + ", annotation)";
    out << "| " << r.record.id << " | " << a.p() << " | " << a.n() << " | " << detail::signed_exponents(a) << " | "
        << signed_residue(a.j(), a.n()) << " | " << r.basis.size() << " | " << r.basis.to_string() << " | "
        << detail::witness_text(r) << (r.witness_smooth ? "" : " (NOT smooth)") << " | " << r.fixed_summary() << " | "
        << expected << " | " << to_string(r.status) << " |\n";
  }
  bool any_note = false;
  for (auto& r : t.rows) {
    if (r.note.empty() && r.problems.empty()) continue;
    if (!any_note) out << "\nNotes:\n";
    any_note = true;
    if (!r.note.empty()) out << "- " << r.record.id << ": " << r.note << "\n";
    for (auto& p : r.problems) out << "- " << r.record.id << ": " << p << "\n";
  }
  out << "\nEnumerated canonical classes (" << t.classes.size() << "):\n\n";
  out << "| n | exponents | j | size | verdict | diagram cycles |\n|---|---|---|---|---|---|\n";
  for (auto& c : t.classes) {
    std::string cyc;
    if (c.diagram)
      for (int l : c.diagram->cycle_lengths()) cyc += (cyc.empty() ? "" : ",") + std::to_string(l);
    out << "| " << c.aut.n() << " | " << detail::signed_exponents(c.aut) << " | " << signed_residue(c.aut.j(), c.aut.n())
        << " | " << c.basis.size() << " | " << to_string(c.smoothness.status) << " | " << cyc << " |\n";
  }
  if (!t.binary_tree.empty()) {
    out << "\nZ/32 binary tree (j = 0), solutions by deepest level:";
    for (auto& l : t.binary_tree) out << " L" << l.level << "=" << l.solutions;
    out << "\n";
  }
  for (auto& p : t.problems) out << "\nproblem: " << p << "\n";
  return out.str();
}

inline std::string render_classes(const std::vector<CandidateClass>& classes, Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    out << classes_json(classes).dump(2) << "\n";
  } else if (f == Format::csv) {
    out << "n,exponents,j,basis_size,verdict,witness,samples\n";
    for (auto& c : classes)
      out << c.aut.n() << "," << detail::csv_field(detail::signed_exponents(c.aut)) << ","
          << signed_residue(c.aut.j(), c.aut.n()) << "," << c.basis.size() << "," << to_string(c.smoothness.status)
          << "," << detail::csv_field(c.smoothness.witness ? c.smoothness.witness->to_string() : "") << ","
          << c.smoothness.samples << "\n";
  } else {
    out << "| n | exponents | j | size | verdict | evidence |\n|---|---|---|---|---|---|\n";
    for (auto& c : classes) {
      std::string ev;
      if (c.smoothness.witness)
        ev = "witness over " + c.smoothness.witness_field + ": " + c.smoothness.witness->to_string();
      else
        ev = std::to_string(c.smoothness.samples) + " singular samples";
      if (c.smoothness.singular_locus_dimension)
        ev += ", singular locus dim " + std::to_string(*c.smoothness.singular_locus_dimension);
      out << "| " << c.aut.n() << " | " << detail::signed_exponents(c.aut) << " | "
          << signed_residue(c.aut.j(), c.aut.n()) << " | " << c.basis.size() << " | " << to_string(c.smoothness.status)
          << " | " << ev << " |\n";
    }
  }
  return out.str();
}

inline std::string render_fixed(const FixedLocusCertificate& c, Format f) {
  if (f == Format::json) return c.to_json().dump(2) + "\n";
  std::ostringstream out;
  if (f == Format::csv) {
    out << "stratum,dimension,count\n";
    for (auto& s : c.primary.strata)
      out << s.stratum.label() << "," << s.dimension << "," << (s.count ? std::to_string(*s.count) : "") << "\n";
    return out.str();
  }
  out << "| stratum | dimension | count |\n|---|---|---|\n";
  for (auto& s : c.primary.strata)
    out << "| " << s.stratum.label() << " | " << s.dimension << " | " << (s.count ? std::to_string(*s.count) : "-")
        << " |\n";
  out << "\nTotal: " << c.primary.summary() << " (" << c.primary.field << ", " << c.secondary.field << ": "
      << (c.certified() ? "certified" : "not-certified") << ")\n";
  if (!c.primary.note.empty()) out << c.primary.note << "\n";
  return out.str();
}

}  // namespace cubicsym
