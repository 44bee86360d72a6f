// Command-line front end. Exit codes: 0 ok, 1 mismatch or singular, 2 not certified, 3 error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

namespace {

constexpr int kOk = 0, kMismatch = 1, kNotCertified = 2, kError = 3;

struct RunConfig {
  std::string format = "md";
  std::string output;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  std::string chars;
};

/// q1,q2 from --char, else CUBICSYM_CHARS, else the built-in pair.
std::pair<std::uint32_t, std::uint32_t> characteristic_pair(const std::string& flag) {
  std::string text = flag;
  if (text.empty())
    if (const char* env = std::getenv("CUBICSYM_CHARS")) text = env;
  if (text.empty()) return {kDefaultPrime, kSecondPrime};
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("characteristic pair must be q1,q2");
  auto q1 = static_cast<std::uint32_t>(std::stoul(text.substr(0, comma)));
  auto q2 = static_cast<std::uint32_t>(std::stoul(text.substr(comma + 1)));
  for (auto q : {q1, q2})
    if (!is_prime(q) || q <= 3) throw std::invalid_argument("characteristics must be primes > 3");
  return {q1, q2};
}

/// Inline text, or the contents of a file when the argument names one.
std::string text_or_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

Automorphism automorphism_arg(const std::string& family, const std::string& aut_json) {
  if (!family.empty()) {
    const FamilyRecord* rec = golden().find(family);
    if (!rec) throw std::invalid_argument("unknown family id: " + family);
    return rec->aut;
  }
  if (aut_json.empty()) throw std::invalid_argument("give --family or --aut");
  return Automorphism::from_json(nlohmann::json::parse(text_or_file(aut_json)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal symplectic automorphisms of cubic fourfolds"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool randomized) {
    sub->add_option("--format", cfg.format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
    sub->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    if (randomized) {
      sub->add_option("--seed", cfg.seed, "random seed (default 0)");
      sub->add_option("--trials", cfg.trials, "random members per family (default 20)")->check(CLI::PositiveNumber);
    }
  };

  Residue prime = 0;
  int exponent = 0;
  auto* classify = app.add_subcommand("classify", "enumerate canonical classes of order p^m");
  classify->add_option("--prime,-p", prime, "prime p")->required();
  classify->add_option("--exponent,-m", exponent, "exponent m (default: every m within the order bound)");
  add_common(classify, true);

  std::string family, aut_json;
  std::int64_t character = -1;
  auto* basis = app.add_subcommand("basis", "monomial basis of a family");
  basis->add_option("--family", family, "family id from the table");
  basis->add_option("--aut", aut_json, "automorphism JSON (text or file)");
  basis->add_option("--j", character, "character (default: the automorphism's)");
  add_common(basis, false);

  std::string poly_arg, field_arg = "Fq";
  auto* smooth = app.add_subcommand("smooth", "Jacobian smoothness test of a cubic form");
  smooth->add_option("--poly", poly_arg, "polynomial text or file")->required();
  smooth->add_option("--field", field_arg, "Q, Fq (two default primes) or F<q>");
  smooth->add_option("--char", cfg.chars, "characteristic pair q1,q2 for Fq");

  std::string basis_arg;
  auto* famsmooth = app.add_subcommand("family-smoothness", "generic smoothness of a family");
  famsmooth->add_option("--basis", basis_arg, "FamilyBasis JSON (text or file)")->required();
  famsmooth->add_option("--char", cfg.chars, "characteristic pair q1,q2");
  add_common(famsmooth, true);

  auto* fixed = app.add_subcommand("fixed-lines", "invariant lines of X under f");
  fixed->add_option("--family", family, "family id from the table");
  fixed->add_option("--aut", aut_json, "automorphism JSON (text or file)");
  fixed->add_option("--poly", poly_arg, "cubic (text or file), or 'random' (default)");
  fixed->add_option("--char", cfg.chars, "characteristic pair q1,q2");
  add_common(fixed, true);

  std::string a_json, b_json;
  auto* compose = app.add_subcommand("compose", "CRT composition of commuting automorphisms");
  compose->add_option("--a", a_json, "first automorphism JSON")->required();
  compose->add_option("--b", b_json, "second automorphism JSON")->required();
  compose->add_option("--output,-o", cfg.output, "write to this file instead of stdout");

  bool skip_fixed = false;
  auto* table = app.add_subcommand("table", "full classification table with golden comparison");
  table->add_flag("--skip-fixed-loci", skip_fixed, "classification only");
  table->add_option("--char", cfg.chars, "characteristic pair q1,q2");
  add_common(table, true);

  std::vector<int> only, skip;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "criterion ids to run")->delimiter(',');
  verify->add_option("--skip", skip, "criterion ids to skip")->delimiter(',');
  verify->add_option("--seed", cfg.seed, "random seed (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    const Format fmt = parse_format(cfg.format);
    auto [q1, q2] = characteristic_pair(cfg.chars);
    SmoothnessOptions sopt;
    sopt.q1 = q1;
    sopt.q2 = q2;

    if (*classify) {
      if (!is_prime(prime)) throw std::invalid_argument("--prime must be prime");
      std::vector<CandidateClass> classes;
      if (exponent > 0) {
        classes = enumerate_candidates(prime, exponent, cfg.trials, cfg.seed, sopt);
      } else {
        Residue n = prime;
        for (int m = 1; n <= order_bound(prime); ++m, n *= prime) {
          auto part = enumerate_candidates(prime, m, cfg.trials, derive_seed(cfg.seed, n), sopt);
          classes.insert(classes.end(), part.begin(), part.end());
        }
      }
      emit(cfg, render_classes(classes, fmt));
      return kOk;
    }

    if (*basis) {
      auto aut = automorphism_arg(family, aut_json);
      auto b = character >= 0 ? lambda_j(aut, mod(character, aut.n())) : lambda_j(aut);
      auto star = star_condition(aut, b.j);
      if (fmt == Format::json) {
        auto j = b.to_json();
        j["star_condition"] = star.holds;
        if (!star) j["star_violating_index"] = star.violating_index;
        emit(cfg, j.dump(2) + "\n");
      } else {
        std::string s;
        for (auto& v : b.monomials) s += v.to_string() + "\n";
        s += "# " + std::to_string(b.size()) + " monomials, condition (*) " +
             (star ? std::string("holds") : "fails at i = " + std::to_string(star.violating_index)) + "\n";
        emit(cfg, s);
      }
      return kOk;
    }

    if (*smooth) {
      auto text = text_or_file(poly_arg);
      if (field_arg == "Q") {
        bool ok = is_smooth_cubic(parse_polynomial(text, RationalField{}));
        std::cout << (ok ? "smooth" : "singular") << " over Q\n";
        return ok ? kOk : kMismatch;
      }
      if (field_arg == "Fq") {
        auto T = parse_polynomial(text, RationalField{});
        for (auto q : {q1, q2})
          if (is_smooth_cubic(change_field(T, PrimeField(q)))) {
            std::cout << "smooth (certified mod " << q << ")\n";
            return kOk;
          }
        std::cout << "singular mod " << q1 << " and mod " << q2 << "\n";
        return kMismatch;
      }
      if (field_arg.size() > 1 && field_arg[0] == 'F') {
        auto q = static_cast<std::uint32_t>(std::stoul(field_arg.substr(1)));
        if (!is_prime(q)) throw std::invalid_argument("field characteristic must be prime");
        bool ok = is_smooth_cubic(parse_polynomial(text, PrimeField(q)));
        std::cout << (ok ? "smooth (certified mod " : "not certified mod ") << q << ")\n";
        return ok ? kOk : kNotCertified;
      }
      throw std::invalid_argument("--field must be Q, Fq or F<q>");
    }

    if (*famsmooth) {
      auto b = FamilyBasis::from_json(nlohmann::json::parse(text_or_file(basis_arg)));
      auto v = generic_smoothness(b, cfg.trials, cfg.seed, sopt);
      auto j = v.to_json();
      j["basis_size"] = b.size();
      j["seed"] = cfg.seed;
      if (fmt == Format::json) {
        emit(cfg, j.dump(2) + "\n");
      } else {
        std::string s = to_string(v.status) + " (" + std::to_string(b.size()) + " monomials, " +
                        std::to_string(v.samples) + " samples)\n";
        if (v.witness) s += "witness over " + v.witness_field + ": " + v.witness->to_string() + "\n";
        if (v.singular_locus_dimension) s += "singular locus dimension " + std::to_string(*v.singular_locus_dimension) + "\n";
        if (!v.note.empty()) s += v.note + "\n";
        emit(cfg, s);
      }
      return kOk;
    }

    if (*fixed) {
      auto aut = automorphism_arg(family, aut_json);
      Polynomial<RationalField> T;
      if (poly_arg.empty() || poly_arg == "random")
        T = change_field(random_member(lambda_j(aut), PrimeField(q1), cfg.seed), RationalField{});
      else
        T = parse_polynomial(text_or_file(poly_arg), RationalField{});
      auto cert = fixed_lines_two_prime(T, aut, q1, q2);
      emit(cfg, render_fixed(cert, fmt));
      return cert.certified() ? kOk : kNotCertified;
    }

    if (*compose) {
      auto a = Automorphism::from_json(nlohmann::json::parse(text_or_file(a_json)));
      auto b = Automorphism::from_json(nlohmann::json::parse(text_or_file(b_json)));
      emit(cfg, compose_crt(a, b).to_json().dump() + "\n");
      return kOk;
    }

    if (*table) {
      TableOptions t;
      t.seed = cfg.seed;
      t.trials = cfg.trials;
      t.skip_fixed_loci = skip_fixed;
      t.q1 = q1;
      t.q2 = q2;
      auto result = classification_table(t);
      emit(cfg, render_table(result, fmt));
      return result.exit_code();
    }

    if (*verify) {
      VerifyOptions v;
      v.seed = verify->count("--seed") ? cfg.seed : 7;
      v.only = {only.begin(), only.end()};
      v.skip = {skip.begin(), skip.end()};
      bool all = true;
      for (auto& r : run_verify(v)) {
        std::cout << format_result(r) << "\n";
        all = all && r.passed;
      }
      return all ? kOk : kMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
