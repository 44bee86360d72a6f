// Prints basis, diagram and invariant-line strata for one family of the table (default: III).
#include <iostream>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

int main(int argc, char** argv) {
  const std::string id = argc > 1 ? argv[1] : "III";
  const FamilyRecord* f = golden().find(id);
  if (!f) {
    std::cerr << "unknown family " << id << "\n";
    return 1;
  }
  auto basis = lambda_j(f->aut);
  std::cout << id << ": " << f->aut.to_string() << "\n" << basis.size() << " monomials: " << basis.to_string() << "\n";
  if (f->aut.projective_order() > 1) std::cout << "diagram: " << build_diagram(f->aut, f->aut.j()).to_string() << "\n";

  auto W = witness_for(f->witness);
  std::cout << "witness " << W->to_string() << (is_smooth_cubic(*W) ? " is smooth\n" : " is singular\n");
  if (f->fixed.whole) return 0;

  auto cert = fixed_lines_two_prime(change_field(random_member(basis, PrimeField(kDefaultPrime), 1), RationalField{}), f->aut);
  for (auto& s : cert.primary.strata)
    if (s.dimension >= 0)
      std::cout << "  " << s.stratum.label() << ": dim " << s.dimension
                << (s.count ? ", " + std::to_string(*s.count) + " lines" : std::string()) << "\n";
  std::cout << "total " << cert.primary.summary() << (cert.certified() ? " (both primes agree)\n" : " (primes disagree)\n");
  return 0;
}
