// Intersects the families of commuting automorphisms of coprime order and tests the result for smoothness.
#include <iostream>

#include <cubicsym/cubicsym.hpp>

using namespace cubicsym;

int main() {
  std::vector<const FamilyRecord*> rows;
  for (auto& f : golden().families)
    if (f.aut.projective_order() > 1) rows.push_back(&f);
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t y = x + 1; y < rows.size(); ++y) {
      const auto &a = rows[x]->aut, &b = rows[y]->aut;
      if (std::gcd(a.n(), b.n()) != 1) continue;
      auto c = compose_crt(a, b);
      auto basis = lambda_j(c);
      auto v = generic_smoothness(basis, 10, 0);
      std::cout << rows[x]->id << " x " << rows[y]->id << ": order " << c.n() << ", " << basis.size() << " monomials, "
                << to_string(v.status) << "\n";
    }
  return 0;
}
