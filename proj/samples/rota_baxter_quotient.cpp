// Commutative Rota-Baxter algebra of weight 1 on two generators: verifies the
// generator set at bounds, lists a few basis words and multiplies in the
// quotient.

#include <iostream>

#include "opalg/opalg.hpp"

int main() {
  using namespace opalg;
  const std::vector<Symbol> letters{Symbol("z1"), Symbol("z2")};
  GeneratorSet gs(OrderSpec(Preset::db, Alphabet::parse("z1,z2")), letters);
  gs.add_identity(resolve_catalog("rb:6?lambda=1").opis.front());
  gs.add_concrete(parse_poly("z2*z1 - z1*z2"), "comm");

  auto q = QuotientAlgebra::build(gs, {2, 1}, 10000);
  std::cout << q.report().label() << "\n";

  auto basis = enumerate_irr(gs.rules(), letters, {2, 1});
  std::cout << basis.size() << " basis words within (2, 1), first few:";
  for (std::size_t i = 0; i < 8 && i < basis.size(); ++i) std::cout << " " << to_string(basis[i]);
  std::cout << "\n";

  const OPoly a = parse_poly("[z1]"), b = parse_poly("[z2]");
  std::cout << "[z1] * [z2] = " << to_string(q.multiply(a, b)) << "\n";
  std::cout << "z2 * z1 = " << to_string(q.multiply(parse_poly("z2"), parse_poly("z1"))) << "\n";
  return q.report().passed ? 0 : 1;
}
