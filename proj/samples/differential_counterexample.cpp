// The weight-0 differential identity together with z1*z2 - 1 is not a
// Groebner-Shirshov basis: the single inclusion composition leaves an
// irreducible residue.

#include <iostream>

#include "opalg/opalg.hpp"

int main() {
  using namespace opalg;
  const std::vector<Symbol> letters{Symbol("z1"), Symbol("z2")};
  GeneratorSet gs(OrderSpec(Preset::dt, Alphabet::parse("z1,z2")), letters);
  gs.add_identity(resolve_catalog("diff:1?a=1,b=0,c=0").opis.front());
  gs.add_concrete(parse_poly("z1*z2 - 1"), "g");

  auto rep = check_gs(gs, {2, 1}, 10000);
  std::cout << rep.label() << " (" << rep.not_trivial << " non-trivial compositions)\n";
  for (const auto& f : rep.failures) {
    std::cout << "  " << to_string(f.kind) << " of " << f.g_label << " in " << f.f_label << " at w = " << to_string(f.w)
              << "\n    value   " << to_string(f.value) << "\n    residue " << to_string(f.triviality->residue) << "\n";
  }

  // the two reduction paths for [z1*z2] end in different normal forms
  RuleSet rules = gs.rules();
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
    ReduceOptions opt;
    opt.random_seed = seed;
    std::cout << "nf([z1*z2]) with seed " << seed << ": " << to_string(normal_form(parse_poly("[z1*z2]"), rules, opt).value)
              << "\n";
  }
  return rep.passed ? 1 : 0;
}
