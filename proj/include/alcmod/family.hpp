#ifndef ALCMOD_FAMILY_HPP
#define ALCMOD_FAMILY_HPP

#include "alcmod/syntax.hpp"

namespace alcmod {

// Benchmark family with an exponential-size general module. Instance n uses
// concept names A1..An, Abar1..Abarn (the target signature), choice names
// X/Y, guard names Z and one role s; the module over {A*, Abar*} consists of
// the 2ⁿ clauses ⊤ ⊑ C₁ ⊔ … ⊔ Cₙ with Cᵢ ∈ {Aᵢ, Abarᵢ}.
struct FamilyInstance {
  Ontology ontology;
  Signature sigma;
};

FamilyInstance make_family(std::size_t n);

}  // namespace alcmod

#endif  // ALCMOD_FAMILY_HPP
