#include "alcmod/family.hpp"

#include <stdexcept>

namespace alcmod {

FamilyInstance make_family(std::size_t n) {
  if (n == 0) throw std::invalid_argument("family instance needs n >= 1");
  FamilyInstance f;
  auto C = [](const std::string& base, std::size_t i) {
    return Concept::atom(concept_name(base + std::to_string(i)));
  };
  Name s = role_name("s");

  std::vector<Concept> zs;
  for (std::size_t i = 1; i <= n; ++i) zs.push_back(C("Z", i));
  f.ontology.add(Axiom{Concept::conj(std::move(zs)), Concept::bottom()});

  for (std::size_t i = 1; i <= n; ++i)
    f.ontology.add(Axiom{Concept::disj({C("X", i), C("Y", i)}), C("Z", i)});

  f.ontology.add(
      Axiom{Concept::top(), Concept::disj({C("A", 1), Concept::exists(s, C("X", 1))})});
  f.ontology.add(
      Axiom{Concept::top(),
            Concept::disj({C("Abar", 1), Concept::exists(s, C("Y", 1))})});
  for (std::size_t j = 2; j <= n; ++j) {
    f.ontology.add(
        Axiom{Concept::top(),
              Concept::disj({C("A", j), Concept::forall(s, C("X", j))})});
    f.ontology.add(
        Axiom{Concept::top(),
              Concept::disj({C("Abar", j), Concept::forall(s, C("Y", j))})});
  }

  for (std::size_t i = 1; i <= n; ++i) {
    f.sigma.concepts.insert("A" + std::to_string(i));
    f.sigma.concepts.insert("Abar" + std::to_string(i));
  }
  return f;
}

}  // namespace alcmod
