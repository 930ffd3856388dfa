#include <doctest.h>

#include "alcmod/normalize.hpp"
#include "helpers.hpp"

using namespace alcmod;
using testutil::defs;
using testutil::ont;

namespace {

// O from the running example.
const char* kRunningExample = R"(
  SubClassOf(A1 ObjectUnionOf(ObjectSomeValuesFrom(r ObjectSomeValuesFrom(s B1)) ObjectSomeValuesFrom(r B2)))
  SubClassOf(ObjectIntersectionOf(B1 B3) owl:Nothing)
  SubClassOf(A2 ObjectUnionOf(A3 ObjectAllValuesFrom(s B3)))
  SubClassOf(B4 A4)
  SubClassOf(B2 B4)
)";

std::vector<Concept> clause_concepts(const NormalizedOntology& n) {
  std::vector<Concept> out;
  for (const auto& c : n.clauses) out.push_back(c.to_concept());
  return out;
}

}  // namespace

TEST_CASE("clausification of the running example") {
  NormalizedOntology n = clausify(ont(kRunningExample));
  REQUIRE(n.clauses.size() == 9);
  std::vector<Concept> expected = {
      defs("ObjectUnionOf(ObjectComplementOf(A1) ObjectSomeValuesFrom(r Dv1) ObjectSomeValuesFrom(r Dv3))"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv1) ObjectSomeValuesFrom(s Dv2))"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv2) B1)"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv3) B2)"),
      defs("ObjectUnionOf(ObjectComplementOf(A2) A3 ObjectAllValuesFrom(s Dv4))"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv4) B3)"),
      defs("ObjectUnionOf(ObjectComplementOf(B1) ObjectComplementOf(B3))"),
      defs("ObjectUnionOf(ObjectComplementOf(B2) B4)"),
      defs("ObjectUnionOf(ObjectComplementOf(B4) A4)"),
  };
  CHECK(testutil::match_up_to_definers(clause_concepts(n), expected));

  // Every definer has exactly one positive occurrence and a definition.
  CHECK(n.positive_occurrence.size() == 4);
  CHECK(n.definition.size() == 4);
  for (const auto& [d, occ] : n.positive_occurrence)
    CHECK(n.definition.count(d) == 1);
}

TEST_CASE("definers replace atomic fillers too") {
  NormalizedOntology n = clausify(ont("SubClassOf(A ObjectSomeValuesFrom(r B))"));
  REQUIRE(n.clauses.size() == 2);
  CHECK(n.definition.size() == 1);
  CHECK(n.definition.begin()->second == testutil::cpt("B"));
}

TEST_CASE("CNF distribution over conjunction") {
  // A ⊑ B ⊓ C gives two clauses.
  NormalizedOntology n =
      clausify(ont("SubClassOf(A ObjectIntersectionOf(B C))"));
  CHECK(n.clauses.size() == 2);
  // (A⊓B) ⊑ ⊥ gives a single binary clause.
  NormalizedOntology m =
      clausify(ont("SubClassOf(ObjectIntersectionOf(A B) owl:Nothing)"));
  REQUIRE(m.clauses.size() == 1);
  CHECK(m.clauses[0].lits.size() == 2);
}

TEST_CASE("tautological clauses are dropped") {
  NormalizedOntology n = clausify(ont("SubClassOf(A A)"));
  CHECK(n.clauses.empty());
  NormalizedOntology m = clausify(ont("SubClassOf(A owl:Thing)"));
  CHECK(m.clauses.empty());
}

TEST_CASE("definer nesting order on the running example") {
  NormalizedOntology n = clausify(ont(kRunningExample));
  DefinerOrder ord = definer_order(n.clauses);
  CHECK(ord.acyclic);
  // Exactly one definer is nested below another (the B1-definer inside the
  // ∃s.B1-definer); everything else is flat.
  std::size_t edges = 0;
  std::string outer, inner;
  for (const auto& [d, set] : ord.nested_below)
    for (const auto& i : set) {
      ++edges;
      outer = d;
      inner = i;
    }
  REQUIRE(edges == 1);
  CHECK(ord.above.at(inner).count(outer) == 1);
  CHECK(ord.above.at(inner).count(inner) == 1);
  CHECK(ord.above.at(outer) == std::set<std::string>{outer});
}

TEST_CASE("filler_roles maps atomic fillers to their roles") {
  NormalizedOntology n = clausify(ont(kRunningExample));
  auto rol = filler_roles(n.clauses);
  std::multiset<std::string> roles;
  for (const auto& [d, rs] : rol)
    for (const auto& r : rs) roles.insert(r);
  CHECK(roles == std::multiset<std::string>{"r", "r", "s", "s"});
}

TEST_CASE("provenance traces clauses back to axioms") {
  Ontology o = ont(kRunningExample);
  NormalizedOntology n = clausify(o);
  // Clause ids of the three clauses from axiom 0 (definer chain included).
  std::set<std::size_t> roots =
      n.provenance.trace_to_axioms({n.clauses[0].id, n.clauses[1].id});
  CHECK(roots == std::set<std::size_t>{0});
  // clauses[4] is ¬B1 ⊔ ¬B3, from the second axiom
  CHECK(n.provenance.trace_to_axioms({n.clauses[4].id}) ==
        std::set<std::size_t>{1});
  std::uint64_t derived = n.provenance.fresh_id();
  n.provenance.set_premises(derived, {n.clauses[0].id, n.clauses[4].id});
  CHECK(n.provenance.trace_to_axioms({derived}) == std::set<std::size_t>{0, 1});
}
