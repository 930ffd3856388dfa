#include <doctest.h>

#include "alcmod/normalize.hpp"
#include "alcmod/saturation.hpp"
#include "helpers.hpp"

using namespace alcmod;
using testutil::cpt;
using testutil::defs;
using testutil::ont;

namespace {

const char* kRunningExample = R"(
  SubClassOf(A1 ObjectUnionOf(ObjectSomeValuesFrom(r ObjectSomeValuesFrom(s B1)) ObjectSomeValuesFrom(r B2)))
  SubClassOf(ObjectIntersectionOf(B1 B3) owl:Nothing)
  SubClassOf(A2 ObjectUnionOf(A3 ObjectAllValuesFrom(s B3)))
  SubClassOf(B4 A4)
  SubClassOf(B2 B4)
)";

LiteralSet lits(std::vector<Literal> raw) {
  auto canon = canonical_clause(std::move(raw));
  REQUIRE(canon);
  return *canon;
}

// The definer whose recorded definition is exactly `def`.
std::string definer_for(const NormalizedOntology& n, const Concept& def) {
  for (const auto& [d, c] : n.definition)
    if (c == def) return d;
  FAIL("no definer with that definition");
  return {};
}

std::vector<Concept> clause_concepts(const std::vector<Clause>& clauses) {
  std::vector<Concept> out;
  for (const auto& c : clauses) out.push_back(c.to_concept());
  return out;
}

}  // namespace

TEST_CASE("clause store applies forward and backward subsumption") {
  Name a = concept_name("A"), b = concept_name("B"), c = concept_name("C");
  ClauseStore store;
  CHECK(store.add(Clause{1, lits({Literal::neg(a), Literal::pos(b)})}));
  // The unit clause subsumes and replaces the first one.
  CHECK(store.add(Clause{2, lits({Literal::neg(a)})}));
  CHECK(store.clauses().size() == 1);
  CHECK(store.clauses()[0].id == 2);
  // Anything the unit subsumes is rejected.
  CHECK(!store.add(Clause{3, lits({Literal::neg(a), Literal::pos(c)})}));
  CHECK(store.contains_subsumer(lits({Literal::neg(a), Literal::pos(c)})));
  CHECK(!store.contains_subsumer(lits({Literal::pos(c)})));
}

TEST_CASE("concept-name resolution produces all resolvents, minus tautologies") {
  Name a = concept_name("A"), b = concept_name("B"), c = concept_name("C");
  Provenance prov;
  std::vector<Clause> clauses = {
      Clause{prov.fresh_id(), lits({Literal::pos(a), Literal::pos(c)})},
      Clause{prov.fresh_id(), lits({Literal::neg(a), Literal::pos(b)})},
  };
  std::vector<Clause> res = a_rule_resolvents(clauses, "A", prov);
  REQUIRE(res.size() == 1);
  CHECK(res[0].lits == lits({Literal::pos(b), Literal::pos(c)}));
  CHECK(prov.trace_to_axioms({res[0].id}).empty());  // premises, not roots

  // Resolving A ⊔ B against ¬A ⊔ ¬B gives the tautology B ⊔ ¬B: dropped.
  std::vector<Clause> taut = {
      Clause{prov.fresh_id(), lits({Literal::pos(a), Literal::pos(b)})},
      Clause{prov.fresh_id(), lits({Literal::neg(a), Literal::neg(b)})},
  };
  CHECK(a_rule_resolvents(taut, "A", prov).empty());
}

TEST_CASE("role propagation combines an existential with a universal") {
  Provenance prov;
  Name d1 = definer_name("_D1"), d2 = definer_name("_D2");
  Name s = role_name("s");
  ClauseStore store;
  store.add(Clause{prov.fresh_id(), lits({Literal::neg(d1), Literal::neg(d2)})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("A")),
                         Literal::ex(s, Concept::atom(d1))})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("B")),
                         Literal::all(s, Concept::atom(d2))})});
  CHECK(r_rule_saturate(store, std::nullopt, prov));
  CHECK(store.contains_subsumer(lits(
      {Literal::neg(concept_name("A")), Literal::neg(concept_name("B"))})));
}

TEST_CASE("role propagation with only universal members borrows an existential") {
  Provenance prov;
  Name d2 = definer_name("_D2"), d3 = definer_name("_D3");
  Name s = role_name("s");
  ClauseStore store;
  store.add(Clause{prov.fresh_id(), lits({Literal::neg(d2)})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("B")),
                         Literal::all(s, Concept::atom(d2))})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("C")),
                         Literal::ex(s, Concept::atom(d3))})});
  CHECK(r_rule_saturate(store, std::nullopt, prov));
  CHECK(store.contains_subsumer(lits(
      {Literal::neg(concept_name("B")), Literal::neg(concept_name("C"))})));
}

TEST_CASE("no propagation across different roles") {
  Provenance prov;
  Name d1 = definer_name("_D1"), d2 = definer_name("_D2");
  ClauseStore store;
  store.add(Clause{prov.fresh_id(), lits({Literal::neg(d1), Literal::neg(d2)})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("A")),
                         Literal::ex(role_name("r"), Concept::atom(d1))})});
  store.add(Clause{prov.fresh_id(),
                   lits({Literal::neg(concept_name("B")),
                         Literal::all(role_name("s"), Concept::atom(d2))})});
  std::size_t before = store.clauses().size();
  CHECK(r_rule_saturate(store, std::nullopt, prov));
  CHECK(store.clauses().size() == before);
}

TEST_CASE("conflict sets of the running example") {
  NormalizedOntology n = clausify(ont(kRunningExample));
  ConflictSets cs = conflict_sets(n);
  CHECK(!cs.budget_exceeded);
  std::string db1 = definer_for(n, cpt("B1"));
  std::string db3 = definer_for(n, cpt("B3"));
  REQUIRE(cs.sets.size() == 1);
  CHECK(cs.sets[0] == std::set<std::string>{db1, db3});
  // The derivation traces back to the axioms that make B1 and B3 disjoint
  // successors: the first three input axioms.
  REQUIRE(cs.derivation_ids.size() == 1);
  CHECK(n.provenance.trace_to_axioms({cs.derivation_ids[0]}) ==
        std::set<std::size_t>{0, 1, 2});
}

TEST_CASE("conflict sets flag inconsistency with the empty set") {
  NormalizedOntology n = clausify(
      ont("SubClassOf(owl:Thing A) SubClassOf(A owl:Nothing)"));
  ConflictSets cs = conflict_sets(n);
  REQUIRE(cs.sets.size() == 1);
  CHECK(cs.sets[0].empty());
}

TEST_CASE("no conflict sets without definer interaction") {
  NormalizedOntology n = clausify(ont("SubClassOf(A ObjectSomeValuesFrom(r B))"));
  ConflictSets cs = conflict_sets(n);
  CHECK(cs.sets.empty());
}

TEST_CASE("role isolation of the running example") {
  NormalizedOntology n = clausify(ont(kRunningExample));
  Signature sigma = testutil::sig(
      "Class: A1\nClass: A2\nClass: A3\nClass: A4\nObjectProperty: r\n");
  RoleIsolation ri = role_isolate(n, sigma);
  CHECK(!ri.conflict_budget_exceeded);
  CHECK(ri.widened_roles.empty());
  CHECK(ri.filtered_count == 7);
  REQUIRE(ri.clauses.size() == 8);
  std::vector<Concept> expected = {
      defs("ObjectUnionOf(ObjectComplementOf(A1) ObjectSomeValuesFrom(r Dv1) ObjectSomeValuesFrom(r Dv3))"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv1) ObjectSomeValuesFrom(s Dv2))"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv3) B2)"),
      defs("ObjectUnionOf(ObjectComplementOf(A2) A3 ObjectAllValuesFrom(s Dv4))"),
      defs("ObjectUnionOf(ObjectComplementOf(B1) ObjectComplementOf(B3))"),
      defs("ObjectUnionOf(ObjectComplementOf(B2) B4)"),
      defs("ObjectUnionOf(ObjectComplementOf(B4) A4)"),
      defs("ObjectUnionOf(ObjectComplementOf(Dv2) ObjectComplementOf(Dv4))"),
  };
  CHECK(testutil::match_up_to_definers(clause_concepts(ri.clauses), expected));
  CHECK(is_role_isolated(ri.clauses, sigma));
  CHECK(!is_role_isolated(n.clauses, sigma));
}

TEST_CASE("no conflict clause when both occurrences are existential") {
  // B1 and B2 sit in different r-successors, so no clash materializes.
  NormalizedOntology n = clausify(ont(R"(
    SubClassOf(A ObjectSomeValuesFrom(r B1))
    SubClassOf(A2 ObjectSomeValuesFrom(r B2))
    SubClassOf(ObjectIntersectionOf(B1 B2) owl:Nothing)
  )"));
  Signature sigma = testutil::sig("Class: A\nClass: A2\n");
  RoleIsolation ri = role_isolate(n, sigma);
  CHECK(ri.clauses.size() == ri.filtered_count);
  CHECK(ri.filtered_count == 3);
}

TEST_CASE("conflict clause appears for an existential-universal pair") {
  NormalizedOntology n = clausify(ont(R"(
    SubClassOf(A ObjectSomeValuesFrom(r B1))
    SubClassOf(A2 ObjectAllValuesFrom(r B2))
    SubClassOf(ObjectIntersectionOf(B1 B2) owl:Nothing)
  )"));
  Signature sigma = testutil::sig("Class: A\nClass: A2\n");
  RoleIsolation ri = role_isolate(n, sigma);
  REQUIRE(ri.clauses.size() == 4);
  CHECK(ri.filtered_count == 3);
  const Clause& conflict = ri.clauses.back();
  CHECK(conflict.all_neg_definers());
  CHECK(conflict.lits.size() == 2);
}
