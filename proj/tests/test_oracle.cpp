#include <doctest.h>

#include "alcmod/oracle.hpp"
#include "helpers.hpp"

using namespace alcmod;
using testutil::axm;
using testutil::cpt;
using testutil::ont;

TEST_CASE("satisfiability without a TBox") {
  Ontology empty;
  CHECK(is_satisfiable(cpt("A"), empty) == SatResult::Sat);
  CHECK(is_satisfiable(cpt("ObjectIntersectionOf(A ObjectComplementOf(A))"),
                       empty) == SatResult::Unsat);
  CHECK(is_satisfiable(
            cpt("ObjectIntersectionOf(ObjectSomeValuesFrom(r A) "
                "ObjectAllValuesFrom(r ObjectComplementOf(A)))"),
            empty) == SatResult::Unsat);
  CHECK(is_satisfiable(
            cpt("ObjectIntersectionOf(ObjectSomeValuesFrom(r A) "
                "ObjectAllValuesFrom(s ObjectComplementOf(A)))"),
            empty) == SatResult::Sat);
}

TEST_CASE("TBox internalization and blocking terminate on cycles") {
  // A ⊑ ∃r.A: satisfiable, needs blocking.
  Ontology o = ont("SubClassOf(A ObjectSomeValuesFrom(r A))");
  CHECK(is_satisfiable(cpt("A"), o) == SatResult::Sat);
  // A ⊑ ∃r.A, A ⊑ ⊥: A is unsatisfiable.
  Ontology o2 = ont(
      "SubClassOf(A ObjectSomeValuesFrom(r A)) SubClassOf(A owl:Nothing)");
  CHECK(is_satisfiable(cpt("A"), o2) == SatResult::Unsat);
}

TEST_CASE("entailment") {
  Ontology o = ont("SubClassOf(A B) SubClassOf(B C)");
  CHECK(*entails(o, axm("SubClassOf(A C)")));
  CHECK(!*entails(o, axm("SubClassOf(C A)")));
  // propagation under quantifiers
  Ontology o2 = ont("SubClassOf(B C)");
  CHECK(*entails(o2, axm("SubClassOf(ObjectSomeValuesFrom(r B) ObjectSomeValuesFrom(r C))")));
  CHECK(*entails(o2, axm("SubClassOf(ObjectAllValuesFrom(r B) ObjectAllValuesFrom(r C))")));
}

TEST_CASE("node budget reports a resource limit") {
  // Chain of existentials with binary branching concepts to burn nodes.
  Ontology o = ont(R"(
    SubClassOf(A ObjectSomeValuesFrom(r ObjectUnionOf(B C)))
    SubClassOf(B ObjectSomeValuesFrom(r ObjectUnionOf(A C)))
    SubClassOf(C ObjectSomeValuesFrom(r ObjectUnionOf(A B)))
  )");
  OracleOptions tight;
  tight.max_nodes = 3;
  CHECK(is_satisfiable(cpt("A"), o, tight) == SatResult::ResourceExceeded);
  OracleOptions loose;
  CHECK(is_satisfiable(cpt("A"), o, loose) == SatResult::Sat);
}

TEST_CASE("concept sampler is deterministic per seed") {
  Signature sigma = testutil::sig("Class: A\nClass: B\nObjectProperty: r\n");
  ConceptSampler s1(sigma, 42), s2(sigma, 42), s3(sigma, 43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 20; ++i) {
    Concept a = s1.concept_sample(), b = s2.concept_sample(), c = s3.concept_sample();
    all_equal = all_equal && a == b;
    any_diff = any_diff || !(a == c);
    Signature s = signature_of(a);
    for (const auto& n : s.concepts) CHECK(sigma.contains_concept(n));
    for (const auto& n : s.roles) CHECK(sigma.contains_role(n));
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("sampled inseparability finds witnesses for distinct ontologies") {
  Ontology a = ont("SubClassOf(A B)");
  Ontology b;  // empty
  Signature sigma = testutil::sig("Class: A\nClass: B\n");
  InseparabilityReport rep = inseparable_sampled(a, b, sigma, 7);
  CHECK(rep.separable);
  REQUIRE(rep.witness);
  CHECK(*entails(a, *rep.witness));
  CHECK(!*entails(b, *rep.witness));

  // Identical ontologies never produce a witness.
  InseparabilityReport same = inseparable_sampled(a, a, sigma, 7, 50);
  CHECK(!same.separable);
  CHECK(!same.resource_exceeded);
}
