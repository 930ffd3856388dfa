#include <doctest.h>

#include "helpers.hpp"

using namespace alcmod;
using testutil::ont;

TEST_CASE("parses the supported constructs") {
  Ontology o = ont(R"(
    # comment line
    SubClassOf(A ObjectUnionOf(B ObjectSomeValuesFrom(r C)))
    SubClassOf(ObjectIntersectionOf(A B) owl:Nothing)
    SubClassOf(owl:Thing ObjectAllValuesFrom(s ObjectComplementOf(A)))
  )");
  REQUIRE(o.axioms.size() == 3);
  CHECK(o.axioms[1].rhs == Concept::bottom());
  CHECK(o.axioms[2].lhs == Concept::top());
}

TEST_CASE("EquivalentClasses desugars to two axioms sharing a statement") {
  Ontology o = ont("EquivalentClasses(A B) SubClassOf(C D)");
  REQUIRE(o.axioms.size() == 3);
  CHECK(o.statement_of[0] == 0);
  CHECK(o.statement_of[1] == 0);
  CHECK(o.statement_of[2] == 1);
  CHECK(o.axioms[0].lhs == o.axioms[1].rhs);
}

TEST_CASE("IRI names round-trip") {
  Ontology o = ont("SubClassOf(<http://example.org/x#Heart> B)");
  CHECK(o.axioms[0].lhs.atom_name().text == "http://example.org/x#Heart");
  std::string out = serialize_ontology(o);
  CHECK(parse_ontology(out).axioms == o.axioms);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(ont("SubClassOf(A"), ParseError);
  CHECK_THROWS_AS(ont("SubClassOf(A B C)"), ParseError);
  CHECK_THROWS_AS(ont("Junk(A B)"), ParseError);
  CHECK_THROWS_AS(ont("SubClassOf(ObjectMinCardinality(2 r A) B)"), ParseError);
  try {
    ont("\nSubClassOf(A )");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("reserved definer prefix is rejected in inputs") {
  CHECK_THROWS_AS(ont("SubClassOf(_D1 B)"), ParseError);
  CHECK_THROWS_AS(parse_signature("Class: _D2"), ParseError);
}

TEST_CASE("serialization round-trips") {
  const std::string text =
      "SubClassOf(A ObjectUnionOf(B ObjectSomeValuesFrom(r "
      "ObjectIntersectionOf(C ObjectComplementOf(D)))))\n";
  Ontology o = ont(text);
  CHECK(serialize_ontology(o) == text);
  // parse ∘ serialize is a fixpoint
  CHECK(serialize_ontology(parse_ontology(serialize_ontology(o))) ==
        serialize_ontology(o));
}

TEST_CASE("signature files") {
  Signature s = parse_signature("Class: A\nObjectProperty: r # trailing\n\nClass: B\n");
  CHECK(s.concepts == std::set<std::string>{"A", "B"});
  CHECK(s.roles == std::set<std::string>{"r"});
  CHECK_THROWS_AS(parse_signature("Role: r"), ParseError);
  Signature round = parse_signature(serialize_signature(s));
  CHECK(round == s);
}

TEST_CASE("run report carries the expected fields") {
  RunReport r;
  r.input_length = 25;
  r.ui_status = UiStatus::Approximate;
  r.stage_times_ms["clausify"] = 1.5;
  std::string json = emit_report(r);
  CHECK(json.find("\"input_length\": 25") != std::string::npos);
  CHECK(json.find("\"ui_status\": \"approximate\"") != std::string::npos);
  CHECK(json.find("\"stage_times_ms\"") != std::string::npos);
  CHECK(json.find("\"subsumption_budget_hit\": false") != std::string::npos);
}
