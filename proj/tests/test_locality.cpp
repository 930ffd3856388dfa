#include <doctest.h>

#include "alcmod/locality.hpp"
#include "helpers.hpp"

using namespace alcmod;
using testutil::axm;
using testutil::ont;
using testutil::sig;

TEST_CASE("bottom locality") {
  Signature sigma = sig("Class: B\n");
  // A ⊑ B with A ∉ Σ: lhs becomes ⊥, which is local.
  CHECK(is_bot_local(axm("SubClassOf(A B)"), sigma));
  // B ⊑ A: rhs becomes ⊥, B ⊑ ⊥ is not a tautology.
  CHECK(!is_bot_local(axm("SubClassOf(B A)"), sigma));
  // ∃r.A ⊑ B with r, A ∉ Σ: lhs collapses to ⊥.
  CHECK(is_bot_local(axm("SubClassOf(ObjectSomeValuesFrom(r A) B)"), sigma));
  // B ⊑ ∀r.A with r ∉ Σ: rhs collapses to ⊤.
  CHECK(is_bot_local(axm("SubClassOf(B ObjectAllValuesFrom(r A))"), sigma));
}

TEST_CASE("top locality") {
  Signature sigma = sig("Class: B\n");
  // B ⊑ A with A ∉ Σ: rhs becomes ⊤, which is local.
  CHECK(is_top_local(axm("SubClassOf(B A)"), sigma));
  CHECK(!is_top_local(axm("SubClassOf(A B)"), sigma));
  // ∃r.B ⊑ A with r, A ∉ Σ: both sides become ⊤.
  CHECK(is_top_local(axm("SubClassOf(ObjectSomeValuesFrom(r B) A)"), sigma));
}

TEST_CASE("locality is signature-sensitive") {
  Signature both = sig("Class: A\nClass: B\n");
  CHECK(!is_bot_local(axm("SubClassOf(A B)"), both));
  CHECK(!is_top_local(axm("SubClassOf(A B)"), both));
}

TEST_CASE("star module keeps the reachable axioms") {
  Ontology o = ont(R"(
    SubClassOf(A B)
    SubClassOf(B C)
    SubClassOf(E F)
  )");
  Signature sigma = sig("Class: A\nClass: C\n");
  LocalityModule m = extract_star_module(o, sigma);
  CHECK(m.indices == std::vector<std::size_t>{0, 1});
  REQUIRE(m.module.axioms.size() == 2);
  CHECK(m.module.axioms[0] == o.axioms[0]);
}

TEST_CASE("star module can be empty") {
  Ontology o = ont("SubClassOf(A B)");
  Signature sigma = sig("Class: C\n");
  LocalityModule m = extract_star_module(o, sigma);
  CHECK(m.module.axioms.empty());
}

TEST_CASE("star module alternation shrinks below a single-round module") {
  // A ⊑ B is not ⊥-local for Σ = {A}, so a pure ⊥-round keeps it, but it is
  // ⊤-local; the alternating rounds empty the module.
  Ontology o = ont("SubClassOf(A B)");
  Signature sigma = sig("Class: A\n");
  CHECK(!is_bot_local(o.axioms[0], sigma));
  LocalityModule m = extract_star_module(o, sigma);
  CHECK(m.module.axioms.empty());
}

TEST_CASE("signature sampling is deterministic and bounded") {
  Ontology o = ont(R"(
    SubClassOf(A ObjectSomeValuesFrom(r B))
    SubClassOf(B C)
    SubClassOf(C A)
  )");
  Signature s1 = sample_signature(o, 3, 11);
  Signature s2 = sample_signature(o, 3, 11);
  CHECK(s1 == s2);
  CHECK(s1.size() == 3);
  Signature full = signature_of(o);
  for (const auto& n : s1.concepts) CHECK(full.contains_concept(n));
  for (const auto& n : s1.roles) CHECK(full.contains_role(n));
  CHECK_THROWS_AS(sample_signature(o, 99, 1), SignatureTooLarge);
}
