#ifndef ALCMOD_PARSER_HPP
#define ALCMOD_PARSER_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "alcmod/syntax.hpp"

namespace alcmod {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column),
        message(message) {}

  std::size_t line;
  std::size_t column;
  std::string message;
};

// OWL-functional-style subset: SubClassOf / EquivalentClasses statements over
// ObjectIntersectionOf, ObjectUnionOf, ObjectComplementOf,
// ObjectSomeValuesFrom, ObjectAllValuesFrom, owl:Thing, owl:Nothing, bare
// identifiers or <IRI> names. '#' starts a comment. EquivalentClasses(A B)
// desugars to two SubClassOf axioms sharing one statement index.
Ontology parse_ontology(const std::string& text);

// One name per line, "Class: X" or "ObjectProperty: r". Set semantics.
Signature parse_signature(const std::string& text);

std::string serialize_concept(const Concept& c);
std::string serialize_axiom(const Axiom& a);
std::string serialize_ontology(const Ontology& o);
std::string serialize_signature(const Signature& s);

// ---------------------------------------------------------------------------
// Run reports

enum class UiStatus { Exact, Approximate, GeneralModuleOnly };

const char* to_string(UiStatus s);

struct RunReport {
  std::size_t input_length = 0;
  std::size_t cl_length = 0;
  std::size_t ri_clauses = 0;
  std::size_t result_length = 0;
  std::size_t result_axioms = 0;
  std::size_t max_axiom_length = 0;
  std::map<std::string, double> stage_times_ms;
  bool subsumption_budget_hit = false;
  UiStatus ui_status = UiStatus::GeneralModuleOnly;
  std::string widened_signature;  // space-separated role names, if any
};

std::string emit_report(const RunReport& r);

}  // namespace alcmod

#endif  // ALCMOD_PARSER_HPP
