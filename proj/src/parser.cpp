#include "alcmod/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace alcmod {

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line_, col_};
    std::size_t l = line_, c = col_;
    char ch = text_[pos_];
    if (ch == '(') {
      advance();
      return {Token::Kind::LParen, "(", l, c};
    }
    if (ch == ')') {
      advance();
      return {Token::Kind::RParen, ")", l, c};
    }
    if (ch == '<') {
      std::string s;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '>') {
        s.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError(l, c, "unterminated IRI");
      advance();  // '>'
      if (s.empty()) throw ParseError(l, c, "empty IRI");
      return {Token::Kind::Ident, s, l, c};
    }
    if (is_ident_char(ch)) {
      std::string s;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        s.push_back(text_[pos_]);
        advance();
      }
      return {Token::Kind::Ident, s, l, c};
    }
    throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
  }

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  static bool is_ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
           ch == ':' || ch == '.' || ch == '-';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class OntologyParser {
 public:
  explicit OntologyParser(const std::string& text) : lex_(text) { shift(); }

  Ontology parse() {
    Ontology o;
    std::size_t statement = 0;
    while (tok_.kind != Token::Kind::End) {
      std::string head = expect_ident("SubClassOf or EquivalentClasses");
      if (head == "SubClassOf") {
        expect(Token::Kind::LParen);
        Concept lhs = concept_expr();
        Concept rhs = concept_expr();
        expect(Token::Kind::RParen);
        o.add(Axiom{std::move(lhs), std::move(rhs)}, statement);
      } else if (head == "EquivalentClasses") {
        expect(Token::Kind::LParen);
        Concept a = concept_expr();
        Concept b = concept_expr();
        expect(Token::Kind::RParen);
        o.add(Axiom{a, b}, statement);
        o.add(Axiom{b, a}, statement);
      } else {
        throw ParseError(tok_.line, tok_.col, "unsupported statement '" + head +
                                                  "' (only SubClassOf and "
                                                  "EquivalentClasses)");
      }
      ++statement;
    }
    return o;
  }

 private:
  void shift() { tok_ = lex_.next(); }

  void expect(Token::Kind k) {
    if (tok_.kind != k)
      throw ParseError(tok_.line, tok_.col,
                       k == Token::Kind::LParen ? "expected '('" : "expected ')'");
    shift();
  }

  std::string expect_ident(const char* what) {
    if (tok_.kind != Token::Kind::Ident)
      throw ParseError(tok_.line, tok_.col, std::string("expected ") + what);
    std::string s = tok_.text;
    shift();
    return s;
  }

  Name check_user_name(std::string text, NameKind kind, std::size_t l,
                       std::size_t c) {
    if (text.rfind(kDefinerPrefix, 0) == 0)
      throw ParseError(l, c, "identifier '" + text + "' collides with the reserved prefix '" +
                                 kDefinerPrefix + "'");
    return Name{std::move(text), kind, NameOrigin::Input};
  }

  Concept concept_expr() {
    if (tok_.kind != Token::Kind::Ident)
      throw ParseError(tok_.line, tok_.col, "expected a concept expression");
    std::string head = tok_.text;
    std::size_t l = tok_.line, c = tok_.col;
    shift();
    if (head == "owl:Thing") return Concept::top();
    if (head == "owl:Nothing") return Concept::bottom();
    if (head == "ObjectComplementOf") {
      expect(Token::Kind::LParen);
      Concept body = concept_expr();
      expect(Token::Kind::RParen);
      return Concept::negate(std::move(body));
    }
    if (head == "ObjectIntersectionOf" || head == "ObjectUnionOf") {
      expect(Token::Kind::LParen);
      std::vector<Concept> parts;
      while (tok_.kind != Token::Kind::RParen) {
        if (tok_.kind == Token::Kind::End)
          throw ParseError(tok_.line, tok_.col, "expected ')'");
        parts.push_back(concept_expr());
      }
      shift();  // ')'
      if (parts.size() < 2)
        throw ParseError(l, c, head + " needs at least two operands");
      return head == "ObjectIntersectionOf" ? Concept::conj(std::move(parts))
                                            : Concept::disj(std::move(parts));
    }
    if (head == "ObjectSomeValuesFrom" || head == "ObjectAllValuesFrom") {
      expect(Token::Kind::LParen);
      std::size_t rl = tok_.line, rc = tok_.col;
      std::string role = expect_ident("a role name");
      Name r = check_user_name(std::move(role), NameKind::Role, rl, rc);
      Concept filler = concept_expr();
      expect(Token::Kind::RParen);
      return head == "ObjectSomeValuesFrom"
                 ? Concept::exists(std::move(r), std::move(filler))
                 : Concept::forall(std::move(r), std::move(filler));
    }
    if (head == "ObjectMinCardinality" || head == "ObjectMaxCardinality" ||
        head == "ObjectExactCardinality" || head == "ObjectHasValue" ||
        head == "ObjectOneOf" || head == "ObjectHasSelf")
      throw ParseError(l, c, "construct '" + head + "' is outside the supported fragment");
    if (tok_.kind == Token::Kind::LParen)
      throw ParseError(l, c, "unknown constructor '" + head + "'");
    return Concept::atom(check_user_name(std::move(head), NameKind::Concept, l, c));
  }

  Lexer lex_;
  Token tok_{Token::Kind::End, "", 0, 0};
};

bool needs_iri_quotes(const std::string& s) {
  if (s.empty()) return true;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
          ch == ':' || ch == '.' || ch == '-'))
      return true;
  return s == "owl:Thing" || s == "owl:Nothing";
}

void write_name(std::ostream& os, const Name& n) {
  if (needs_iri_quotes(n.text))
    os << '<' << n.text << '>';
  else
    os << n.text;
}

void write_concept(std::ostream& os, const Concept& c) {
  switch (c.tag()) {
    case Concept::Tag::Top:
      os << "owl:Thing";
      return;
    case Concept::Tag::Bottom:
      os << "owl:Nothing";
      return;
    case Concept::Tag::Atom:
      write_name(os, c.atom_name());
      return;
    case Concept::Tag::Not:
      os << "ObjectComplementOf(";
      write_concept(os, c.child());
      os << ')';
      return;
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      os << (c.tag() == Concept::Tag::And ? "ObjectIntersectionOf("
                                          : "ObjectUnionOf(");
      bool first = true;
      for (const auto& p : c.parts()) {
        if (!first) os << ' ';
        first = false;
        write_concept(os, p);
      }
      os << ')';
      return;
    }
    case Concept::Tag::Exists:
    case Concept::Tag::Forall:
      os << (c.tag() == Concept::Tag::Exists ? "ObjectSomeValuesFrom("
                                             : "ObjectAllValuesFrom(");
      write_name(os, c.role());
      os << ' ';
      write_concept(os, c.child());
      os << ')';
      return;
  }
}

}  // namespace

Ontology parse_ontology(const std::string& text) {
  return OntologyParser(text).parse();
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string s = line.substr(b, e - b + 1);
    auto take = [&](const std::string& prefix) -> std::string {
      std::string rest = s.substr(prefix.size());
      std::size_t rb = rest.find_first_not_of(" \t");
      if (rb == std::string::npos)
        throw ParseError(lineno, b + 1, "missing name after '" + prefix + "'");
      rest = rest.substr(rb);
      if (rest.size() > 1 && rest.front() == '<' && rest.back() == '>')
        rest = rest.substr(1, rest.size() - 2);
      if (rest.rfind(kDefinerPrefix, 0) == 0)
        throw ParseError(lineno, b + 1, "name '" + rest + "' collides with the reserved prefix '" +
                                            kDefinerPrefix + "'");
      return rest;
    };
    if (s.rfind("Class:", 0) == 0) {
      sig.concepts.insert(take("Class:"));
    } else if (s.rfind("ObjectProperty:", 0) == 0) {
      sig.roles.insert(take("ObjectProperty:"));
    } else {
      throw ParseError(lineno, b + 1,
                       "expected 'Class:' or 'ObjectProperty:' prefix");
    }
  }
  return sig;
}

std::string serialize_concept(const Concept& c) {
  std::ostringstream os;
  write_concept(os, c);
  return os.str();
}

std::string serialize_axiom(const Axiom& a) {
  std::ostringstream os;
  os << "SubClassOf(";
  write_concept(os, a.lhs);
  os << ' ';
  write_concept(os, a.rhs);
  os << ')';
  return os.str();
}

std::string serialize_ontology(const Ontology& o) {
  std::ostringstream os;
  for (const auto& a : o.axioms) os << serialize_axiom(a) << '\n';
  return os.str();
}

std::string serialize_signature(const Signature& s) {
  std::ostringstream os;
  for (const auto& r : s.roles) os << "ObjectProperty: " << r << '\n';
  for (const auto& c : s.concepts) os << "Class: " << c << '\n';
  return os.str();
}

const char* to_string(UiStatus s) {
  switch (s) {
    case UiStatus::Exact: return "exact";
    case UiStatus::Approximate: return "approximate";
    case UiStatus::GeneralModuleOnly: return "general-module-only";
  }
  return "?";
}

std::string emit_report(const RunReport& r) {
  nlohmann::json j;
  j["input_length"] = r.input_length;
  j["cl_length"] = r.cl_length;
  j["ri_clauses"] = r.ri_clauses;
  j["result_length"] = r.result_length;
  j["result_axioms"] = r.result_axioms;
  j["max_axiom_length"] = r.max_axiom_length;
  j["stage_times_ms"] = r.stage_times_ms;
  j["subsumption_budget_hit"] = r.subsumption_budget_hit;
  j["ui_status"] = to_string(r.ui_status);
  if (!r.widened_signature.empty()) j["widened_signature"] = r.widened_signature;
  return j.dump(2) + "\n";
}

}  // namespace alcmod
