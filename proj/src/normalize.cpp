#include "alcmod/normalize.hpp"

#include <cassert>
#include <deque>
#include <functional>
#include <stdexcept>

namespace alcmod {

std::set<std::size_t> Provenance::trace_to_axioms(
    const std::vector<std::uint64_t>& ids) const {
  std::set<std::size_t> axioms;
  std::set<std::uint64_t> seen;
  std::deque<std::uint64_t> work(ids.begin(), ids.end());
  while (!work.empty()) {
    std::uint64_t id = work.front();
    work.pop_front();
    if (!seen.insert(id).second) continue;
    if (auto it = roots_.find(id); it != roots_.end())
      axioms.insert(it->second.begin(), it->second.end());
    if (auto it = premises_.find(id); it != premises_.end())
      for (std::uint64_t p : it->second) work.push_back(p);
  }
  return axioms;
}

const Concept& NormalizedOntology::definition_of(const std::string& definer) const {
  auto it = definition.find(definer);
  if (it == definition.end())
    throw std::logic_error("unknown definer: " + definer);
  return it->second;
}

namespace {

class Clausifier {
 public:
  NormalizedOntology run(const Ontology& o) {
    for (std::size_t i = 0; i < o.axioms.size(); ++i) {
      const Axiom& ax = o.axioms[i];
      Concept c = nnf(Concept::disj({Concept::negate(ax.lhs), ax.rhs}));
      emit(simplify_concept(c), {}, i);
      drain(i);
    }
    return std::move(result_);
  }

 private:
  struct Pending {
    std::string definer;
    Concept body;  // definer-free NNF filler
  };

  // Clausifies `c` (NNF, fillers not yet replaced), each clause prefixed with
  // `prefix`, rooted at input axiom `axiom`.
  void emit(const Concept& c, const std::vector<Literal>& prefix, std::size_t axiom) {
    Concept flat = introduce_definers(c);
    for (auto& lits : to_cnf(flat)) {
      lits.insert(lits.end(), prefix.begin(), prefix.end());
      add_clause(std::move(lits), axiom);
    }
  }

  void drain(std::size_t axiom) {
    while (!pending_.empty()) {
      Pending p = std::move(pending_.front());
      pending_.pop_front();
      emit(p.body, {Literal::neg(definer_name(p.definer))}, axiom);
    }
  }

  // Replaces every quantifier filler at any depth of the ⊓/⊔ structure with a
  // fresh definer atom; queues the replaced filler for its own clausification.
  Concept introduce_definers(const Concept& c) {
    switch (c.tag()) {
      case Concept::Tag::Top:
      case Concept::Tag::Bottom:
      case Concept::Tag::Atom:
      case Concept::Tag::Not:
        return c;
      case Concept::Tag::And:
      case Concept::Tag::Or: {
        std::vector<Concept> parts;
        parts.reserve(c.parts().size());
        for (const auto& p : c.parts()) parts.push_back(introduce_definers(p));
        return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                            : Concept::disj(std::move(parts));
      }
      case Concept::Tag::Exists:
      case Concept::Tag::Forall: {
        std::string d = kDefinerPrefix + std::to_string(++definer_count_);
        result_.definition.emplace(d, c.child());
        pending_.push_back({d, c.child()});
        Concept atom = Concept::atom(definer_name(d));
        return c.tag() == Concept::Tag::Exists ? Concept::exists(c.role(), atom)
                                               : Concept::forall(c.role(), atom);
      }
    }
    return c;
  }

  // `c` is quantifier-filler-flat NNF; distributes ⊔ over ⊓ into literal lists.
  static std::vector<std::vector<Literal>> to_cnf(const Concept& c) {
    switch (c.tag()) {
      case Concept::Tag::Top:
        return {};  // ⊤ ⊑ ⊤: no clauses
      case Concept::Tag::Bottom:
        return {{}};  // the empty clause
      case Concept::Tag::Atom:
        return {{Literal::pos(c.atom_name())}};
      case Concept::Tag::Not:
        assert(c.child().is_atom());
        return {{Literal::neg(c.child().atom_name())}};
      case Concept::Tag::Exists:
        return {{Literal::ex(c.role(), c.child())}};
      case Concept::Tag::Forall:
        return {{Literal::all(c.role(), c.child())}};
      case Concept::Tag::And: {
        std::vector<std::vector<Literal>> out;
        for (const auto& p : c.parts())
          for (auto& cl : to_cnf(p)) out.push_back(std::move(cl));
        return out;
      }
      case Concept::Tag::Or: {
        std::vector<std::vector<Literal>> acc = {{}};
        for (const auto& p : c.parts()) {
          auto branch = to_cnf(p);
          std::vector<std::vector<Literal>> next;
          next.reserve(acc.size() * branch.size());
          for (const auto& left : acc)
            for (const auto& right : branch) {
              std::vector<Literal> merged = left;
              merged.insert(merged.end(), right.begin(), right.end());
              next.push_back(std::move(merged));
            }
          acc = std::move(next);
        }
        return acc;
      }
    }
    return {};
  }

  void add_clause(std::vector<Literal> lits, std::size_t axiom) {
    auto canon = canonical_clause(std::move(lits));
    if (!canon) return;  // tautology
    Clause cl{result_.provenance.fresh_id(), std::move(*canon)};
    result_.provenance.set_roots(cl.id, {axiom});
    for (const auto& l : cl.lits)
      if (l.is_quantified()) {
        auto a = l.filler_atom();
        if (a && a->is_definer())
          result_.positive_occurrence[a->text] = {l.role_name, l.kind, cl.id};
      }
    result_.clauses.push_back(std::move(cl));
  }

  NormalizedOntology result_;
  std::deque<Pending> pending_;
  std::size_t definer_count_ = 0;
};

}  // namespace

NormalizedOntology clausify(const Ontology& o) { return Clausifier().run(o); }

DefinerOrder definer_order(const std::vector<Clause>& clauses) {
  DefinerOrder ord;
  for (const auto& cl : clauses) {
    for (const auto& l : cl.lits) {
      if (!l.is_neg_definer()) continue;
      const std::string& d = l.atom.text;
      ord.nested_below.try_emplace(d);
      for (const auto& other : cl.lits) {
        if (&other == &l) continue;
        Signature sig = signature_of(other.to_concept());
        for (const auto& name : sig.concepts)
          if (name.rfind(kDefinerPrefix, 0) == 0 && name != d)
            ord.nested_below[d].insert(name);
      }
    }
  }
  // Reflexive transitive closure upward, with cycle detection.
  std::map<std::string, int> state;  // 0 fresh, 1 in progress, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& d) {
    int& s = state[d];
    if (s == 2) return;
    if (s == 1) {
      ord.acyclic = false;
      return;
    }
    s = 1;
    ord.above[d].insert(d);
    if (auto it = ord.nested_below.find(d); it != ord.nested_below.end())
      for (const auto& inner : it->second) {
        visit(inner);
        ord.above[inner].insert(d);
        // Everything above d is above everything nested below d.
      }
    s = 2;
  };
  for (const auto& [d, _] : ord.nested_below) visit(d);
  // Propagate to a fixpoint: above[inner] ⊇ above[outer] for each edge.
  bool changed = true;
  while (changed && ord.acyclic) {
    changed = false;
    for (const auto& [outer, inners] : ord.nested_below)
      for (const auto& inner : inners) {
        auto& tgt = ord.above[inner];
        for (const auto& a : ord.above[outer])
          if (tgt.insert(a).second) changed = true;
      }
  }
  return ord;
}

std::map<std::string, std::set<std::string>> filler_roles(
    const std::vector<Clause>& clauses) {
  std::map<std::string, std::set<std::string>> rol;
  for (const auto& cl : clauses)
    for (const auto& l : cl.lits)
      if (l.is_quantified())
        if (auto a = l.filler_atom()) rol[a->text].insert(l.role_name.text);
  return rol;
}

}  // namespace alcmod
