#include "alcmod/module_builder.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>

namespace alcmod {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool is_definer_text(const std::string& s) {
  return s.rfind(kDefinerPrefix, 0) == 0;
}

bool concept_has_definer(const Concept& c) {
  Signature s = signature_of(c);
  for (const auto& n : s.concepts)
    if (is_definer_text(n)) return true;
  return false;
}

}  // namespace

bool delete_subsumed(std::vector<Clause>& clauses, std::chrono::milliseconds budget) {
  Deadline deadline(budget);
  std::vector<bool> dead(clauses.size(), false);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (dead[i]) continue;
    if (deadline.expired()) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < clauses.size(); ++k) {
        if (dead[k]) continue;
        if (w != k) clauses[w] = std::move(clauses[k]);
        ++w;
      }
      clauses.resize(w);
      return false;
    }
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (j == i || dead[j]) continue;
      if (subsumes(clauses[i].lits, clauses[j].lits)) dead[j] = true;
    }
  }
  std::size_t w = 0;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    if (dead[k]) continue;
    if (w != k) clauses[w] = std::move(clauses[k]);
    ++w;
  }
  clauses.resize(w);
  return true;
}

Concept substitute_definers(const Concept& c,
                            const std::map<std::string, Concept>& definition) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return c;
    case Concept::Tag::Atom: {
      if (!is_definer_text(c.atom_name().text)) return c;
      auto it = definition.find(c.atom_name().text);
      return it == definition.end() ? c
                                    : substitute_definers(it->second, definition);
    }
    case Concept::Tag::Not:
      return Concept::negate(substitute_definers(c.child(), definition));
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts())
        parts.push_back(substitute_definers(p, definition));
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
      return Concept::exists(c.role(), substitute_definers(c.child(), definition));
    case Concept::Tag::Forall:
      return Concept::forall(c.role(), substitute_definers(c.child(), definition));
  }
  return c;
}

std::vector<Axiom> substitute_definers(
    const std::vector<Clause>& clauses,
    const std::map<std::string, Concept>& definition) {
  std::vector<Axiom> out;
  out.reserve(clauses.size());
  for (const auto& cl : clauses) {
    std::vector<Concept> disjuncts;
    for (const auto& l : cl.lits)
      disjuncts.push_back(substitute_definers(l.to_concept(), definition));
    out.push_back(Axiom{Concept::top(), Concept::disj(std::move(disjuncts))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Readability rewriting

namespace {

bool is_tautology(const Axiom& ax) {
  return ax.rhs.is_top() || ax.lhs.is_bottom() || ax.lhs == ax.rhs;
}

// ⊤ ⊑ D₁ ⊔ … ⊔ Dₙ: move negated disjuncts left.
Axiom move_negations_left(const Axiom& ax) {
  if (!ax.lhs.is_top()) return ax;
  std::vector<Concept> disjuncts;
  if (ax.rhs.tag() == Concept::Tag::Or)
    disjuncts.assign(ax.rhs.parts().begin(), ax.rhs.parts().end());
  else
    disjuncts.push_back(ax.rhs);
  std::vector<Concept> left_atoms, left_complex, right;
  for (const auto& d : disjuncts) {
    if (d.tag() == Concept::Tag::Not) {
      const Concept& body = d.child();
      (body.is_atom() ? left_atoms : left_complex).push_back(body);
    } else {
      right.push_back(d);
    }
  }
  if (left_atoms.empty() && left_complex.empty()) return ax;
  std::sort(left_atoms.begin(), left_atoms.end());
  std::sort(left_complex.begin(), left_complex.end());
  left_atoms.insert(left_atoms.end(), left_complex.begin(), left_complex.end());
  Concept lhs = Concept::conj(std::move(left_atoms));
  Concept rhs = right.empty() ? Concept::bottom() : Concept::disj(std::move(right));
  return Axiom{std::move(lhs), std::move(rhs)};
}

Concept axiom_as_concept(const Axiom& ax) {
  return Concept::disj({Concept::negate(ax.lhs), ax.rhs});
}

bool equivalent_axioms(const Axiom& a, const Axiom& b, const OracleOptions& oracle) {
  Ontology empty;
  Concept x = axiom_as_concept(a), y = axiom_as_concept(b);
  return is_satisfiable(Concept::conj({x, Concept::negate(y)}), empty, oracle) ==
             SatResult::Unsat &&
         is_satisfiable(Concept::conj({y, Concept::negate(x)}), empty, oracle) ==
             SatResult::Unsat;
}

// C₁ ⊑ Qr.¬C₂ ⊔ C₃  ⇒  C₁ ⊓ Q̄r.C₂ ⊑ C₃, verified before it is kept.
Axiom move_negated_filler_left(const Axiom& ax, const OracleOptions& oracle) {
  std::vector<Concept> disjuncts;
  if (ax.rhs.tag() == Concept::Tag::Or)
    disjuncts.assign(ax.rhs.parts().begin(), ax.rhs.parts().end());
  else
    disjuncts.push_back(ax.rhs);
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    const Concept& d = disjuncts[i];
    bool quantified = d.tag() == Concept::Tag::Exists || d.tag() == Concept::Tag::Forall;
    if (!quantified || d.child().tag() != Concept::Tag::Not) continue;
    Concept dual = d.tag() == Concept::Tag::Exists
                       ? Concept::forall(d.role(), d.child().child())
                       : Concept::exists(d.role(), d.child().child());
    std::vector<Concept> rest;
    for (std::size_t j = 0; j < disjuncts.size(); ++j)
      if (j != i) rest.push_back(disjuncts[j]);
    Axiom candidate{
        ax.lhs.is_top() ? dual : Concept::conj({ax.lhs, dual}),
        rest.empty() ? Concept::bottom() : Concept::disj(std::move(rest))};
    if (equivalent_axioms(ax, candidate, oracle)) return candidate;
  }
  return ax;
}

}  // namespace

std::vector<Axiom> simplify_axioms(const std::vector<Axiom>& axioms,
                                   const OracleOptions& oracle) {
  std::vector<Axiom> out;
  for (const auto& in : axioms) {
    Axiom ax{simplify_concept(in.lhs), simplify_concept(in.rhs)};
    if (is_tautology(ax)) continue;
    ax = move_negations_left(ax);
    for (int pass = 0; pass < 4; ++pass) {
      Axiom next = move_negated_filler_left(ax, oracle);
      if (next == ax) break;
      ax = std::move(next);
    }
    ax = Axiom{simplify_concept(ax.lhs), simplify_concept(ax.rhs)};
    if (is_tautology(ax)) continue;
    if (std::find(out.begin(), out.end(), ax) == out.end()) out.push_back(std::move(ax));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Definer elimination operators

void op1_conflict_elim(ClauseStore& store, Provenance& prov) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Clause> triggers;
    for (const auto& c : store.clauses())
      if (c.all_neg_definers()) triggers.push_back(c);
    if (triggers.empty()) break;

    for (const auto& trigger : triggers) {
      // (role, member) -> clauses with the matching positive occurrence.
      std::vector<std::string> members;
      for (const auto& l : trigger.lits) members.push_back(l.atom.text);
      std::map<std::pair<std::string, std::string>,
               std::vector<std::pair<std::size_t, Literal>>>
          occ;
      std::set<std::string> roles;
      const auto& clauses = store.clauses();
      for (std::size_t i = 0; i < clauses.size(); ++i)
        for (const auto& l : clauses[i].lits) {
          if (!l.is_quantified()) continue;
          auto a = l.filler_atom();
          if (!a) continue;
          if (std::find(members.begin(), members.end(), a->text) == members.end())
            continue;
          occ[{l.role_name.text, a->text}].emplace_back(i, l);
          roles.insert(l.role_name.text);
        }

      std::vector<Clause> conclusions;
      for (const auto& role : roles) {
        bool covered = true;
        for (const auto& m : members)
          if (!occ.count({role, m})) {
            covered = false;
            break;
          }
        if (!covered) continue;
        std::vector<std::pair<std::size_t, Literal>> picks;
        std::function<void(std::size_t)> rec = [&](std::size_t m) {
          if (m == members.size()) {
            std::size_t existentials = 0;
            for (const auto& [_, lit] : picks)
              if (lit.kind == Literal::Kind::Ex) ++existentials;
            if (existentials > 1) return;
            // One clause copy per picked occurrence: a clause serving two
            // premise roles keeps the other role's literal in each copy.
            std::vector<Literal> merged;
            std::vector<std::uint64_t> premises{trigger.id};
            for (const auto& [idx, lit] : picks) {
              if (std::find(premises.begin(), premises.end(),
                            clauses[idx].id) == premises.end())
                premises.push_back(clauses[idx].id);
              for (const auto& l : clauses[idx].lits)
                if (!(l == lit)) merged.push_back(l);
            }
            // Q r.⊥ with Q existential when one occurrence is; an ∃r.⊥
            // disjunct is vacuous and canonicalization removes it.
            Name r = role_name(role);
            merged.push_back(existentials == 1
                                 ? Literal::ex(r, Concept::bottom())
                                 : Literal::all(r, Concept::bottom()));
            auto canon = canonical_clause(std::move(merged));
            if (!canon) return;
            Clause cl{prov.fresh_id(), std::move(*canon)};
            prov.set_premises(cl.id, std::move(premises));
            conclusions.push_back(std::move(cl));
            return;
          }
          for (const auto& choice : occ.at({role, members[m]})) {
            picks.push_back(choice);
            rec(m + 1);
            picks.pop_back();
          }
        };
        rec(0);
      }
      for (auto& c : conclusions)
        if (store.add(std::move(c))) changed = true;
    }
    store.erase_if([](const Clause& c) { return c.all_neg_definers(); });
  }
}

void op2_definer_propagation(ClauseStore& store, Provenance& prov,
                             std::vector<std::vector<Concept>>* raw_rewrites) {
  bool changed = true;
  while (changed) {
    changed = false;
    // Definers with at least one positive occurrence as an atomic filler.
    std::set<std::string> present;
    for (const auto& c : store.clauses())
      for (const auto& l : c.lits)
        if (l.is_quantified())
          if (auto a = l.filler_atom(); a && a->is_definer())
            present.insert(a->text);

    for (const auto& d : present) {
      Literal neg = Literal::neg(definer_name(d));
      std::vector<const Clause*> neg_clauses;
      bool applicable = true;
      for (const auto& c : store.clauses()) {
        if (!c.contains(neg)) continue;
        neg_clauses.push_back(&c);
        for (const auto& l : c.lits) {
          if (l == neg) continue;
          if (concept_has_definer(l.to_concept())) {
            applicable = false;
            break;
          }
        }
        if (!applicable) break;
      }
      if (!applicable) continue;

      Concept replacement = Concept::top();
      std::vector<Concept> pieces;
      for (const Clause* c : neg_clauses) {
        std::vector<Concept> rest;
        for (const auto& l : c->lits)
          if (!(l == neg)) rest.push_back(l.to_concept());
        pieces.push_back(rest.empty() ? Concept::bottom()
                                      : Concept::disj(std::move(rest)));
      }
      if (!pieces.empty()) replacement = Concept::conj(std::move(pieces));

      std::vector<std::uint64_t> neg_ids;
      for (const Clause* c : neg_clauses) neg_ids.push_back(c->id);

      std::vector<Clause> rewritten;
      std::vector<std::uint64_t> drop_ids = neg_ids;
      for (const auto& c : store.clauses()) {
        bool hit = false;
        std::vector<Literal> lits;
        for (const auto& l : c.lits) {
          if (l.is_quantified()) {
            if (auto a = l.filler_atom(); a && a->text == d) {
              hit = true;
              lits.push_back(l.kind == Literal::Kind::Ex
                                 ? Literal::ex(l.role_name, replacement)
                                 : Literal::all(l.role_name, replacement));
              continue;
            }
          }
          lits.push_back(l);
        }
        if (!hit) continue;
        drop_ids.push_back(c.id);
        if (raw_rewrites) {
          std::vector<Concept> raw;
          for (const auto& l : lits) raw.push_back(l.to_concept());
          raw_rewrites->push_back(std::move(raw));
        }
        auto canon = canonical_clause(std::move(lits));
        if (!canon) continue;  // e.g. ∀r.⊤ after replacement by ⊤
        Clause cl{prov.fresh_id(), std::move(*canon)};
        std::vector<std::uint64_t> premises{c.id};
        premises.insert(premises.end(), neg_ids.begin(), neg_ids.end());
        prov.set_premises(cl.id, std::move(premises));
        rewritten.push_back(std::move(cl));
      }

      store.erase_if([&](const Clause& c) {
        return std::find(drop_ids.begin(), drop_ids.end(), c.id) != drop_ids.end();
      });
      for (auto& c : rewritten) store.add(std::move(c));
      changed = true;
      break;  // occurrence sets changed; rescan
    }
  }
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

struct PipelineState {
  NormalizedOntology norm;
  std::vector<Clause> clauses;
  Signature effective;
  RunReport report;
};

PipelineState run_clausal_pipeline(const Ontology& o, const Signature& sigma,
                                   const PipelineOptions& opts, bool optimized) {
  PipelineState st;
  st.report.input_length = length(o);

  auto t = Clock::now();
  st.norm = clausify(o);
  st.report.stage_times_ms["clausify"] = ms_since(t);
  for (const auto& c : st.norm.clauses)
    st.report.cl_length += length(c.to_axiom());

  t = Clock::now();
  RoleIsolation ri = role_isolate(st.norm, sigma, opts.conflict_budget);
  st.report.stage_times_ms["role-isolation"] = ms_since(t);
  st.report.ri_clauses = ri.clauses.size();

  st.effective = sigma;
  if (!ri.widened_roles.empty()) {
    std::string joined;
    for (const auto& r : ri.widened_roles) {
      st.effective.roles.insert(r);
      if (!joined.empty()) joined += ' ';
      joined += r;
    }
    st.report.widened_signature = joined;
  }

  ClauseStore store(std::move(ri.clauses));
  t = Clock::now();
  forget_roles(store, st.effective, st.norm.provenance);
  st.report.stage_times_ms["role-forgetting"] = ms_since(t);
  assert(([&] {
    for (const auto& c : store.clauses())
      for (const auto& l : c.lits)
        if (l.is_quantified() && !st.effective.contains_role(l.role_name.text))
          return false;
    return true;
  })());

  t = Clock::now();
  forget_concepts(store, st.effective, st.norm.provenance);
  st.report.stage_times_ms["concept-forgetting"] = ms_since(t);

  if (optimized) {
    t = Clock::now();
    op1_conflict_elim(store, st.norm.provenance);
    op2_definer_propagation(store, st.norm.provenance);
    st.report.stage_times_ms["definer-elimination"] = ms_since(t);
  }

  st.clauses = store.take();
  t = Clock::now();
  st.report.subsumption_budget_hit =
      !delete_subsumed(st.clauses, opts.subsumption_budget);
  st.report.stage_times_ms["subsumption"] = ms_since(t);
  return st;
}

void finish_report(ModuleResult& r) {
  r.report.result_axioms = r.axioms.size();
  r.report.result_length = 0;
  r.report.max_axiom_length = 0;
  for (const auto& ax : r.axioms) {
    std::size_t n = length(ax);
    r.report.result_length += n;
    r.report.max_axiom_length = std::max(r.report.max_axiom_length, n);
  }
}

ModuleResult finish_module(PipelineState st, const PipelineOptions& opts) {
  ModuleResult r;
  auto t = Clock::now();
  r.axioms = simplify_axioms(substitute_definers(st.clauses, st.norm.definition),
                             opts.oracle);
  st.report.stage_times_ms["simplification"] = ms_since(t);
  r.clauses = std::move(st.clauses);
  r.norm = std::move(st.norm);
  r.report = std::move(st.report);
  finish_report(r);
  return r;
}

}  // namespace

ModuleResult general_module(const Ontology& o, const Signature& sigma,
                            const PipelineOptions& opts) {
  return finish_module(run_clausal_pipeline(o, sigma, opts, false), opts);
}

ModuleResult general_module_opt(const Ontology& o, const Signature& sigma,
                                const PipelineOptions& opts) {
  return finish_module(run_clausal_pipeline(o, sigma, opts, true), opts);
}

DeductiveResult deductive_module(const Ontology& o, const Signature& sigma,
                                 const PipelineOptions& opts) {
  ModuleResult gm = general_module_opt(o, sigma, opts);
  std::vector<std::uint64_t> ids;
  for (const auto& c : gm.clauses) ids.push_back(c.id);
  std::set<std::size_t> axioms = gm.norm.provenance.trace_to_axioms(ids);
  DeductiveResult r;
  r.report = gm.report;
  for (std::size_t i : axioms) {
    if (i >= o.axioms.size()) continue;
    r.indices.push_back(i);
    r.module.add(o.axioms[i], o.statement_of[i]);
  }
  r.report.result_axioms = r.module.axioms.size();
  r.report.result_length = length(r.module);
  r.report.max_axiom_length = 0;
  for (const auto& ax : r.module.axioms)
    r.report.max_axiom_length = std::max(r.report.max_axiom_length, length(ax));
  return r;
}

// ---------------------------------------------------------------------------
// Uniform interpolation

namespace {

struct Loose {
  std::uint64_t id = 0;
  std::vector<Concept> disjuncts;
};

void collect_definers(const Concept& c, std::set<std::string>& out) {
  Signature s = signature_of(c);
  for (const auto& n : s.concepts)
    if (is_definer_text(n)) out.insert(n);
}

bool has_negative_definer(const Concept& c, bool under_not = false) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return false;
    case Concept::Tag::Atom:
      return under_not && is_definer_text(c.atom_name().text);
    case Concept::Tag::Not:
      return has_negative_definer(c.child(), !under_not);
    case Concept::Tag::And:
    case Concept::Tag::Or:
      for (const auto& p : c.parts())
        if (has_negative_definer(p, under_not)) return true;
      return false;
    case Concept::Tag::Exists:
    case Concept::Tag::Forall:
      return has_negative_definer(c.child(), under_not);
  }
  return false;
}

Concept replace_atom(const Concept& c, const std::string& name,
                     const Concept& with) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return c;
    case Concept::Tag::Atom:
      return c.atom_name().text == name ? with : c;
    case Concept::Tag::Not:
      return Concept::negate(replace_atom(c.child(), name, with));
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) parts.push_back(replace_atom(p, name, with));
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
      return Concept::exists(c.role(), replace_atom(c.child(), name, with));
    case Concept::Tag::Forall:
      return Concept::forall(c.role(), replace_atom(c.child(), name, with));
  }
  return c;
}

bool is_neg_definer_disjunct(const Concept& c, const std::string& d) {
  return c.tag() == Concept::Tag::Not && c.child().is_atom() &&
         c.child().atom_name().text == d;
}

}  // namespace

ModuleResult uniform_interpolant(const Ontology& o, const Signature& sigma,
                                 const PipelineOptions& opts) {
  PipelineState st = run_clausal_pipeline(o, sigma, opts, true);

  std::vector<Loose> loose;
  for (const auto& c : st.clauses) {
    Loose l{c.id, {}};
    for (const auto& lit : c.lits) l.disjuncts.push_back(lit.to_concept());
    loose.push_back(std::move(l));
  }

  UiStatus status =
      st.report.widened_signature.empty() ? UiStatus::Exact
                                          : UiStatus::GeneralModuleOnly;
  Deadline deadline(opts.definer_budget);
  auto t = Clock::now();
  while (true) {
    std::set<std::string> definers;
    for (const auto& l : loose)
      for (const auto& d : l.disjuncts) collect_definers(d, definers);
    if (definers.empty()) break;
    if (deadline.expired()) {
      // Fall back to the optimized general module as computed.
      ModuleResult r = finish_module(std::move(st), opts);
      r.report.ui_status = UiStatus::GeneralModuleOnly;
      return r;
    }
    const std::string d = *definers.begin();

    std::vector<std::size_t> neg_idx;
    bool clean = true;
    for (std::size_t i = 0; i < loose.size() && clean; ++i) {
      bool has_neg = false;
      for (const auto& dj : loose[i].disjuncts)
        if (is_neg_definer_disjunct(dj, d)) has_neg = true;
      if (!has_neg) continue;
      neg_idx.push_back(i);
      for (const auto& dj : loose[i].disjuncts)
        if (!is_neg_definer_disjunct(dj, d) && has_negative_definer(dj))
          clean = false;
    }

    auto substitute_by_definition = [&] {
      const Concept& def = st.norm.definition_of(d);
      for (auto& l : loose) {
        bool hit = false;
        std::vector<Concept> next;
        for (const auto& dj : l.disjuncts) {
          Concept repl = replace_atom(dj, d, def);
          if (!(repl == dj)) hit = true;
          next.push_back(std::move(repl));
        }
        if (hit) {
          std::uint64_t id = st.norm.provenance.fresh_id();
          st.norm.provenance.set_premises(id, {l.id});
          l.id = id;
          l.disjuncts = std::move(next);
        }
      }
      status = status == UiStatus::Exact ? UiStatus::Approximate : status;
    };

    if (!clean) {
      substitute_by_definition();
      continue;
    }

    std::vector<Concept> pieces;
    std::vector<std::uint64_t> neg_ids;
    for (std::size_t i : neg_idx) {
      neg_ids.push_back(loose[i].id);
      std::vector<Concept> rest;
      for (const auto& dj : loose[i].disjuncts)
        if (!is_neg_definer_disjunct(dj, d)) rest.push_back(dj);
      pieces.push_back(rest.empty() ? Concept::bottom()
                                    : Concept::disj(std::move(rest)));
    }
    Concept replacement =
        pieces.empty() ? Concept::top() : Concept::conj(std::move(pieces));

    if (signature_of(replacement).concepts.count(d)) {
      // Cyclic: the definer recurs inside its own replacement.
      substitute_by_definition();
      continue;
    }

    std::set<std::size_t> drop(neg_idx.begin(), neg_idx.end());
    std::vector<Loose> next;
    for (std::size_t i = 0; i < loose.size(); ++i) {
      if (drop.count(i)) continue;
      Loose& l = loose[i];
      bool hit = false;
      std::vector<Concept> dj2;
      for (const auto& dj : l.disjuncts) {
        Concept repl = replace_atom(dj, d, replacement);
        if (!(repl == dj)) hit = true;
        dj2.push_back(std::move(repl));
      }
      if (hit) {
        std::uint64_t id = st.norm.provenance.fresh_id();
        std::vector<std::uint64_t> premises{l.id};
        premises.insert(premises.end(), neg_ids.begin(), neg_ids.end());
        st.norm.provenance.set_premises(id, std::move(premises));
        l.id = id;
        l.disjuncts = std::move(dj2);
      }
      next.push_back(std::move(l));
    }
    loose = std::move(next);
  }
  st.report.stage_times_ms["interpolation"] = ms_since(t);

  ModuleResult r;
  std::vector<Axiom> raw;
  for (auto& l : loose)
    raw.push_back(Axiom{Concept::top(), Concept::disj(l.disjuncts)});
  r.axioms = simplify_axioms(raw, opts.oracle);
  r.clauses.clear();
  for (const auto& l : loose) r.clauses.push_back(Clause{l.id, {}});
  r.norm = std::move(st.norm);
  r.report = std::move(st.report);
  r.report.ui_status = status;
  finish_report(r);
  return r;
}

}  // namespace alcmod
