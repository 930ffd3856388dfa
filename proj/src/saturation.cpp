#include "alcmod/saturation.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace alcmod {

bool ClauseStore::contains_subsumer(const LiteralSet& lits) const {
  for (const auto& c : clauses_)
    if (subsumes(c.lits, lits)) return true;
  return false;
}

bool ClauseStore::add(Clause cl) {
  if (contains_subsumer(cl.lits)) return false;
  std::erase_if(clauses_,
                [&](const Clause& c) { return subsumes(cl.lits, c.lits); });
  clauses_.push_back(std::move(cl));
  return true;
}

std::vector<Clause> a_rule_resolvents(const std::vector<Clause>& clauses,
                                      const std::string& atom,
                                      Provenance& prov) {
  Literal pos = Literal::pos(concept_name(atom));
  Literal neg = Literal::neg(concept_name(atom));
  std::vector<const Clause*> with_pos, with_neg;
  for (const auto& c : clauses) {
    if (c.contains(pos)) with_pos.push_back(&c);
    if (c.contains(neg)) with_neg.push_back(&c);
  }
  std::vector<Clause> out;
  for (const Clause* p : with_pos)
    for (const Clause* n : with_neg) {
      std::vector<Literal> merged;
      for (const auto& l : p->lits)
        if (!(l == pos)) merged.push_back(l);
      for (const auto& l : n->lits)
        if (!(l == neg)) merged.push_back(l);
      auto canon = canonical_clause(std::move(merged));
      if (!canon) continue;
      Clause cl{prov.fresh_id(), std::move(*canon)};
      prov.set_premises(cl.id, {p->id, n->id});
      out.push_back(std::move(cl));
    }
  return out;
}

namespace {

// One sweep of the role-propagation rule; appends fresh conclusions.
bool r_rule_sweep(ClauseStore& store, const std::optional<std::string>& only_role,
                  Provenance& prov, const Deadline& deadline, bool& timed_out) {
  const auto& clauses = store.clauses();

  // (role, quantifier, filler-name) -> indices of clauses holding the literal.
  std::map<std::tuple<std::string, Literal::Kind, std::string>,
           std::vector<std::size_t>>
      occ;
  // role -> (clause index, ∃-literal) pairs, for the extra successor premise.
  std::map<std::string, std::vector<std::pair<std::size_t, Literal>>> ex_any;
  std::set<std::string> roles;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (const auto& l : clauses[i].lits) {
      if (!l.is_quantified()) continue;
      if (only_role && l.role_name.text != *only_role) continue;
      roles.insert(l.role_name.text);
      if (auto a = l.filler_atom())
        occ[{l.role_name.text, l.kind, a->text}].push_back(i);
      if (l.kind == Literal::Kind::Ex)
        ex_any[l.role_name.text].emplace_back(i, l);
    }

  std::vector<Clause> conclusions;
  auto conclude = [&](const Clause& trigger,
                      const std::vector<std::pair<std::size_t, Literal>>& picks) {
    // Each premise occurrence contributes its own copy of the clause minus
    // the single picked literal; a clause reused for two premise roles keeps
    // the other role's literal in each copy.
    std::vector<Literal> merged;
    std::vector<std::uint64_t> premises{trigger.id};
    for (const auto& [idx, lit] : picks) {
      if (std::find(premises.begin(), premises.end(), clauses[idx].id) ==
          premises.end())
        premises.push_back(clauses[idx].id);
      for (const auto& l : clauses[idx].lits)
        if (!(l == lit)) merged.push_back(l);
    }
    auto canon = canonical_clause(std::move(merged));
    if (!canon || store.contains_subsumer(*canon)) return;
    for (const auto& c : conclusions)
      if (subsumes(c.lits, *canon)) return;
    Clause cl{prov.fresh_id(), std::move(*canon)};
    prov.set_premises(cl.id, std::move(premises));
    conclusions.push_back(std::move(cl));
  };

  // Enumerates one premise clause per trigger member, then finishes.
  auto expand = [&](const Clause& trigger, const std::string& role,
                    const std::vector<std::string>& members, auto&& finish) {
    std::vector<std::pair<std::size_t, Literal>> picks;
    auto rec = [&](auto&& self, std::size_t m, bool have_ex) -> void {
      if (timed_out) return;
      if (deadline.expired()) {
        timed_out = true;
        return;
      }
      if (m == members.size()) {
        finish(picks, have_ex);
        return;
      }
      const std::string& d = members[m];
      for (auto kind : {Literal::Kind::All, Literal::Kind::Ex}) {
        if (kind == Literal::Kind::Ex && have_ex) continue;
        auto it = occ.find({role, kind, d});
        if (it == occ.end()) continue;
        Literal lit = kind == Literal::Kind::Ex
                          ? Literal::ex(role_name(role),
                                        Concept::atom(definer_name(d)))
                          : Literal::all(role_name(role),
                                         Concept::atom(definer_name(d)));
        for (std::size_t idx : it->second) {
          picks.emplace_back(idx, lit);
          self(self, m + 1, have_ex || kind == Literal::Kind::Ex);
          picks.pop_back();
        }
      }
    };
    rec(rec, 0, false);
  };

  std::vector<Clause> triggers;
  for (const auto& c : clauses)
    if (c.all_neg_definers()) triggers.push_back(c);

  for (const auto& trigger : triggers) {
    std::vector<std::string> members;
    for (const auto& l : trigger.lits) members.push_back(l.atom.text);
    for (const auto& role : roles) {
      if (timed_out) break;
      expand(trigger, role, members,
             [&](const std::vector<std::pair<std::size_t, Literal>>& picks,
                 bool have_ex) {
               if (have_ex) {
                 conclude(trigger, picks);
                 return;
               }
               // All-universal match: any ∃-literal on this role supplies the
               // successor and joins the premises.
               auto it = ex_any.find(role);
               if (it == ex_any.end()) return;
               for (const auto& extra : it->second) {
                 auto with_extra = picks;
                 with_extra.push_back(extra);
                 conclude(trigger, with_extra);
               }
             });
    }
  }

  bool changed = false;
  for (auto& c : conclusions)
    if (store.add(std::move(c))) changed = true;
  return changed;
}

}  // namespace

bool r_rule_saturate(ClauseStore& store, const std::optional<std::string>& only_role,
                     Provenance& prov, const Deadline& deadline) {
  bool timed_out = false;
  while (r_rule_sweep(store, only_role, prov, deadline, timed_out))
    if (timed_out) return false;
  return !timed_out;
}

ConflictSets conflict_sets(NormalizedOntology& norm,
                           std::chrono::milliseconds budget) {
  Deadline deadline(budget);
  Provenance& prov = norm.provenance;
  ClauseStore store(norm.clauses);
  ConflictSets result;

  // Eliminate every non-definer concept name, cheapest first. Such names
  // never occur inside a role restriction in normal form, so resolving on
  // them and discarding their clauses preserves every consequence over the
  // definers and roles.
  std::map<std::string, std::size_t> count;
  for (const auto& c : store.clauses())
    for (const auto& l : c.lits)
      if ((l.kind == Literal::Kind::Pos || l.kind == Literal::Kind::Neg) &&
          !l.atom.is_definer())
        ++count[l.atom.text];
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [name, n] : count) order.emplace_back(n, name);
  std::sort(order.begin(), order.end());

  for (const auto& [_, name] : order) {
    if (deadline.expired()) {
      result.budget_exceeded = true;
      break;
    }
    for (auto& r : a_rule_resolvents(store.clauses(), name, prov))
      store.add(std::move(r));
    Literal pos = Literal::pos(concept_name(name));
    Literal neg = Literal::neg(concept_name(name));
    store.erase_if(
        [&](const Clause& c) { return c.contains(pos) || c.contains(neg); });
  }

  if (!result.budget_exceeded &&
      !r_rule_saturate(store, std::nullopt, prov, deadline))
    result.budget_exceeded = true;

  // Subset-minimal all-negative-definer clauses (the empty clause included).
  std::vector<const Clause*> conflicts;
  for (const auto& c : store.clauses())
    if (c.is_empty() || c.all_neg_definers()) conflicts.push_back(&c);
  std::sort(conflicts.begin(), conflicts.end(),
            [](const Clause* a, const Clause* b) {
              return a->lits.size() < b->lits.size();
            });
  std::vector<const Clause*> kept;
  for (const Clause* c : conflicts) {
    bool dominated = false;
    for (const Clause* k : kept)
      if (subsumes(k->lits, c->lits)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    kept.push_back(c);
    std::set<std::string> names;
    for (const auto& l : c->lits) names.insert(l.atom.text);
    result.sets.push_back(std::move(names));
    result.derivation_ids.push_back(c->id);
  }
  return result;
}

RoleIsolation role_isolate(NormalizedOntology& norm, const Signature& sigma,
                           std::chrono::milliseconds conflict_budget) {
  DefinerOrder ord = definer_order(norm.clauses);
  assert(ord.acyclic);
  auto rol = filler_roles(norm.clauses);

  auto roles_inside_sigma = [&](const std::string& definer) {
    auto it = rol.find(definer);
    if (it == rol.end()) return true;
    for (const auto& r : it->second)
      if (!sigma.contains_role(r)) return false;
    return true;
  };
  auto keep = [&](const Clause& c) {
    for (const auto& l : c.lits) {
      if (!l.is_neg_definer()) continue;
      auto it = ord.above.find(l.atom.text);
      if (it == ord.above.end()) {
        if (!roles_inside_sigma(l.atom.text)) return false;
        continue;
      }
      for (const auto& outer : it->second)
        if (!roles_inside_sigma(outer)) return false;
    }
    return true;
  };

  RoleIsolation out;
  std::set<std::uint64_t> kept_ids;
  for (const auto& c : norm.clauses)
    if (keep(c)) {
      out.clauses.push_back(c);
      kept_ids.insert(c.id);
    }
  out.filtered_count = out.clauses.size();

  ConflictSets cs = conflict_sets(norm, conflict_budget);
  out.conflict_budget_exceeded = cs.budget_exceeded;
  if (cs.budget_exceeded) {
    // The conflict computation is incomplete, so forgetting any non-Σ role
    // is no longer justified; report them all as kept.
    for (const auto& c : norm.clauses)
      for (const auto& l : c.lits)
        if (l.is_quantified() && !sigma.contains_role(l.role_name.text))
          out.widened_roles.insert(l.role_name.text);
  }

  for (std::size_t i = 0; i < cs.sets.size(); ++i) {
    const auto& set = cs.sets[i];
    if (set.empty()) {
      out.clauses.push_back(Clause{cs.derivation_ids[i], {}});
      continue;
    }
    std::optional<std::string> common_role;
    std::size_t existentials = 0;
    bool ok = true;
    for (const auto& d : set) {
      auto it = norm.positive_occurrence.find(d);
      if (it == norm.positive_occurrence.end() ||
          !kept_ids.count(it->second.clause_id)) {
        ok = false;
        break;
      }
      const auto& o = it->second;
      if (sigma.contains_role(o.role.text)) {
        ok = false;
        break;
      }
      if (common_role && *common_role != o.role.text) {
        ok = false;
        break;
      }
      common_role = o.role.text;
      if (o.quantifier == Literal::Kind::Ex) ++existentials;
    }
    if (!ok || existentials > 1) continue;
    std::vector<Literal> lits;
    for (const auto& d : set) lits.push_back(Literal::neg(definer_name(d)));
    auto canon = canonical_clause(std::move(lits));
    assert(canon);
    out.clauses.push_back(Clause{cs.derivation_ids[i], std::move(*canon)});
  }
  return out;
}

bool is_role_isolated(const std::vector<Clause>& clauses, const Signature& sigma) {
  auto rol = filler_roles(clauses);
  auto outside = [&](const std::string& name) {
    auto it = rol.find(name);
    if (it == rol.end()) return false;
    for (const auto& r : it->second)
      if (!sigma.contains_role(r)) return true;
    return false;
  };
  for (const auto& c : clauses) {
    bool all_neg_outside = !c.lits.empty();
    bool no_plain_outside = true;
    for (const auto& l : c.lits) {
      if (l.kind == Literal::Kind::Neg && outside(l.atom.text)) {
        no_plain_outside = false;
      } else if (l.kind == Literal::Kind::Pos && outside(l.atom.text)) {
        all_neg_outside = false;
        no_plain_outside = false;
      } else {
        all_neg_outside = false;
      }
    }
    if (!(all_neg_outside || no_plain_outside)) return false;
  }
  return true;
}

}  // namespace alcmod
