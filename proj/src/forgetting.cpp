#include "alcmod/forgetting.hpp"

#include <algorithm>
#include <map>

namespace alcmod {

bool forget_roles(ClauseStore& store, const Signature& sigma, Provenance& prov,
                  const Deadline& deadline) {
  std::set<std::string> targets;
  for (const auto& c : store.clauses())
    for (const auto& l : c.lits)
      if (l.is_quantified() && !sigma.contains_role(l.role_name.text))
        targets.insert(l.role_name.text);

  for (const auto& r : targets) {
    if (!r_rule_saturate(store, r, prov, deadline)) return false;
    store.erase_if([&](const Clause& c) {
      return std::any_of(c.lits.begin(), c.lits.end(), [&](const Literal& l) {
        return l.is_quantified() && l.role_name.text == r;
      });
    });
  }
  return true;
}

namespace {

bool mentions_plain(const Clause& c, const std::string& name) {
  return std::any_of(c.lits.begin(), c.lits.end(), [&](const Literal& l) {
    return !l.is_quantified() && l.atom.text == name;
  });
}

}  // namespace

bool forget_concepts(ClauseStore& store, const Signature& sigma, Provenance& prov,
                     const Deadline& deadline) {
  std::map<std::string, std::size_t> count;
  for (const auto& c : store.clauses())
    for (const auto& l : c.lits)
      if (!l.is_quantified() && !l.atom.is_definer() &&
          !sigma.contains_concept(l.atom.text))
        ++count[l.atom.text];
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [name, n] : count) order.emplace_back(n, name);
  std::sort(order.begin(), order.end());

  for (const auto& [_, name] : order) {
    if (deadline.expired()) return false;
    for (auto& r : a_rule_resolvents(store.clauses(), name, prov))
      store.add(std::move(r));
    store.erase_if([&](const Clause& c) { return mentions_plain(c, name); });
  }

  // Cleanup: names outside Σ (definers included) whose clauses can go once
  // nothing refers to them inside a role restriction any more.
  bool removed = true;
  while (removed) {
    removed = false;
    auto rol = filler_roles(store.clauses());
    std::set<std::string> dead;
    for (const auto& c : store.clauses())
      for (const auto& l : c.lits)
        if (!l.is_quantified() && !sigma.contains_concept(l.atom.text) &&
            !rol.count(l.atom.text))
          dead.insert(l.atom.text);
    if (dead.empty()) break;
    store.erase_if([&](const Clause& c) {
      for (const auto& name : dead)
        if (mentions_plain(c, name)) return true;
      return false;
    });
    removed = true;
  }
  return true;
}

}  // namespace alcmod
