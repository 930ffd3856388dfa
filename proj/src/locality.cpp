#include "alcmod/locality.hpp"

#include <map>
#include <random>

namespace alcmod {

namespace {

// Evaluates the constant-substitution transform. `to_top` selects the
// ⊤-variant. Non-Σ concept names become the chosen constant; a restriction
// over a non-Σ role collapses once its transformed filler is known.
Concept localize(const Concept& c, const Signature& sigma, bool to_top) {
  switch (c.tag()) {
    case Concept::Tag::Top:
    case Concept::Tag::Bottom:
      return c;
    case Concept::Tag::Atom:
      if (sigma.contains_concept(c.atom_name().text)) return c;
      return to_top ? Concept::top() : Concept::bottom();
    case Concept::Tag::Not:
      return Concept::negate(localize(c.child(), sigma, to_top));
    case Concept::Tag::And:
    case Concept::Tag::Or: {
      std::vector<Concept> parts;
      for (const auto& p : c.parts()) parts.push_back(localize(p, sigma, to_top));
      return c.tag() == Concept::Tag::And ? Concept::conj(std::move(parts))
                                          : Concept::disj(std::move(parts));
    }
    case Concept::Tag::Exists:
    case Concept::Tag::Forall: {
      Concept filler = localize(c.child(), sigma, to_top);
      bool sigma_role = sigma.contains_role(c.role().text);
      if (c.tag() == Concept::Tag::Exists) {
        // ⊥-variant: a non-Σ role is empty, so any ∃ over it is ⊥.
        // ⊤-variant: it is total, so ∃ over it holds whenever the filler does
        // somewhere — only a ⊤ filler makes that certain.
        if (!to_top && !sigma_role) return Concept::bottom();
        if (filler.is_bottom()) return Concept::bottom();
        if (to_top && !sigma_role && filler.is_top()) return Concept::top();
        return Concept::exists(c.role(), std::move(filler));
      }
      // ⊥-variant: ∀ over an empty role is vacuously ⊤. ⊤-variant: ∀ over a
      // total role requires the filler everywhere.
      if (!to_top && !sigma_role) return Concept::top();
      if (filler.is_top()) return Concept::top();
      if (to_top && !sigma_role && filler.is_bottom()) return Concept::bottom();
      return Concept::forall(c.role(), std::move(filler));
    }
  }
  return c;
}

bool local(const Axiom& ax, const Signature& sigma, bool to_top) {
  Concept lhs = simplify_concept(localize(ax.lhs, sigma, to_top));
  Concept rhs = simplify_concept(localize(ax.rhs, sigma, to_top));
  return lhs.is_bottom() || rhs.is_top() || lhs == rhs;
}

}  // namespace

bool is_bot_local(const Axiom& ax, const Signature& sigma) {
  return local(ax, sigma, false);
}

bool is_top_local(const Axiom& ax, const Signature& sigma) {
  return local(ax, sigma, true);
}

namespace {

// Single locality-module extraction: the module grows with every axiom that
// is not local w.r.t. Σ extended by the signature collected so far.
std::vector<std::size_t> extract_round(const Ontology& o,
                                       const std::vector<std::size_t>& in,
                                       const Signature& sigma, bool bot) {
  Signature sprime = sigma;
  std::set<std::size_t> kept;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : in) {
      if (kept.count(i)) continue;
      const Axiom& ax = o.axioms[i];
      if (bot ? is_bot_local(ax, sprime) : is_top_local(ax, sprime)) continue;
      kept.insert(i);
      Signature s = signature_of(ax);
      sprime.concepts.insert(s.concepts.begin(), s.concepts.end());
      sprime.roles.insert(s.roles.begin(), s.roles.end());
      changed = true;
    }
  }
  return {kept.begin(), kept.end()};
}

}  // namespace

LocalityModule extract_star_module(const Ontology& o, const Signature& sigma) {
  std::vector<std::size_t> current(o.axioms.size());
  for (std::size_t i = 0; i < current.size(); ++i) current[i] = i;
  while (true) {
    std::size_t before = current.size();
    current = extract_round(o, current, sigma, true);
    current = extract_round(o, current, sigma, false);
    if (current.size() == before) break;
  }
  LocalityModule m;
  m.indices = current;
  for (std::size_t i : current) m.module.add(o.axioms[i], o.statement_of[i]);
  return m;
}

Signature sample_signature(const Ontology& o, std::size_t count, std::uint64_t seed) {
  std::map<std::string, std::size_t> cfreq, rfreq;
  for (const auto& ax : o.axioms) {
    Signature s = signature_of(ax);
    for (const auto& n : s.concepts) ++cfreq[n];
    for (const auto& n : s.roles) ++rfreq[n];
  }
  struct Entry {
    std::string text;
    NameKind kind;
    double weight;
  };
  std::vector<Entry> pool;
  for (const auto& [n, w] : cfreq)
    pool.push_back({n, NameKind::Concept, static_cast<double>(w)});
  for (const auto& [n, w] : rfreq)
    pool.push_back({n, NameKind::Role, static_cast<double>(w)});
  if (count > pool.size())
    throw SignatureTooLarge("requested " + std::to_string(count) +
                            " names, ontology only has " +
                            std::to_string(pool.size()));

  std::mt19937_64 rng(seed);
  Signature out;
  for (std::size_t k = 0; k < count; ++k) {
    double total = 0;
    for (const auto& e : pool) total += e.weight;
    double pick = std::uniform_real_distribution<double>(0.0, total)(rng);
    std::size_t chosen = pool.size() - 1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      pick -= pool[i].weight;
      if (pick <= 0) {
        chosen = i;
        break;
      }
    }
    (pool[chosen].kind == NameKind::Concept ? out.concepts : out.roles)
        .insert(pool[chosen].text);
    pool.erase(pool.begin() + chosen);
  }
  return out;
}

}  // namespace alcmod
