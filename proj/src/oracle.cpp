#include "alcmod/oracle.hpp"

#include <random>
#include <set>
#include <vector>

namespace alcmod {

namespace {

using Label = std::set<Concept>;

struct NodeBudgetExceeded {};

class Tableau {
 public:
  Tableau(const Ontology& o, std::size_t max_nodes) : max_nodes_(max_nodes) {
    for (const auto& ax : o.axioms)
      tbox_.push_back(simplify_concept(
          nnf(Concept::disj({Concept::negate(ax.lhs), ax.rhs}))));
  }

  bool satisfiable(const Concept& c) {
    Label root;
    add(root, simplify_concept(nnf(c)));
    std::vector<const Label*> ancestors;
    return node_sat(std::move(root), ancestors);
  }

 private:
  static bool clash(const Label& label) {
    if (label.count(Concept::bottom())) return true;
    for (const auto& c : label)
      if (c.tag() == Concept::Tag::Not && label.count(c.child())) return true;
    return false;
  }

  // Inserts c and saturates conjunctions.
  static void add(Label& label, const Concept& c) {
    if (c.is_top()) return;
    if (!label.insert(c).second) return;
    if (c.tag() == Concept::Tag::And)
      for (const auto& p : c.parts()) add(label, p);
  }

  bool node_sat(Label label, std::vector<const Label*>& ancestors) {
    if (++nodes_ > max_nodes_) throw NodeBudgetExceeded{};
    for (const auto& k : tbox_) add(label, k);
    if (clash(label)) return false;

    // Branch on the first disjunction with no disjunct already present.
    for (const auto& c : label) {
      if (c.tag() != Concept::Tag::Or) continue;
      bool satisfied = false;
      for (const auto& d : c.parts())
        if (label.count(d) || d.is_top()) {
          satisfied = true;
          break;
        }
      if (satisfied) continue;
      for (const auto& d : c.parts()) {
        Label branch = label;
        add(branch, d);
        if (!clash(branch) && node_sat(std::move(branch), ancestors)) return true;
      }
      return false;
    }

    // Fully expanded locally: check role successors.
    for (const auto* anc : ancestors) {
      bool subset = true;
      for (const auto& c : label)
        if (!anc->count(c)) {
          subset = false;
          break;
        }
      if (subset) return true;  // blocked
    }
    ancestors.push_back(&label);
    bool ok = true;
    for (const auto& c : label) {
      if (c.tag() != Concept::Tag::Exists) continue;
      Label succ;
      add(succ, c.child());
      for (const auto& d : label)
        if (d.tag() == Concept::Tag::Forall && d.role() == c.role())
          add(succ, d.child());
      if (!node_sat(std::move(succ), ancestors)) {
        ok = false;
        break;
      }
    }
    ancestors.pop_back();
    return ok;
  }

  std::vector<Concept> tbox_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
};

}  // namespace

SatResult is_satisfiable(const Concept& c, const Ontology& o,
                         const OracleOptions& opts) {
  try {
    return Tableau(o, opts.max_nodes).satisfiable(c) ? SatResult::Sat
                                                     : SatResult::Unsat;
  } catch (const NodeBudgetExceeded&) {
    return SatResult::ResourceExceeded;
  }
}

std::optional<bool> entails(const Ontology& o, const Axiom& ax,
                            const OracleOptions& opts) {
  Concept probe = Concept::conj({ax.lhs, Concept::negate(ax.rhs)});
  switch (is_satisfiable(probe, o, opts)) {
    case SatResult::Sat: return false;
    case SatResult::Unsat: return true;
    case SatResult::ResourceExceeded: return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sampling

struct ConceptSampler::Impl {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  std::mt19937_64 rng;

  Concept leaf() {
    if (concepts.empty()) {
      return std::uniform_int_distribution<int>(0, 1)(rng) ? Concept::top()
                                                           : Concept::bottom();
    }
    // Mostly names; an occasional ⊤ or ⊥.
    int pick = std::uniform_int_distribution<int>(0, 9)(rng);
    if (pick == 8) return Concept::top();
    if (pick == 9) return Concept::bottom();
    std::size_t i =
        std::uniform_int_distribution<std::size_t>(0, concepts.size() - 1)(rng);
    return Concept::atom(concept_name(concepts[i]));
  }

  Name role() {
    std::size_t i =
        std::uniform_int_distribution<std::size_t>(0, roles.size() - 1)(rng);
    return role_name(roles[i]);
  }

  Concept gen(int depth) {
    bool stop = depth <= 0 ||
                std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    if (stop) return leaf();
    int top = roles.empty() ? 2 : 4;
    switch (std::uniform_int_distribution<int>(0, top)(rng)) {
      case 0: return Concept::negate(gen(depth - 1));
      case 1: return Concept::conj({gen(depth - 1), gen(depth - 1)});
      case 2: return Concept::disj({gen(depth - 1), gen(depth - 1)});
      case 3: return Concept::exists(role(), gen(depth - 1));
      default: return Concept::forall(role(), gen(depth - 1));
    }
  }
};

ConceptSampler::ConceptSampler(const Signature& sigma, std::uint64_t seed)
    : impl_(std::make_shared<Impl>()) {
  impl_->concepts.assign(sigma.concepts.begin(), sigma.concepts.end());
  impl_->roles.assign(sigma.roles.begin(), sigma.roles.end());
  impl_->rng.seed(seed);
}

Concept ConceptSampler::concept_sample() { return impl_->gen(6); }

Axiom ConceptSampler::axiom_sample() {
  Concept lhs = concept_sample();
  Concept rhs = concept_sample();
  return Axiom{std::move(lhs), std::move(rhs)};
}

InseparabilityReport inseparable_sampled(const Ontology& a, const Ontology& b,
                                         const Signature& sigma,
                                         std::uint64_t seed,
                                         std::size_t samples,
                                         const OracleOptions& opts) {
  InseparabilityReport rep;
  auto check = [&](const Axiom& ax) {
    if (rep.separable) return;
    auto ea = entails(a, ax, opts);
    auto eb = entails(b, ax, opts);
    ++rep.samples_checked;
    if (!ea || !eb) {
      rep.resource_exceeded = true;
      return;
    }
    if (*ea != *eb) {
      rep.separable = true;
      rep.witness = ax;
    }
  };

  // Targeted candidates: axioms of either ontology already inside Σ.
  auto inside_sigma = [&](const Axiom& ax) {
    Signature s = signature_of(ax);
    for (const auto& c : s.concepts)
      if (!sigma.contains_concept(c)) return false;
    for (const auto& r : s.roles)
      if (!sigma.contains_role(r)) return false;
    return true;
  };
  for (const Ontology* o : {&a, &b})
    for (const auto& ax : o->axioms) {
      if (rep.separable) return rep;
      if (inside_sigma(ax)) check(ax);
    }

  ConceptSampler sampler(sigma, seed);
  for (std::size_t i = 0; i < samples && !rep.separable; ++i)
    check(sampler.axiom_sample());
  return rep;
}

}  // namespace alcmod
