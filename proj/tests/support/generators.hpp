#pragma once

// Random values for property tests. Everything is driven by an explicit
// std::mt19937 so failures reproduce from the seed alone.

#include <random>
#include <string>
#include <vector>

#include "jel/derive.hpp"
#include "jel/syntax.hpp"

namespace gen {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(int percent = 50) { return below(100) < percent; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Three atoms, two agents: the alphabet of the round-trip property.
inline const std::vector<std::string> kAtoms{"p", "q", "r"};
inline const std::vector<std::string> kAgents{"i", "j"};

inline jel::Formula formula(Gen& g, int depth);
inline jel::Term term(Gen& g, int depth);

inline jel::Agent agent(Gen& g, bool allow_public) {
  if (allow_public && g.coin(20)) return jel::Agent::public_agent();
  return jel::Agent(g.pick(kAgents));
}

inline jel::Slot slot(Gen& g, int depth) {
  if (g.coin(15)) return std::nullopt;
  return formula(g, depth);
}

inline jel::Commitment commitment(Gen& g, int depth) {
  jel::Agent debtor =
      g.coin(10) ? jel::Agent::dont_care() : jel::Agent(g.pick(kAgents));
  jel::Agent creditor =
      g.coin(15) ? jel::Agent::dont_care() : jel::Agent(g.pick(kAgents));
  return jel::Commitment(debtor, creditor, slot(g, depth - 1),
                         slot(g, depth - 1));
}

inline jel::Term term(Gen& g, int depth) {
  const int leaf_kinds = 4;
  const int kinds = depth <= 1 ? leaf_kinds : leaf_kinds + 6;
  switch (g.below(kinds)) {
    case 0: return jel::Term::var(g.coin() ? "x" : "y");
    case 1: return jel::Term::constant(g.coin() ? "s" : "t");
    case 2: return jel::Term::commit(commitment(g, std::min(depth, 2)));
    case 3: return jel::Term::absent(commitment(g, std::min(depth, 2)));
    case 4: return jel::Term::apply(term(g, depth - 1), term(g, depth - 1));
    case 5: return jel::Term::sum(term(g, depth - 1), term(g, depth - 1));
    case 6: return jel::Term::bang(term(g, depth - 1));
    case 7: return jel::Term::query(term(g, depth - 1));
    case 8: return jel::Term::stronger(term(g, depth - 1), term(g, depth - 1));
    default: return jel::Term::prefer(term(g, depth - 1), term(g, depth - 1));
  }
}

inline jel::Formula formula(Gen& g, int depth) {
  const int leaf_kinds = 2;
  const int kinds = depth <= 1 ? leaf_kinds : leaf_kinds + 7;
  switch (g.below(kinds)) {
    case 0: return jel::Formula::atom(g.pick(kAtoms));
    case 1: return g.coin(70) ? jel::Formula::atom(g.pick(kAtoms))
                              : jel::Formula::top();
    case 2: return jel::Formula::negation(formula(g, depth - 1));
    case 3:
      return jel::Formula::disjunction(formula(g, depth - 1),
                                       formula(g, depth - 1));
    case 4:
      return jel::Formula::conjunction(formula(g, depth - 1),
                                       formula(g, depth - 1));
    case 5:
      return jel::Formula::implication(formula(g, depth - 1),
                                       formula(g, depth - 1));
    case 6:
      return jel::Formula::justified(term(g, depth - 1), agent(g, true),
                                     formula(g, depth - 1));
    case 7:
      return jel::Formula::explained(term(g, depth - 1), agent(g, true),
                                     formula(g, depth - 1));
    default: return jel::Formula::commitment(commitment(g, depth - 1));
  }
}

// Knowledge bases for the axiom properties: up to 6 atoms, up to 4
// commitments used as justifiers, assertion bodies that chain through
// implications so the application rules actually fire.
struct KbShape {
  int atoms = 6;
  int commitments = 4;
  int assertions = 6;
};

inline jel::KnowledgeBase knowledge_base(Gen& g, const KbShape& shape = {}) {
  std::vector<jel::Formula> atoms;
  for (int k = 0; k < 1 + g.below(shape.atoms); ++k)
    atoms.push_back(jel::Formula::atom("a" + std::to_string(k)));
  std::vector<jel::Term> justifiers;
  const int n_commit = 1 + g.below(shape.commitments);
  for (int k = 0; k < n_commit; ++k) {
    jel::Slot cond = g.coin(40) ? jel::Slot(jel::Formula::top())
                                : jel::Slot(g.pick(atoms));
    jel::Slot prom = g.coin(20) ? jel::Slot(jel::Formula::top())
                                : jel::Slot(g.pick(atoms));
    justifiers.push_back(jel::Term::commit(jel::Commitment(
        jel::Agent(g.pick(kAgents)), jel::Agent(g.pick(kAgents)), cond, prom)));
  }
  justifiers.push_back(jel::Term::constant("c0"));

  auto body = [&]() {
    const jel::Formula& a = g.pick(atoms);
    if (g.coin(45)) return jel::Formula::implication(a, g.pick(atoms));
    if (g.coin(15)) return jel::Formula::negation(a);
    return a;
  };
  jel::KnowledgeBase kb;
  const int n = 1 + g.below(shape.assertions);
  for (int k = 0; k < n; ++k) {
    const jel::Term& t = g.pick(justifiers);
    jel::Agent ag(g.pick(kAgents));
    jel::Formula a = g.coin(65) ? jel::Formula::justified(t, ag, body())
                                : jel::Formula::explained(t, ag, body());
    if (g.coin(10)) a = jel::Formula::negation(a);
    kb.assertions.push_back(a);
  }
  if (g.coin(50)) kb.term_universe.push_back(g.pick(justifiers));
  if (g.coin(25)) kb.term_universe.push_back(jel::Term::constant("u0"));
  return kb;
}

}  // namespace gen
