#pragma once

#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "jel/syntax.hpp"

namespace jel {

struct KnowledgeBase {
  std::vector<Formula> assertions;
  std::vector<Term> term_universe;  // terms available for sums
};

// Declaration order is the tie-break order used by prove().
enum class Rule { A0, A2, A2e1, A2e2, A2e3, A3, A4, A4e, A5, A5e };

std::string_view rule_name(Rule r);

struct DerivationStep {
  Rule rule;
  std::vector<Formula> premises;
  Formula conclusion;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Derivation {
  std::vector<DerivationStep> steps;
  Formula goal;
  int depth = 0;
};

struct SaturateOptions {
  // Also derive the explanation variants !t <| (t : F) and ?t <| (~t : F)
  // of the checker rules. Off by default: that branch is a choice of the
  // asserting agent, not a consequence.
  bool explain_checkers = false;
};

struct Closure {
  std::set<Formula> formulas;  // kb assertions plus everything derived
  // Every recorded way of producing a derived formula.
  std::map<Formula, std::vector<DerivationStep>> producers;
  // Set when some conclusion was dropped for exceeding the height bound.
  bool truncated = false;

  bool contains(const Formula& f) const { return formulas.count(f) != 0; }
};

// Bounded forward closure; depth is the maximum height of derived terms.
Closure saturate_closure(const KnowledgeBase& kb, int depth,
                         const SaturateOptions& opts = {});

std::set<Formula> saturate(const KnowledgeBase& kb, int depth);

// One derivation of goal; kb members are leaves and need no steps.
std::optional<Derivation> prove(const KnowledgeBase& kb, const Formula& goal,
                                int depth);
std::optional<Derivation> prove(const Closure& closure,
                                const KnowledgeBase& kb, const Formula& goal,
                                int depth);

// Truth-table validity. Assertions and commitments are opaque atoms.
// Throws TooManyAtoms above 16 atoms.
bool check_tautology(const Formula& f);

// Plain assertions with no t : F or t <| F for the same body in kb.
std::vector<Formula> validate_necessity(const KnowledgeBase& kb);

}  // namespace jel
