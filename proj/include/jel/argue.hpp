#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jel/derive.hpp"

namespace jel {

enum class ArgumentKind { Justificatory, Explanatory };

struct Argument {
  std::vector<Term> chain;        // chain[0] is nearest the conclusion
  std::vector<Formula> carriers;  // carriers[k] is the assertion made by chain[k]
  Formula conclusion;
  ArgumentKind kind;
  Agent holder;

  friend bool operator==(const Argument&, const Argument&) = default;
};

std::string describe(const Argument& a);  // <[t1, t2], F> J@agent

// Not g for a formula g, and g for Not g.
Formula complement(const Formula& f);

// All minimal arguments readable off a closure, grouped by conclusion.
class ArgumentPool {
 public:
  explicit ArgumentPool(const Closure& closure);
  ArgumentPool(const KnowledgeBase& kb, int depth);

  const std::vector<Argument>& for_conclusion(const Formula& f) const;
  const std::vector<Argument>& all() const { return all_; }
  const Closure& closure() const { return closure_; }

 private:
  void build();

  Closure closure_;
  std::vector<Argument> all_;
  std::map<Formula, std::vector<Argument>> by_conclusion_;
};

// Arguments for f and for complement(f), ordered by chain length then text.
std::vector<Argument> build_arguments(const KnowledgeBase& kb,
                                      const Formula& f, int depth);

bool is_minimal(const Argument& arg, const KnowledgeBase& kb, int depth);
bool is_minimal(const Argument& arg, const Closure& closure);

enum class AttackKind { Undercut, Rebuttal };

struct Attack {
  AttackKind kind;
  Argument attacker;
  Argument target;
  std::optional<std::size_t> locus;  // index into target.chain for undercuts
};

std::optional<Attack> attacks(const Argument& a1, const Argument& a2);

enum class Resolution { First, Second, Tie };

// Preference-based resolution of two rebutting arguments. Throws NotARebuttal
// and IncomparableChain.
Resolution resolve(const Argument& a_for, const Argument& a_against);

}  // namespace jel
