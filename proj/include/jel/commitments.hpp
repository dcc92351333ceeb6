#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jel/syntax.hpp"

namespace jel {

enum class PatternClass {
  GP,               // gratuitous promise C(a,b,top,P)
  Request,          // C(a,b,Q,top)
  Taboo,            // C(a,b,~Q,top)
  CC,               // self commitment C(a,a,Q,P)
  UC,               // unilateral contract C(a,b,Q,P)
  BC,               // condition is itself a commitment
  PromiseToCommit,  // C(a,b,top,C(...))
  UCpGP,            // C(a,b,Q,C(...))
  GPplusR,          // GP + Request
  GPplusRqGP,       // GP + Request whose condition is a commitment
  PC,               // preference between two commitments of one debtor
  Other,
};

std::string_view pattern_name(PatternClass p);

// Total over non-template commitments; throws TemplateNotClassifiable for a
// "_" debtor.
PatternClass classify(const Commitment& c);

// Same checks as classify() without the self-commitment shortcut; used to
// rank a CC by the shape of its slots.
PatternClass classify_shape(const Commitment& c);

// Classifies compound justifiers: commitments, GP+R style sums and
// preferences. Anything else is Other.
PatternClass classify_term(const Term& t);

// True when f is or contains (through propositional connectives) a
// commitment in formula position.
bool embeds_commitment(const Formula& f);
bool embeds_commitment(const Slot& s);

Commitment compose_q(const Commitment& c, const Formula& x);
Commitment compose_q(const Commitment& c, const Commitment& x);
Commitment compose_p(const Commitment& c, const Formula& x);
Commitment compose_p(const Commitment& c, const Commitment& x);

enum class CqId { CQ1 = 1, CQ2, CQ3, CQ4, CQ5 };

struct CriticalQuestion {
  CqId id;
  std::string text;
  int target = 0;  // store id of the questioned commitment, 0 if none
  std::map<std::string, std::string> bindings;
};

std::string cq_name(CqId id);
std::optional<CqId> parse_cq(std::string_view s);

// Questions an `asker` may raise against c used as support for `justified`.
// Throws UnclassifiedPattern when c classifies as Other.
std::vector<CriticalQuestion> critical_questions(const Commitment& c,
                                                 const Formula& justified,
                                                 const Agent& asker,
                                                 int target = 0);

// Term form: a Commit, or a preference between commitments (PC).
std::vector<CriticalQuestion> critical_questions(const Term& t,
                                                 const Formula& justified,
                                                 const Agent& asker,
                                                 int target = 0);

// What each "_" slot of a template matched.
struct Bindings {
  std::optional<Agent> debtor;
  std::optional<Agent> creditor;
  std::optional<Slot> condition;
  std::optional<Slot> promise;

  friend bool operator==(const Bindings&, const Bindings&) = default;
};

std::optional<Bindings> match(const Commitment& tmpl, const Commitment& c);

// Fills the "_" slots of tmpl from b; slots without a binding stay "_".
Commitment substitute(const Commitment& tmpl, const Bindings& b);

struct StoreEntry {
  int id;
  Agent owner;
  Commitment commitment;
};

// Insertion-ordered store; ids are dense from 1.
class CommitmentStore {
 public:
  int add(Agent owner, Commitment c);

  const std::vector<StoreEntry>& entries() const { return entries_; }
  const StoreEntry* find(int id) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<StoreEntry> entries_;
};

}  // namespace jel
