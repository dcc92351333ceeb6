#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jel/argue.hpp"
#include "jel/strength.hpp"

namespace jel {

enum class AcceptanceMode { ExplanationSuffices, Rigorous, Demanding, Cautious };

struct Theory {
  enum class Kind { Foundationalist, Credulous, Internalist, Externalist };
  Kind kind = Kind::Externalist;
  int n = 1;  // Credulous only

  friend bool operator==(const Theory&, const Theory&) = default;
};

struct Sincerity {
  enum class Kind { None, Wholehearted, PartnerSpecific, Diffident };
  Kind kind = Kind::None;
  Agent partner;  // PartnerSpecific only

  friend bool operator==(const Sincerity&, const Sincerity&) = default;
};

struct AgentProfile {
  Agent id;
  AcceptanceMode acceptance = AcceptanceMode::Rigorous;
  // Every listed theory gate must pass; empty behaves as externalist.
  std::vector<Theory> theories;
  ProofStandard standard = ProofStandard::Scintilla;
  Sincerity sincerity;
};

// Order-free lowercase keywords, e.g. "externalist cautious preponderance".
// Theory keywords may be combined ("internalist credulous(2)") except with
// externalist. Throws InvalidProfile.
AgentProfile parse_profile(const Agent& id, std::string_view keywords);
std::string print_profile(const AgentProfile& p);

enum class AcceptVerdict { Accept, Reject };

struct Decision {
  AcceptVerdict verdict = AcceptVerdict::Reject;
  std::vector<std::string> reasons;
  std::optional<Argument> witness;
};

Decision accepts(const AgentProfile& p, const KnowledgeBase& kb,
                 const Formula& f, int depth);
Decision accepts(const AgentProfile& p, const ArgumentPool& pool,
                 const Formula& f);

// The theory and standard gates on a single argument.
bool passes_gates(const AgentProfile& p, const Argument& arg);

// An explanatory argument for the complement of f, and the counter-argument
// that undercuts it for p, if any.
struct OpposingExplanation {
  Argument argument;
  std::optional<Argument> defeater;
};

std::vector<OpposingExplanation> opposing_explanations(
    const AgentProfile& p, const ArgumentPool& pool, const Formula& f);

// Self commitments expressing sincerity; P is the placeholder atom "P".
// Throws NotSincere.
std::vector<Commitment> sincerity_commitments(const AgentProfile& p);

// ~ C :{id} P for every own commitment C = C(id,y,top,P). Throws NotDiffident.
std::vector<Formula> diffident_assertions(const AgentProfile& p,
                                          const std::vector<Commitment>& own);

}  // namespace jel
