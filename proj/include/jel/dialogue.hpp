#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jel/commitments.hpp"
#include "jel/derive.hpp"

namespace jel {

enum class ActKind {
  RequestJustification,
  RequestExplanation,
  Assert,
  ChallengeCQ,
  AnswerCQ,
  Concede,
  Retract,
};

struct SpeechAct {
  ActKind kind = ActKind::Assert;
  Agent from;  // the acting agent
  // Requests: addressee, requested term, carrier kind of the inner assertion
  // (Justified or Explained; always Justified for justification requests),
  // and its holder. `formula` is the requested body.
  Agent to;
  std::optional<Term> term;
  FormulaKind carrier = FormulaKind::Justified;
  Agent holder;
  // Assert/Answer/Concede/Retract content; request body; for a challenge the
  // encoding of the challenged request once known.
  std::optional<Formula> formula;
  // Challenge/Answer: which question, against which request (store id of the
  // requester's store; 0 = find it from `formula` or the open challenge).
  CqId cq = CqId::CQ1;
  int target = 0;

  static SpeechAct request_justification(Agent from, Agent to, Term term,
                                         Agent holder, Formula body);
  static SpeechAct request_explanation(Agent from, Agent to, Term term,
                                       FormulaKind carrier, Agent holder,
                                       Formula body);
  static SpeechAct assertion(Agent agent, Formula f);
  static SpeechAct challenge(Agent agent, CqId cq, int target);
  static SpeechAct answer(Agent agent, CqId cq, int target, Formula f);
  static SpeechAct concede(Agent agent, Formula f);
  static SpeechAct retract(Agent agent, Formula f);

  bool is_request() const {
    return kind == ActKind::RequestJustification ||
           kind == ActKind::RequestExplanation;
  }

  friend bool operator==(const SpeechAct&, const SpeechAct&) = default;
};

// C(from, to, !t :{to} (t :{holder} F), top), or <| for explanation
// requests. Throws NotARequest.
Commitment encode_request(const SpeechAct& sa);
std::optional<SpeechAct> decode_request(const Commitment& c);

struct PendingRequest {
  SpeechAct act;
  int store_id;  // id of the encoding in the requester's store
  std::optional<CqId> challenge;  // open critical question, if any
};

struct TraceRecord {
  int index;
  Agent from;
  Agent to;
  std::string act;  // REQUEST-JUST, ASSERT, CHALLENGE-CQ4, ...
  Formula formula;
};

std::string print_record(const TraceRecord& r);
// Inverse of print_record; throws ScenarioFormat.
TraceRecord parse_record(std::string_view line);
// The act a record stands for; challenge/answer targets are left to
// apply_move to resolve.
SpeechAct record_act(const TraceRecord& r);

struct DialogueState {
  KnowledgeBase kb;
  std::map<Agent, CommitmentStore> stores;
  std::vector<PendingRequest> pending;
  std::optional<Agent> turn;  // unset until someone moves
  std::optional<std::pair<Agent, Agent>> participants;
  std::vector<TraceRecord> trace;
  bool closed = false;
  int max_moves = 64;

  // Requests addressed to `agent` that are still open.
  std::vector<const PendingRequest*> pending_for(const Agent& agent) const;
};

// Does asserting f discharge request r?
bool discharges(const SpeechAct& request, const Formula& f);

// A sample of legal moves: replies to pending requests, or requests over
// other agents' assertions. Throws NotYourTurn.
std::vector<SpeechAct> legal_moves(const DialogueState& state,
                                   const Agent& agent);

// Throws IllegalMove naming the broken rule.
DialogueState apply_move(const DialogueState& state, const SpeechAct& sa);

// Applies every act in order; the first illegal act aborts with its index.
DialogueState run_script(const DialogueState& initial,
                         const std::vector<SpeechAct>& script);

}  // namespace jel
