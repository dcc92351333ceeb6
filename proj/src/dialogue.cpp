#include "jel/dialogue.hpp"

#include <algorithm>
#include <regex>

#include "jel/error.hpp"

namespace jel {

SpeechAct SpeechAct::request_justification(Agent from, Agent to, Term term,
                                           Agent holder, Formula body) {
  SpeechAct sa;
  sa.kind = ActKind::RequestJustification;
  sa.from = std::move(from);
  sa.to = std::move(to);
  sa.term = std::move(term);
  sa.holder = std::move(holder);
  sa.formula = std::move(body);
  return sa;
}

SpeechAct SpeechAct::request_explanation(Agent from, Agent to, Term term,
                                         FormulaKind carrier, Agent holder,
                                         Formula body) {
  SpeechAct sa = request_justification(std::move(from), std::move(to),
                                       std::move(term), std::move(holder),
                                       std::move(body));
  sa.kind = ActKind::RequestExplanation;
  sa.carrier = carrier;
  return sa;
}

namespace {

SpeechAct content_act(ActKind kind, Agent agent, std::optional<Formula> f) {
  SpeechAct sa;
  sa.kind = kind;
  sa.from = std::move(agent);
  sa.formula = std::move(f);
  return sa;
}

}  // namespace

SpeechAct SpeechAct::assertion(Agent agent, Formula f) {
  return content_act(ActKind::Assert, std::move(agent), std::move(f));
}

SpeechAct SpeechAct::challenge(Agent agent, CqId cq, int target) {
  SpeechAct sa = content_act(ActKind::ChallengeCQ, std::move(agent), {});
  sa.cq = cq;
  sa.target = target;
  return sa;
}

SpeechAct SpeechAct::answer(Agent agent, CqId cq, int target, Formula f) {
  SpeechAct sa = content_act(ActKind::AnswerCQ, std::move(agent), std::move(f));
  sa.cq = cq;
  sa.target = target;
  return sa;
}

SpeechAct SpeechAct::concede(Agent agent, Formula f) {
  return content_act(ActKind::Concede, std::move(agent), std::move(f));
}

SpeechAct SpeechAct::retract(Agent agent, Formula f) {
  return content_act(ActKind::Retract, std::move(agent), std::move(f));
}

// ---------------------------------------------------------------------------

namespace {

Formula make_assertion(FormulaKind kind, Term t, Agent i, Formula body) {
  return kind == FormulaKind::Justified
             ? Formula::justified(std::move(t), std::move(i), std::move(body))
             : Formula::explained(std::move(t), std::move(i), std::move(body));
}

FormulaKind outer_kind(const SpeechAct& sa) {
  return sa.kind == ActKind::RequestJustification ? FormulaKind::Justified
                                                  : FormulaKind::Explained;
}

Formula inner_carrier(const SpeechAct& sa) {
  return make_assertion(sa.carrier, *sa.term, sa.holder, *sa.formula);
}

}  // namespace

Commitment encode_request(const SpeechAct& sa) {
  if (!sa.is_request() || !sa.term || !sa.formula)
    throw Error(ErrorCode::NotARequest, "speech act is not a request");
  Formula cond = make_assertion(outer_kind(sa), Term::bang(*sa.term), sa.to,
                                inner_carrier(sa));
  return Commitment(sa.from, sa.to, cond, Formula::top());
}

std::optional<SpeechAct> decode_request(const Commitment& c) {
  if (!c.condition || !c.promise || c.promise->kind() != FormulaKind::Top)
    return std::nullopt;
  const Formula& outer = *c.condition;
  if (!outer.is_assertion() || outer.term().kind() != TermKind::Bang ||
      outer.agent() != c.creditor)
    return std::nullopt;
  const Formula& inner = outer.body();
  if (!inner.is_assertion() || inner.term() != outer.term().inner())
    return std::nullopt;
  if (outer.kind() == FormulaKind::Justified) {
    if (inner.kind() != FormulaKind::Justified) return std::nullopt;
    return SpeechAct::request_justification(c.debtor, c.creditor, inner.term(),
                                            inner.agent(), inner.body());
  }
  return SpeechAct::request_explanation(c.debtor, c.creditor, inner.term(),
                                        inner.kind(), inner.agent(),
                                        inner.body());
}

bool discharges(const SpeechAct& request, const Formula& f) {
  if (!request.is_request() || !f.is_assertion()) return false;
  const Formula inner = inner_carrier(request);
  // The requested carrier with some justifier in place of !t.
  if (f.kind() == outer_kind(request) && f.agent() == request.to &&
      f.body() == inner)
    return true;
  // A justification request is also met by justifying the body directly.
  return request.kind == ActKind::RequestJustification &&
         f.kind() == FormulaKind::Justified && f.agent() == request.holder &&
         f.body() == *request.formula;
}

// ---------------------------------------------------------------------------
// Trace records

namespace {

std::string act_label(const SpeechAct& sa) {
  switch (sa.kind) {
    case ActKind::RequestJustification: return "REQUEST-JUST";
    case ActKind::RequestExplanation: return "REQUEST-EXPL";
    case ActKind::Assert: return "ASSERT";
    case ActKind::ChallengeCQ: return "CHALLENGE-" + cq_name(sa.cq);
    case ActKind::AnswerCQ: return "ANSWER-" + cq_name(sa.cq);
    case ActKind::Concede: return "CONCEDE";
    case ActKind::Retract: return "RETRACT";
  }
  return "?";
}

[[noreturn]] void bad_record(std::string_view line, const std::string& why) {
  throw Error(ErrorCode::ScenarioFormat,
              "bad trace record '" + std::string(line) + "': " + why);
}

}  // namespace

std::string print_record(const TraceRecord& r) {
  return std::to_string(r.index) + ". " + r.from.name() + " -> " +
         r.to.name() + " : " + r.act + " | " + print_formula(r.formula);
}

TraceRecord parse_record(std::string_view line) {
  static const std::regex kRecord(
      R"(^\s*(\d+)\. (\S+) -> (\S+) : (\S+) \| (.+?)\s*$)");
  std::cmatch m;
  if (!std::regex_match(line.begin(), line.end(), m, kRecord))
    bad_record(line, "expected 'N. from -> to : ACT | formula'");
  try {
    return TraceRecord{std::stoi(m[1].str()), Agent(m[2].str()),
                       Agent(m[3].str()), m[4].str(),
                       parse_formula(m[5].str())};
  } catch (const Error& e) {
    bad_record(line, e.what());
  }
}

SpeechAct record_act(const TraceRecord& r) {
  const std::string& act = r.act;
  if (act == "REQUEST-JUST" || act == "REQUEST-EXPL") {
    if (r.formula.kind() != FormulaKind::Commit)
      bad_record(print_record(r), "request without a commitment");
    auto sa = decode_request(r.formula.commitment());
    if (!sa || (act == "REQUEST-JUST") !=
                   (sa->kind == ActKind::RequestJustification))
      bad_record(print_record(r), "not a request encoding");
    return *sa;
  }
  if (act == "ASSERT") return SpeechAct::assertion(r.from, r.formula);
  if (act == "CONCEDE") return SpeechAct::concede(r.from, r.formula);
  if (act == "RETRACT") return SpeechAct::retract(r.from, r.formula);
  for (std::string_view prefix : {"CHALLENGE-", "ANSWER-"}) {
    if (act.rfind(prefix, 0) != 0) continue;
    auto cq = parse_cq(std::string_view(act).substr(prefix.size()));
    if (!cq) bad_record(print_record(r), "unknown question");
    if (prefix == "ANSWER-") return SpeechAct::answer(r.from, *cq, 0, r.formula);
    SpeechAct sa = SpeechAct::challenge(r.from, *cq, 0);
    sa.formula = r.formula;
    return sa;
  }
  bad_record(print_record(r), "unknown act '" + act + "'");
}

// ---------------------------------------------------------------------------
// Protocol

std::vector<const PendingRequest*> DialogueState::pending_for(
    const Agent& agent) const {
  std::vector<const PendingRequest*> out;
  for (const PendingRequest& p : pending)
    if (p.act.to == agent && !p.challenge) out.push_back(&p);
  return out;
}

namespace {

bool justifies_explanation(const Formula& f) {
  if (f.kind() != FormulaKind::Justified) return false;
  const Formula& body = f.body();
  return body.kind() == FormulaKind::Explained ||
         (body.kind() == FormulaKind::Not &&
          body.operand().kind() == FormulaKind::Explained);
}

Agent other_party(const DialogueState& s, const Agent& a) {
  if (!s.participants) return Agent();
  const auto& [x, y] = *s.participants;
  if (a == x) return y;
  if (a == y) return x;
  return Agent();
}

class Mover {
 public:
  Mover(const DialogueState& state, const SpeechAct& sa)
      : s_(state), sa_(sa), index_(state.trace.size() + 1) {}

  DialogueState run() {
    check_common();
    Agent to;
    switch (sa_.kind) {
      case ActKind::RequestJustification:
      case ActKind::RequestExplanation: to = request(); break;
      case ActKind::Assert: to = assert_formula(); break;
      case ActKind::ChallengeCQ: to = challenge(); break;
      case ActKind::AnswerCQ: to = answer(); break;
      case ActKind::Concede: to = concede(); break;
      case ActKind::Retract: to = retract(); break;
    }
    if (!record_formula_) record_formula_ = sa_.formula;
    s_.trace.push_back(TraceRecord{static_cast<int>(index_), sa_.from, to,
                                   act_label(sa_), *record_formula_});
    s_.turn = to.is_public() ? std::optional<Agent>() : std::optional<Agent>(to);
    return std::move(s_);
  }

 private:
  [[noreturn]] void fail(const std::string& rule, const std::string& why) {
    throw IllegalMove(rule, index_, why);
  }

  void check_common() {
    if (s_.closed) fail("closed", "the dialogue has ended");
    if (static_cast<int>(s_.trace.size()) >= s_.max_moves)
      fail("max-moves", "move limit reached");
    if (s_.turn && sa_.from != *s_.turn)
      fail("turn", "it is " + s_.turn->name() + "'s turn");
    if (!sa_.is_request() && sa_.kind != ActKind::ChallengeCQ && !sa_.formula)
      fail("content", "act carries no formula");
    if ((sa_.kind == ActKind::Assert || sa_.kind == ActKind::AnswerCQ) &&
        justifies_explanation(*sa_.formula))
      fail("A4e", "an explanation can only be explained: " +
                      print_formula(*sa_.formula));
    for (const PendingRequest& p : s_.pending) {
      if (p.challenge && p.act.from == sa_.from &&
          sa_.kind != ActKind::AnswerCQ && sa_.kind != ActKind::Retract)
        fail("challenge-open", "answer or retract the challenged request first");
    }
    auto open = s_.pending_for(sa_.from);
    if (open.empty()) return;
    if (sa_.kind == ActKind::ChallengeCQ || sa_.kind == ActKind::Concede) return;
    if (sa_.kind == ActKind::Assert) {
      for (const PendingRequest* p : open)
        if (discharges(p->act, *sa_.formula)) return;
    }
    fail("pending", "a request from " + open.front()->act.from.name() +
                        " awaits a reply");
  }

  Agent request() {
    if (!sa_.term || !sa_.formula) fail("content", "incomplete request");
    for (const PendingRequest& p : s_.pending)
      if (p.act.from == sa_.from && p.act.to == sa_.to)
        fail("duplicate-request", "one open request per pair");
    Commitment enc = encode_request(sa_);
    int id = s_.stores[sa_.from].add(sa_.from, enc);
    s_.pending.push_back(PendingRequest{sa_, id, std::nullopt});
    if (!s_.participants) s_.participants = std::make_pair(sa_.from, sa_.to);
    record_formula_ = Formula::commitment(enc);
    return sa_.to;
  }

  Agent assert_formula() {
    const Formula& f = *sa_.formula;
    s_.kb.assertions.push_back(f);
    for (auto it = s_.pending.begin(); it != s_.pending.end(); ++it) {
      if (it->act.to == sa_.from && !it->challenge && discharges(it->act, f)) {
        Agent requester = it->act.from;
        s_.pending.erase(it);
        return requester;
      }
    }
    return other_party(s_, sa_.from);
  }

  PendingRequest* find_target(bool want_challenged) {
    for (PendingRequest& p : s_.pending) {
      const bool mine = want_challenged ? p.act.from == sa_.from
                                        : p.act.to == sa_.from;
      if (!mine || p.challenge.has_value() != want_challenged) continue;
      if (sa_.target != 0 && p.store_id != sa_.target) continue;
      if (sa_.target == 0 && sa_.formula && sa_.kind == ActKind::ChallengeCQ &&
          *sa_.formula != Formula::commitment(encode_request(p.act)))
        continue;
      return &p;
    }
    return nullptr;
  }

  Agent challenge() {
    PendingRequest* p = find_target(false);
    if (!p) fail("challenge", "no such open request addressed to " +
                                  sa_.from.name());
    Commitment enc = encode_request(p->act);
    auto cqs = critical_questions(enc, *p->act.formula, sa_.from, p->store_id);
    bool known = std::any_of(cqs.begin(), cqs.end(), [&](const auto& q) {
      return q.id == sa_.cq;
    });
    if (!known) fail("challenge", cq_name(sa_.cq) + " does not apply");
    p->challenge = sa_.cq;
    record_formula_ = Formula::commitment(enc);
    return p->act.from;
  }

  Agent answer() {
    PendingRequest* p = find_target(true);
    if (!p || *p->challenge != sa_.cq)
      fail("answer", "no open " + cq_name(sa_.cq) + " against " +
                         sa_.from.name());
    p->challenge.reset();
    s_.kb.assertions.push_back(*sa_.formula);
    return p->act.to;
  }

  Agent concede() {
    auto open = s_.pending_for(sa_.from);
    Agent to = other_party(s_, sa_.from);
    if (!open.empty()) {
      to = open.front()->act.from;
      const int id = open.front()->store_id;
      const Agent requester = open.front()->act.from;
      std::erase_if(s_.pending, [&](const PendingRequest& p) {
        return p.store_id == id && p.act.from == requester;
      });
    }
    s_.closed = true;
    return to;
  }

  Agent retract() {
    const Formula& f = *sa_.formula;
    for (auto it = s_.pending.begin(); it != s_.pending.end(); ++it) {
      if (it->act.from == sa_.from &&
          Formula::commitment(encode_request(it->act)) == f) {
        Agent to = it->act.to;
        s_.pending.erase(it);
        return to;
      }
    }
    auto& as = s_.kb.assertions;
    auto it = std::find(as.begin(), as.end(), f);
    if (it == as.end()) fail("retract", "nothing to retract");
    as.erase(it);
    return other_party(s_, sa_.from);
  }

  DialogueState s_;
  const SpeechAct& sa_;
  std::size_t index_;
  std::optional<Formula> record_formula_;
};

}  // namespace

DialogueState apply_move(const DialogueState& state, const SpeechAct& sa) {
  return Mover(state, sa).run();
}

std::vector<SpeechAct> legal_moves(const DialogueState& state,
                                   const Agent& agent) {
  if (state.turn && *state.turn != agent)
    throw Error(ErrorCode::NotYourTurn,
                agent.name() + " moved out of turn; " + state.turn->name() +
                    " is next");
  std::vector<SpeechAct> out;
  if (state.closed) return out;
  for (const PendingRequest& p : state.pending) {
    if (p.challenge && p.act.from == agent) {
      out.push_back(SpeechAct::retract(
          agent, Formula::commitment(encode_request(p.act))));
      return out;
    }
  }
  auto open = state.pending_for(agent);
  if (!open.empty()) {
    for (const PendingRequest* p : open) {
      for (const Formula& f : state.kb.assertions)
        if (discharges(p->act, f) && !justifies_explanation(f))
          out.push_back(SpeechAct::assertion(agent, f));
      if (p->act.kind == ActKind::RequestJustification)
        out.push_back(SpeechAct::assertion(agent, inner_carrier(p->act)));
      Commitment enc = encode_request(p->act);
      for (const auto& q :
           critical_questions(enc, *p->act.formula, agent, p->store_id))
        out.push_back(SpeechAct::challenge(agent, q.id, p->store_id));
      out.push_back(SpeechAct::concede(agent, *p->act.formula));
    }
    return out;
  }
  for (const Formula& f : state.kb.assertions) {
    if (!f.is_assertion() || f.agent() == agent || f.agent().is_public())
      continue;
    out.push_back(SpeechAct::request_justification(agent, f.agent(), f.term(),
                                                   f.agent(), f.body()));
    out.push_back(SpeechAct::request_explanation(agent, f.agent(), f.term(),
                                                 f.kind(), f.agent(), f.body()));
  }
  return out;
}

DialogueState run_script(const DialogueState& initial,
                         const std::vector<SpeechAct>& script) {
  DialogueState s = initial;
  for (const SpeechAct& sa : script) s = apply_move(s, sa);
  return s;
}

}  // namespace jel
