#include <doctest.h>

#include <fstream>
#include <sstream>

#include "jel/dialogue.hpp"
#include "jel/error.hpp"
#include "jel/scenario.hpp"

using namespace jel;

namespace {

Formula pf(const char* text) { return parse_formula(text); }
Term pt(const char* text) { return parse_term(text); }

const char* kJ = "C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight)";

std::string rule_of(const DialogueState& s, const SpeechAct& sa) {
  try {
    apply_move(s, sa);
  } catch (const IllegalMove& e) {
    return e.rule();
  }
  return "";
}

DialogueState prefix(std::size_t n) {
  Scenario sc = trip_booking_scenario();
  sc.script.resize(n);
  return run_script(initial_state(sc), sc.script);
}

bool is_justified_explanation(const Formula& f) {
  return f.kind() == FormulaKind::Justified &&
         f.body().kind() == FormulaKind::Explained;
}

}  // namespace

TEST_CASE("request encodings") {
  auto judge = SpeechAct::request_justification(
      Agent("judge"), Agent("lawyer"), pt("selfDefense"), Agent("v"),
      pf("useGun"));
  CHECK(encode_request(judge) ==
        parse_commitment("C(judge,lawyer, !selfDefense :{lawyer} "
                         "(selfDefense :{v} useGun), top)"));
  auto why = SpeechAct::request_explanation(Agent("a"), Agent("t"), pt("J"),
                                            FormulaKind::Justified, Agent("t"),
                                            pf("Trip"));
  CHECK(encode_request(why) ==
        parse_commitment("C(a,t, !J <|{t} (J :{t} Trip), top)"));
  auto self = SpeechAct::request_justification(Agent("a"), Agent("a"), pt("t"),
                                               Agent("a"), pf("F"));
  CHECK(encode_request(self) ==
        parse_commitment("C(a,a,!t:{a}(t:{a}F),top)"));
  CHECK_THROWS_AS(encode_request(SpeechAct::assertion(Agent("a"), pf("p"))),
                  Error);
}

TEST_CASE("decode inverts encode") {
  int n = 0;
  for (const char* from : {"a", "b"})
    for (const char* to : {"a", "b"})
      for (const char* holder : {"a", "b", "c"})
        for (const char* term : {"j", "x", "s . t", "C(a,b,top,p)"})
          for (const char* body : {"p", "~q", "t :{b} p", "e <|{a} p"}) {
            std::vector<SpeechAct> acts{
                SpeechAct::request_justification(Agent(from), Agent(to),
                                                 pt(term), Agent(holder),
                                                 pf(body)),
                SpeechAct::request_explanation(Agent(from), Agent(to),
                                               pt(term), FormulaKind::Justified,
                                               Agent(holder), pf(body)),
                SpeechAct::request_explanation(Agent(from), Agent(to),
                                               pt(term), FormulaKind::Explained,
                                               Agent(holder), pf(body))};
            for (const SpeechAct& sa : acts) {
              auto back = decode_request(encode_request(sa));
              REQUIRE(back.has_value());
              CHECK(*back == sa);
              ++n;
            }
          }
  CHECK(n == 2 * 2 * 3 * 4 * 4 * 3);
  CHECK_FALSE(decode_request(parse_commitment("C(a,b,top,p)")).has_value());
}

TEST_CASE("request then matching assert") {
  DialogueState s;
  s = apply_move(s, SpeechAct::request_justification(
                        Agent("a"), Agent("t"), pt("j"), Agent("t"),
                        pf("trip")));
  CHECK(s.pending.size() == 1);
  CHECK(s.turn == Agent("t"));
  CHECK(s.stores[Agent("a")].size() == 1);
  const std::size_t before = s.kb.assertions.size();
  s = apply_move(s, SpeechAct::assertion(Agent("t"), pf("c :{t} trip")));
  CHECK(s.pending.empty());
  CHECK(s.kb.assertions.size() == before + 1);
  CHECK(s.turn == Agent("a"));
}

TEST_CASE("explanation request answered by an explanation") {
  DialogueState s = prefix(3);
  REQUIRE(s.pending.size() == 1);
  CHECK(s.pending.front().act.kind == ActKind::RequestExplanation);
  s = apply_move(s, SpeechAct::assertion(
                        Agent("t"),
                        Formula::explained(
                            pt("C(t,t,acc /\\ flight,trip)"), Agent("t"),
                            Formula::justified(pt(kJ), Agent("t"),
                                               pf("trip")))));
  CHECK(s.pending.empty());
}

TEST_CASE("out of turn and other illegal moves") {
  DialogueState s = prefix(1);
  CHECK(rule_of(s, SpeechAct::assertion(Agent("a"), pf("p"))) == "turn");
  CHECK_THROWS_AS(legal_moves(s, Agent("a")), Error);
  CHECK(rule_of(s, SpeechAct::assertion(Agent("t"), pf("unrelated"))) ==
        "pending");
  CHECK(rule_of(s, SpeechAct::challenge(Agent("t"), CqId::CQ5, 0)) ==
        "challenge");

  DialogueState three = prefix(3);
  const Formula bad = Formula::justified(
      pt("k"), Agent("t"), pf("e <|{t} (j :{t} trip)"));
  CHECK(rule_of(three, SpeechAct::assertion(Agent("t"), bad)) == "A4e");
  for (const SpeechAct& m : legal_moves(three, Agent("t")))
    if (m.kind == ActKind::Assert) CHECK_FALSE(is_justified_explanation(*m.formula));

  DialogueState done = apply_move(
      prefix(1), SpeechAct::concede(Agent("t"), pf("trip")));
  CHECK(done.closed);
  CHECK(rule_of(done, SpeechAct::assertion(Agent("a"), pf("p"))) == "closed");
}

TEST_CASE("script aborts at the offending index") {
  Scenario sc = trip_booking_scenario();
  sc.script.resize(3);
  sc.script.push_back(SpeechAct::assertion(
      Agent("t"),
      Formula::justified(pt("k"), Agent("t"), pf("e <|{t} (j :{t} trip)"))));
  try {
    run_script(initial_state(sc), sc.script);
    FAIL("accepted");
  } catch (const IllegalMove& e) {
    CHECK(e.rule() == "A4e");
    CHECK(e.index() == 4);
  }
  CHECK(run_script(DialogueState{}, {}).trace.empty());
}

TEST_CASE("legitimacy challenge is offered") {
  DialogueState s = prefix(8);
  auto moves = legal_moves(s, Agent("a"));
  bool cq4 = false;
  for (const SpeechAct& m : moves)
    if (m.kind == ActKind::ChallengeCQ && m.cq == CqId::CQ4) cq4 = true;
  CHECK(cq4);

  // Challenge, answer, then the request is answered normally.
  REQUIRE(!s.pending.empty());
  const int id = s.pending.front().store_id;
  DialogueState c = apply_move(s, SpeechAct::challenge(Agent("a"), CqId::CQ4, id));
  CHECK(c.turn == Agent("t"));
  CHECK(rule_of(c, SpeechAct::assertion(Agent("t"), pf("p"))) ==
        "challenge-open");
  DialogueState ans = apply_move(
      c, SpeechAct::answer(Agent("t"), CqId::CQ4, id, pf("legit :{t} border")));
  CHECK(ans.turn == Agent("a"));
  DialogueState reply = apply_move(
      ans, SpeechAct::assertion(Agent("a"), pf("swissPassport :{a} ~euCitizen")));
  CHECK(reply.pending.empty());
}

TEST_CASE("requests are available on a free turn") {
  DialogueState s;
  s.kb.assertions.push_back(pf("c :{t} trip"));
  auto moves = legal_moves(s, Agent("a"));
  REQUIRE_FALSE(moves.empty());
  for (const SpeechAct& m : moves) CHECK(m.is_request());
}

TEST_CASE("trip trace matches the golden file") {
  std::ifstream in(JEL_GOLDEN_DIR "/trip_booking.trace", std::ios::binary);
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  std::string got;
  for (const std::string& l :
       trace_lines(run_scenario(trip_booking_scenario()).state))
    got += l + "\n";
  CHECK(got == golden.str());
}

TEST_CASE("trace records replay to the same state") {
  ScenarioRun run = run_scenario(trip_booking_scenario());
  DialogueState replay = initial_state(trip_booking_scenario());
  for (const std::string& line : trace_lines(run.state)) {
    TraceRecord r = parse_record(line);
    CHECK(print_record(r) == line);
    replay = apply_move(replay, record_act(r));
  }
  CHECK(replay.kb.assertions == run.state.kb.assertions);
  CHECK(trace_lines(replay) == trace_lines(run.state));
  CHECK_THROWS_AS(parse_record("not a record"), Error);
}

TEST_CASE("acceptance along the trip dialogue") {
  const AgentProfile a =
      parse_profile(Agent("a"), "externalist cautious preponderance");
  auto verdict = [&](std::size_t n) {
    return accepts(a, prefix(n).kb, pf("trip"), 3).verdict;
  };
  CHECK(verdict(2) == AcceptVerdict::Accept);
  CHECK(verdict(7) == AcceptVerdict::Reject);
  CHECK(verdict(9) == AcceptVerdict::Reject);
  CHECK(verdict(11) == AcceptVerdict::Reject);
  CHECK(verdict(12) == AcceptVerdict::Accept);
}
