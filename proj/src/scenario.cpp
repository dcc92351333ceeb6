#include "jel/scenario.hpp"

#include <cctype>
#include <map>

#include "jel/error.hpp"

namespace jel {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::ScenarioFormat,
              "line " + std::to_string(line_no) + ": " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits "owner: rest" at the first colon.
std::pair<std::string_view, std::string_view> split_label(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return {{}, s};
  return {trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

// Word-at-a-time reader over a script line; terms and formulas are handed
// to the parser at the current offset.
class LineReader {
 public:
  explicit LineReader(std::string_view line) : line_(line) {}

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < line_.size() &&
           !std::isspace(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return std::string(line_.substr(start, pos_ - start));
  }

  Agent agent() { return Agent(word()); }

  Term term() {
    skip_space();
    std::size_t end = 0;
    Term t = parse_term_prefix(line_, pos_, end);
    pos_ = end;
    return t;
  }

  Formula rest_formula() {
    skip_space();
    if (pos_ >= line_.size()) fail("missing formula");
    return parse_formula(line_.substr(pos_));
  }

  void expect_end() {
    skip_space();
    if (pos_ != line_.size()) fail("trailing text");
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ScenarioFormat,
                why + " in '" + std::string(line_) + "'");
  }

 private:
  void skip_space() {
    while (pos_ < line_.size() &&
           std::isspace(static_cast<unsigned char>(line_[pos_])))
      ++pos_;
  }

  std::string_view line_;
  std::size_t pos_ = 0;
};

CqId read_cq(LineReader& r) {
  std::string w = r.word();
  auto cq = parse_cq(w);
  if (!cq) r.fail("unknown critical question '" + w + "'");
  return *cq;
}

int read_id(LineReader& r) {
  std::string w = r.word();
  if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
    r.fail("expected a commitment id, got '" + w + "'");
  return std::stoi(w);
}

}  // namespace

SpeechAct parse_script_line(std::string_view line) {
  LineReader r(line);
  const std::string verb = r.word();
  if (verb == "request-just") {
    Agent from = r.agent();
    Agent to = r.agent();
    Term t = r.term();
    Agent holder = r.agent();
    return SpeechAct::request_justification(from, to, t, holder,
                                            r.rest_formula());
  }
  if (verb == "request-expl") {
    Agent from = r.agent();
    Agent to = r.agent();
    Term t = r.term();
    std::string op = r.word();
    if (op != ":" && op != "<|") r.fail("expected ':' or '<|'");
    Agent holder = r.agent();
    return SpeechAct::request_explanation(
        from, to, t, op == ":" ? FormulaKind::Justified : FormulaKind::Explained,
        holder, r.rest_formula());
  }
  if (verb == "assert") {
    Agent a = r.agent();
    return SpeechAct::assertion(a, r.rest_formula());
  }
  if (verb == "challenge") {
    Agent a = r.agent();
    CqId cq = read_cq(r);
    int id = read_id(r);
    r.expect_end();
    return SpeechAct::challenge(a, cq, id);
  }
  if (verb == "answer") {
    Agent a = r.agent();
    CqId cq = read_cq(r);
    int id = read_id(r);
    return SpeechAct::answer(a, cq, id, r.rest_formula());
  }
  if (verb == "concede") {
    Agent a = r.agent();
    return SpeechAct::concede(a, r.rest_formula());
  }
  if (verb == "retract") {
    Agent a = r.agent();
    return SpeechAct::retract(a, r.rest_formula());
  }
  r.fail("unknown act '" + verb + "'");
}

Scenario parse_scenario(std::string_view text, bool require_agents) {
  Scenario s;
  std::string section;
  bool saw_agents = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    std::string_view line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') bad_line(line_no, "unterminated section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section == "agents") saw_agents = true;
      if (section != "agents" && section != "store" && section != "kb" &&
          section != "universe" && section != "script")
        bad_line(line_no, "unknown section [" + section + "]");
      continue;
    }
    try {
      if (section == "agents") {
        auto [name, keywords] = split_label(line);
        if (name.empty()) bad_line(line_no, "expected 'agent: keywords'");
        Agent id{std::string(name)};
        for (const AgentProfile& p : s.agents)
          if (p.id == id) bad_line(line_no, "agent listed twice");
        s.agents.push_back(parse_profile(id, keywords));
      } else if (section == "store") {
        auto [owner, rest] = split_label(line);
        if (owner.empty()) bad_line(line_no, "expected 'owner: C(...)'");
        s.store.emplace_back(Agent(std::string(owner)), parse_commitment(rest));
      } else if (section == "kb") {
        s.kb.assertions.push_back(parse_formula(line));
      } else if (section == "universe") {
        s.kb.term_universe.push_back(parse_term(line));
      } else if (section == "script") {
        s.script.push_back(parse_script_line(line));
      } else {
        bad_line(line_no, "text outside any section");
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.offset(), e.expected(),
                        "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ScenarioFormat &&
          std::string_view(e.what()).rfind("line ", 0) == 0)
        throw;
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (require_agents && !saw_agents)
    throw Error(ErrorCode::ScenarioFormat, "missing [agents] section");
  return s;
}

std::string_view trip_booking_text() {
  return R"(# Booking a trip through a tourism agency.
[agents]
a: externalist cautious preponderance
t: internalist credulous(1) convincing

[store]
t: C(t,a,pay3,trip)
t: C(t,t,flight /\ acc,trip)
s2: C(s2,t,pay1,acc)
s1: C(s1,t,C(t,s1,top,pay2),flight)
na: C(na,t,~trip /\ pay3,C(t,_,top,pay4))
na: C(na,_,~euCitizen,visa)
na: C(na,_,swiss,~visa)

[script]
request-just a t j t trip
assert t C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{t} trip
request-expl a t C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) : t trip
assert t C(t,t,acc /\ flight,trip) <|{t} (C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{t} trip)
assert a C(na,_,~euCitizen,visa) :{a} C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip
request-expl t a C(na,_,~euCitizen,visa) : a C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip
assert a nonEuCitizen <|{a} C(na,_,~euCitizen,visa) :{a} C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip
request-just t a j2 a ~euCitizen
assert a swissPassport :{a} ~euCitizen
assert t C(na,_,swiss,~visa) :{t} ~ C(na,_,~euCitizen,visa) :{a} C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip
request-expl a t C(na,_,swiss,~visa) : t ~ C(na,_,~euCitizen,visa) :{a} C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip
assert t C(na,na,top,encourageTravel) ~> C(na,_,~euCitizen,visa) <|{t} (C(na,_,swiss,~visa) :{t} ~ C(na,_,~euCitizen,visa) :{a} C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip)
)";
}

Scenario trip_booking_scenario() { return parse_scenario(trip_booking_text()); }

DialogueState initial_state(const Scenario& s) {
  DialogueState st;
  st.kb = s.kb;
  for (const auto& [owner, c] : s.store) st.stores[owner].add(owner, c);
  return st;
}

ScenarioRun run_scenario(const Scenario& s, int depth) {
  ScenarioRun run{run_script(initial_state(s), s.script), {}};
  std::map<Agent, Formula> goals;
  for (const TraceRecord& r : run.state.trace) {
    if (r.act != "REQUEST-JUST" || goals.count(r.from)) continue;
    auto sa = decode_request(r.formula.commitment());
    if (sa) goals.emplace(r.from, *sa->formula);
  }
  ArgumentPool pool(run.state.kb, depth);
  for (const AgentProfile& p : s.agents) {
    AgentOutcome o{p, std::nullopt, std::nullopt, {}};
    auto it = goals.find(p.id);
    if (it != goals.end()) {
      o.goal = it->second;
      o.decision = accepts(p, pool, it->second);
      o.opposing = opposing_explanations(p, pool, it->second);
    }
    run.outcomes.push_back(std::move(o));
  }
  return run;
}

std::vector<std::string> trace_lines(const DialogueState& state) {
  std::vector<std::string> out;
  for (const TraceRecord& r : state.trace) out.push_back(print_record(r));
  return out;
}

std::vector<std::string> outcome_lines(const ScenarioRun& run) {
  std::vector<std::string> out;
  for (const AgentOutcome& o : run.outcomes) {
    if (!o.goal || !o.decision) continue;
    const bool ok = o.decision->verdict == AcceptVerdict::Accept;
    out.push_back("accepts(" + o.profile.id.name() + ", " +
                  print_formula(*o.goal) + ") = " + (ok ? "Accept" : "Reject"));
    if (ok) {
      out.push_back("  witness: " + describe(*o.decision->witness));
    } else if (!o.decision->reasons.empty()) {
      out.push_back("  reason: " + o.decision->reasons.back());
    }
    for (const OpposingExplanation& e : o.opposing) {
      if (!e.defeater) {
        out.push_back("undefeated: " + describe(e.argument));
        continue;
      }
      std::string chain;
      for (const Term& t : e.defeater->chain)
        chain += (chain.empty() ? "" : ", ") + print_term(t);
      out.push_back("defeated: " + describe(e.argument) + " undercut by [" +
                    chain + "]");
    }
  }
  return out;
}

}  // namespace jel
