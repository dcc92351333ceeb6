#include "jel/agents.hpp"

#include <sstream>

#include "jel/commitments.hpp"
#include "jel/error.hpp"

namespace jel {

namespace {

std::optional<AcceptanceMode> parse_mode(std::string_view w) {
  if (w == "explanation") return AcceptanceMode::ExplanationSuffices;
  if (w == "rigorous") return AcceptanceMode::Rigorous;
  if (w == "demanding") return AcceptanceMode::Demanding;
  if (w == "cautious") return AcceptanceMode::Cautious;
  return std::nullopt;
}

std::string_view mode_name(AcceptanceMode m) {
  switch (m) {
    case AcceptanceMode::ExplanationSuffices: return "explanation";
    case AcceptanceMode::Rigorous: return "rigorous";
    case AcceptanceMode::Demanding: return "demanding";
    case AcceptanceMode::Cautious: return "cautious";
  }
  return "rigorous";
}

// Reads "name(arg)" into arg; false if w is not of that form.
bool call_form(std::string_view w, std::string_view name, std::string& arg) {
  if (w.size() < name.size() + 2 || w.substr(0, name.size()) != name ||
      w[name.size()] != '(' || w.back() != ')')
    return false;
  arg = std::string(w.substr(name.size() + 1, w.size() - name.size() - 2));
  return true;
}

[[noreturn]] void bad_profile(const Agent& id, const std::string& why) {
  throw Error(ErrorCode::InvalidProfile, "agent " + id.name() + ": " + why);
}

void add_theory(AgentProfile& p, Theory t) {
  for (const Theory& have : p.theories) {
    if (have.kind == t.kind) bad_profile(p.id, "theory given twice");
    if (have.kind == Theory::Kind::Externalist ||
        t.kind == Theory::Kind::Externalist)
      bad_profile(p.id, "externalist excludes other theories");
  }
  p.theories.push_back(t);
}

}  // namespace

AgentProfile parse_profile(const Agent& id, std::string_view keywords) {
  AgentProfile p;
  p.id = id;
  bool seen_mode = false, seen_standard = false, seen_sincerity = false;
  auto once = [&](bool& flag, const std::string& what) {
    if (flag) bad_profile(id, "more than one " + what);
    flag = true;
  };
  std::istringstream in{std::string(keywords)};
  std::string w;
  while (in >> w) {
    std::string arg;
    if (auto m = parse_mode(w)) {
      once(seen_mode, "acceptance mode");
      p.acceptance = *m;
    } else if (w == "foundationalist" || w == "internalist" ||
               w == "externalist") {
      add_theory(p, Theory{w == "foundationalist" ? Theory::Kind::Foundationalist
                           : w == "internalist"   ? Theory::Kind::Internalist
                                                  : Theory::Kind::Externalist,
                           1});
    } else if (call_form(w, "credulous", arg)) {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(arg, &used);
        if (used != arg.size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n < 1) bad_profile(id, "credulous needs an integer >= 1");
      add_theory(p, Theory{Theory::Kind::Credulous, n});
    } else if (auto s = parse_standard(w)) {
      once(seen_standard, "proof standard");
      p.standard = *s;
    } else if (w == "wholehearted" || w == "diffident") {
      once(seen_sincerity, "sincerity");
      p.sincerity.kind = w == "wholehearted" ? Sincerity::Kind::Wholehearted
                                             : Sincerity::Kind::Diffident;
    } else if (call_form(w, "partner", arg)) {
      once(seen_sincerity, "sincerity");
      Agent partner;
      try {
        partner = Agent(arg);
      } catch (const Error&) {
        bad_profile(id, "bad partner '" + arg + "'");
      }
      if (partner == id || partner.is_public() || partner.is_dont_care())
        bad_profile(id, "partner must be another agent");
      p.sincerity = Sincerity{Sincerity::Kind::PartnerSpecific, partner};
    } else {
      bad_profile(id, "unknown keyword '" + w + "'");
    }
  }
  return p;
}

std::string print_profile(const AgentProfile& p) {
  std::string out = p.id.name() + ":";
  if (p.theories.empty()) out += " externalist";
  for (const Theory& t : p.theories) {
    switch (t.kind) {
      case Theory::Kind::Foundationalist: out += " foundationalist"; break;
      case Theory::Kind::Credulous:
        out += " credulous(" + std::to_string(t.n) + ")";
        break;
      case Theory::Kind::Internalist: out += " internalist"; break;
      case Theory::Kind::Externalist: out += " externalist"; break;
    }
  }
  out += " " + std::string(mode_name(p.acceptance)) + " " +
         std::string(standard_name(p.standard));
  switch (p.sincerity.kind) {
    case Sincerity::Kind::None: break;
    case Sincerity::Kind::Wholehearted: out += " wholehearted"; break;
    case Sincerity::Kind::PartnerSpecific:
      out += " partner(" + p.sincerity.partner.name() + ")";
      break;
    case Sincerity::Kind::Diffident: out += " diffident"; break;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool theory_ok(const Agent& id, const Theory& theory, const Argument& arg) {
  switch (theory.kind) {
    case Theory::Kind::Externalist: return true;
    case Theory::Kind::Credulous:
      return static_cast<int>(arg.chain.size()) >= theory.n;
    case Theory::Kind::Foundationalist:
      try {
        return classify_term(arg.chain.front()) != PatternClass::Other;
      } catch (const Error&) {
        return false;
      }
    case Theory::Kind::Internalist:
      // A "_" creditor binds everyone, so the agent counts as a party.
      for (const Term& t : arg.chain) {
        for (const Term& s : subterms(t)) {
          if (s.kind() != TermKind::Commit && s.kind() != TermKind::Absent)
            continue;
          const Commitment& c = s.commitment();
          if (c.debtor != id && c.creditor != id &&
              !c.creditor.is_dont_care())
            return false;
        }
      }
      return true;
  }
  return false;
}

bool theory_ok(const AgentProfile& p, const Argument& arg) {
  for (const Theory& t : p.theories)
    if (!theory_ok(p.id, t, arg)) return false;
  return true;
}

bool standard_ok(const AgentProfile& p, const Argument& arg) {
  for (const Term& t : arg.chain) {
    auto rank = try_pattern_rank(t);
    if (!rank || *rank < static_cast<int>(p.standard)) return false;
  }
  return true;
}

const Argument* first_passing(const AgentProfile& p,
                              const std::vector<Argument>& args,
                              std::optional<ArgumentKind> kind) {
  for (const Argument& a : args)
    if ((!kind || a.kind == *kind) && passes_gates(p, a)) return &a;
  return nullptr;
}

bool has_kind(const std::vector<Argument>& args, ArgumentKind kind) {
  for (const Argument& a : args)
    if (a.kind == kind) return true;
  return false;
}

// A counter-argument p takes seriously: justified, through the gates, and
// for the explanation-hungry modes also explained.
bool accepted_counter(const AgentProfile& p, const ArgumentPool& pool,
                      const Argument& a) {
  if (a.kind != ArgumentKind::Justificatory || !passes_gates(p, a)) return false;
  if (p.acceptance == AcceptanceMode::Cautious ||
      p.acceptance == AcceptanceMode::Demanding)
    return has_kind(pool.for_conclusion(a.conclusion),
                    ArgumentKind::Explanatory);
  return true;
}

std::optional<Argument> find_defeater(const AgentProfile& p,
                                      const ArgumentPool& pool,
                                      const Argument& target) {
  for (const Formula& c : target.carriers) {
    for (const Argument& a : pool.for_conclusion(Formula::negation(c))) {
      auto attack = attacks(a, target);
      if (attack && attack->kind == AttackKind::Undercut &&
          accepted_counter(p, pool, a))
        return a;
    }
  }
  return std::nullopt;
}

}  // namespace

bool passes_gates(const AgentProfile& p, const Argument& arg) {
  return theory_ok(p, arg) && standard_ok(p, arg);
}

std::vector<OpposingExplanation> opposing_explanations(
    const AgentProfile& p, const ArgumentPool& pool, const Formula& f) {
  std::vector<OpposingExplanation> out;
  for (const Argument& a : pool.for_conclusion(complement(f))) {
    if (a.kind != ArgumentKind::Explanatory) continue;
    out.push_back({a, find_defeater(p, pool, a)});
  }
  return out;
}

Decision accepts(const AgentProfile& p, const ArgumentPool& pool,
                 const Formula& f) {
  Decision d;
  const auto& args = pool.for_conclusion(f);
  const std::string mode(mode_name(p.acceptance));
  auto reject = [&](std::string why) {
    d.reasons.push_back(std::move(why));
    d.verdict = AcceptVerdict::Reject;
    d.witness.reset();
    return d;
  };
  if (args.empty()) return reject("no argument for " + print_formula(f));

  const Argument* witness = nullptr;
  if (p.acceptance == AcceptanceMode::ExplanationSuffices) {
    witness = first_passing(p, args, std::nullopt);
    if (!witness) return reject(mode + ": no argument passes the gates");
  } else {
    if (!has_kind(args, ArgumentKind::Justificatory))
      return reject(mode + ": no justificatory argument");
    witness = first_passing(p, args, ArgumentKind::Justificatory);
    if (!witness)
      return reject(mode + ": no justificatory argument passes the gates");
  }
  d.reasons.push_back("witness " + describe(*witness));

  if (p.acceptance == AcceptanceMode::Demanding) {
    const Argument* expl = first_passing(p, args, ArgumentKind::Explanatory);
    if (!expl) return reject(mode + ": no explanatory argument passes the gates");
    d.reasons.push_back("explained by " + describe(*expl));
  }
  if (p.acceptance == AcceptanceMode::Cautious) {
    for (const auto& o : opposing_explanations(p, pool, f)) {
      if (!o.defeater)
        return reject(mode + ": undefeated explanation " +
                      describe(o.argument));
      d.reasons.push_back("defeated " + describe(o.argument) + " by " +
                          describe(*o.defeater));
    }
  }
  d.verdict = AcceptVerdict::Accept;
  d.witness = *witness;
  return d;
}

Decision accepts(const AgentProfile& p, const KnowledgeBase& kb,
                 const Formula& f, int depth) {
  return accepts(p, ArgumentPool(kb, depth), f);
}

// ---------------------------------------------------------------------------

std::vector<Commitment> sincerity_commitments(const AgentProfile& p) {
  const Formula P = Formula::atom("P");
  switch (p.sincerity.kind) {
    case Sincerity::Kind::Wholehearted:
      return {Commitment(p.id, p.id,
                         Formula::commitment(
                             Commitment(p.id, Agent::dont_care(), std::nullopt, P)),
                         P)};
    case Sincerity::Kind::PartnerSpecific:
      return {Commitment(
          p.id, p.id,
          Formula::commitment(Commitment(p.id, p.sincerity.partner, std::nullopt, P)),
          P)};
    default:
      throw Error(ErrorCode::NotSincere,
                  "agent " + p.id.name() + " has no sincerity commitment");
  }
}

std::vector<Formula> diffident_assertions(const AgentProfile& p,
                                          const std::vector<Commitment>& own) {
  if (p.sincerity.kind != Sincerity::Kind::Diffident)
    throw Error(ErrorCode::NotDiffident,
                "agent " + p.id.name() + " is not diffident");
  std::vector<Formula> out;
  for (const Commitment& c : own) {
    if (c.debtor != p.id || !c.condition ||
        c.condition->kind() != FormulaKind::Top || !c.promise ||
        c.promise->kind() == FormulaKind::Top)
      continue;
    out.push_back(Formula::negation(
        Formula::justified(Term::commit(c), p.id, *c.promise)));
  }
  return out;
}

}  // namespace jel
