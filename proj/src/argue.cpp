#include "jel/argue.hpp"

#include <algorithm>

#include "jel/error.hpp"
#include "jel/strength.hpp"

namespace jel {

std::string describe(const Argument& a) {
  std::string out = "<[";
  for (std::size_t k = 0; k < a.chain.size(); ++k) {
    if (k) out += ", ";
    out += print_term(a.chain[k]);
  }
  out += "], " + print_formula(a.conclusion) + "> ";
  out += a.kind == ArgumentKind::Justificatory ? "J" : "E";
  out += "@" + a.holder.name();
  return out;
}

Formula complement(const Formula& f) {
  if (f.kind() == FormulaKind::Not) return f.operand();
  return Formula::negation(f);
}

namespace {

// !s : (s : F) and ?s : (~s : F) restate their body; they add no support.
bool is_checker_carrier(const Formula& c) {
  const Term& t = c.term();
  const Formula& body = c.body();
  if (t.kind() == TermKind::Bang)
    return body.is_assertion() && body.term() == t.inner();
  if (t.kind() == TermKind::Query)
    return body.kind() == FormulaKind::Not && body.operand().is_assertion() &&
           body.operand().term() == t.inner();
  return false;
}

bool supported_by_subterm(const Formula& carrier, const Closure& closure) {
  const Term& t = carrier.term();
  for (const Term& s : subterms(t)) {
    if (s == t) continue;
    Formula alt = carrier.kind() == FormulaKind::Justified
                      ? Formula::justified(s, carrier.agent(), carrier.body())
                      : Formula::explained(s, carrier.agent(), carrier.body());
    if (closure.contains(alt)) return true;
  }
  return false;
}

bool sort_before(const Argument& a, const Argument& b) {
  if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
  return describe(a) < describe(b);
}

}  // namespace

bool is_minimal(const Argument& arg, const Closure& closure) {
  for (const Formula& c : arg.carriers)
    if (supported_by_subterm(c, closure)) return false;
  return true;
}

bool is_minimal(const Argument& arg, const KnowledgeBase& kb, int depth) {
  return is_minimal(arg, saturate_closure(kb, depth));
}

ArgumentPool::ArgumentPool(const Closure& closure) : closure_(closure) {
  build();
}

ArgumentPool::ArgumentPool(const KnowledgeBase& kb, int depth)
    : closure_(saturate_closure(kb, depth)) {
  build();
}

void ArgumentPool::build() {
  std::set<std::string> seen;
  for (const Formula& top : closure_.formulas) {
    if (!top.is_assertion()) continue;
    // Peel the tower top = u_n : (... (u_1 : F)) outermost first.
    std::vector<Formula> levels;
    for (const Formula* f = &top; f->is_assertion(); f = &f->body())
      levels.push_back(*f);
    std::reverse(levels.begin(), levels.end());  // levels[0] carries F
    for (std::size_t start = 0; start < levels.size(); ++start) {
      Argument arg{{}, {}, levels[start].body(), ArgumentKind::Justificatory,
                   levels[start].agent()};
      bool usable = true;
      for (std::size_t k = start; k < levels.size(); ++k) {
        const Formula& c = levels[k];
        if (is_checker_carrier(c)) {
          usable = false;
          break;
        }
        arg.chain.push_back(c.term());
        arg.carriers.push_back(c);
        if (c.kind() == FormulaKind::Explained)
          arg.kind = ArgumentKind::Explanatory;
      }
      if (!usable || !is_minimal(arg, closure_)) continue;
      // The same argument is readable off every tower that contains it.
      std::string key = describe(arg);
      for (const Formula& c : arg.carriers) key += "|" + print_formula(c);
      if (seen.insert(key).second) all_.push_back(std::move(arg));
    }
  }
  std::stable_sort(all_.begin(), all_.end(), sort_before);
  for (const Argument& a : all_) by_conclusion_[a.conclusion].push_back(a);
}

const std::vector<Argument>& ArgumentPool::for_conclusion(
    const Formula& f) const {
  static const std::vector<Argument> kNone;
  auto it = by_conclusion_.find(f);
  return it == by_conclusion_.end() ? kNone : it->second;
}

std::vector<Argument> build_arguments(const KnowledgeBase& kb,
                                      const Formula& f, int depth) {
  ArgumentPool pool(kb, depth);
  std::vector<Argument> out = pool.for_conclusion(f);
  const auto& against = pool.for_conclusion(complement(f));
  out.insert(out.end(), against.begin(), against.end());
  std::sort(out.begin(), out.end(), sort_before);
  return out;
}

std::optional<Attack> attacks(const Argument& a1, const Argument& a2) {
  if (a1.conclusion == complement(a2.conclusion))
    return Attack{AttackKind::Rebuttal, a1, a2, std::nullopt};
  for (std::size_t k = 0; k < a2.carriers.size(); ++k) {
    if (a1.conclusion == Formula::negation(a2.carriers[k]))
      return Attack{AttackKind::Undercut, a1, a2, k};
  }
  return std::nullopt;
}

namespace {

std::optional<Resolution> strictly_preferred(const Term& x, const Term& y,
                                             const Agent& hx,
                                             const Agent& hy) {
  if (x.kind() == TermKind::Commit && y.kind() == TermKind::Commit && hx == hy) {
    const Commitment& cx = x.commitment();
    const Commitment& cy = y.commitment();
    if (cx.debtor == cy.debtor && cx.creditor == cy.creditor) {
      try {
        if (auto p = prefer(cx, cy, hx))
          return *p == Preference::First ? Resolution::First
                                         : Resolution::Second;
      } catch (const Error&) {
        return std::nullopt;
      }
    }
  }
  switch (stronger(x, y)) {
    case Verdict::Stronger: return Resolution::First;
    case Verdict::Weaker: return Resolution::Second;
    default: break;
  }
  // Structurally incomparable: fall back to the pattern ranks.
  auto rx = try_pattern_rank(x);
  auto ry = try_pattern_rank(y);
  if (!rx || !ry || *rx == *ry) return std::nullopt;
  return *rx > *ry ? Resolution::First : Resolution::Second;
}

}  // namespace

Resolution resolve(const Argument& a_for, const Argument& a_against) {
  auto attack = attacks(a_for, a_against);
  if (!attack || attack->kind != AttackKind::Rebuttal)
    throw Error(ErrorCode::NotARebuttal,
                describe(a_for) + " does not rebut " + describe(a_against));
  const std::size_t n = std::min(a_for.chain.size(), a_against.chain.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& x = a_for.chain[i];
    const Term& y = a_against.chain[i];
    if (equal_strength(x, y)) continue;
    auto side = strictly_preferred(x, y, a_for.holder, a_against.holder);
    if (!side)
      throw Error(ErrorCode::IncomparableChain,
                  "chain position " + std::to_string(i + 1) + ": " +
                      print_term(x) + " vs " + print_term(y));
    return *side;
  }
  if (a_for.chain.size() < a_against.chain.size()) return Resolution::First;
  if (a_against.chain.size() < a_for.chain.size()) return Resolution::Second;
  return Resolution::Tie;
}

}  // namespace jel
