#include "jel/commitments.hpp"

#include <functional>

#include "jel/error.hpp"

namespace jel {

std::string_view pattern_name(PatternClass p) {
  switch (p) {
    case PatternClass::GP: return "GP";
    case PatternClass::Request: return "R";
    case PatternClass::Taboo: return "Taboo";
    case PatternClass::CC: return "CC";
    case PatternClass::UC: return "UC";
    case PatternClass::BC: return "BC";
    case PatternClass::PromiseToCommit: return "PromiseToCommit";
    case PatternClass::UCpGP: return "UCpGP";
    case PatternClass::GPplusR: return "GP+R";
    case PatternClass::GPplusRqGP: return "GP+(RqGP)";
    case PatternClass::PC: return "PC";
    case PatternClass::Other: return "Other";
  }
  return "Other";
}

bool embeds_commitment(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Commit: return true;
    case FormulaKind::Not: return embeds_commitment(f.operand());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return embeds_commitment(f.left()) || embeds_commitment(f.right());
    default: return false;
  }
}

bool embeds_commitment(const Slot& s) { return s && embeds_commitment(*s); }

namespace {

bool is_top(const Slot& s) { return s && s->kind() == FormulaKind::Top; }

bool is_negated(const Slot& s) { return s && s->kind() == FormulaKind::Not; }

bool mentions_assertion(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Justified:
    case FormulaKind::Explained: return true;
    case FormulaKind::Not: return mentions_assertion(f.operand());
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return mentions_assertion(f.left()) || mentions_assertion(f.right());
    default: return false;
  }
}

void require_classifiable(const Commitment& c) {
  if (c.is_template())
    throw Error(ErrorCode::TemplateNotClassifiable,
                "template " + print_commitment(c) + " has a '_' debtor");
}

}  // namespace

PatternClass classify_shape(const Commitment& c) {
  require_classifiable(c);
  const Slot& q = c.condition;
  const Slot& p = c.promise;
  if (is_top(p) && is_negated(q)) return PatternClass::Taboo;
  if (is_top(p) && !is_top(q)) return PatternClass::Request;
  if (is_top(q) && !is_top(p) && !embeds_commitment(p)) return PatternClass::GP;
  if (is_top(q) && embeds_commitment(p)) return PatternClass::PromiseToCommit;
  if (embeds_commitment(q)) return PatternClass::BC;
  if (!is_top(q) && embeds_commitment(p)) return PatternClass::UCpGP;
  if (!is_top(q) && !is_top(p) && !(q && mentions_assertion(*q)))
    return PatternClass::UC;
  return PatternClass::Other;
}

PatternClass classify(const Commitment& c) {
  require_classifiable(c);
  if (c.debtor == c.creditor) return PatternClass::CC;
  return classify_shape(c);
}

PatternClass classify_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Commit:
      return classify(t.commitment());
    case TermKind::Sum: {
      if (t.left().kind() != TermKind::Commit ||
          t.right().kind() != TermKind::Commit)
        return PatternClass::Other;
      const Commitment* gp = nullptr;
      const Commitment* req = nullptr;
      for (const Term* side : {&t.left(), &t.right()}) {
        const Commitment& c = side->commitment();
        if (c.is_template()) return PatternClass::Other;
        PatternClass k = classify(c);
        if (k == PatternClass::GP) gp = &c;
        if (k == PatternClass::Request) req = &c;
      }
      if (!gp || !req) return PatternClass::Other;
      return embeds_commitment(req->condition) ? PatternClass::GPplusRqGP
                                               : PatternClass::GPplusR;
    }
    case TermKind::Prefer: {
      // Only shared-debtor preferences count as PC.
      if (t.left().kind() != TermKind::Commit ||
          t.right().kind() != TermKind::Commit)
        return PatternClass::Other;
      const Commitment& a = t.left().commitment();
      const Commitment& b = t.right().commitment();
      if (a.is_template() || a.debtor != b.debtor) return PatternClass::Other;
      return PatternClass::PC;
    }
    default:
      return PatternClass::Other;
  }
}

Commitment compose_q(const Commitment& c, const Formula& x) {
  return Commitment(c.debtor, c.creditor, x, c.promise);
}

Commitment compose_q(const Commitment& c, const Commitment& x) {
  return compose_q(c, Formula::commitment(x));
}

Commitment compose_p(const Commitment& c, const Formula& x) {
  return Commitment(c.debtor, c.creditor, c.condition, x);
}

Commitment compose_p(const Commitment& c, const Commitment& x) {
  return compose_p(c, Formula::commitment(x));
}

// ---------------------------------------------------------------------------
// Critical questions

std::string cq_name(CqId id) {
  return "CQ" + std::to_string(static_cast<int>(id));
}

std::optional<CqId> parse_cq(std::string_view s) {
  if (s.size() != 3 || s.substr(0, 2) != "CQ") return std::nullopt;
  if (s[2] < '1' || s[2] > '5') return std::nullopt;
  return static_cast<CqId>(s[2] - '0');
}

namespace {

CriticalQuestion make_cq(CqId id, std::string text, int target,
                         std::map<std::string, std::string> bindings) {
  return CriticalQuestion{id, std::move(text), target, std::move(bindings)};
}

std::vector<CriticalQuestion> common_questions(
    const Commitment& c, const Formula& justified, const Agent& asker,
    int target, const std::map<std::string, std::string>& vars) {
  std::vector<CriticalQuestion> out;
  if (asker != c.creditor) {
    out.push_back(make_cq(CqId::CQ1,
                          "What relates " + asker.name() + " to the creditor " +
                              c.creditor.name() + "?",
                          target, vars));
  }
  if (!c.promise || *c.promise != justified) {
    out.push_back(make_cq(CqId::CQ2,
                          "How does " + print_formula(justified) +
                              " follow from the promise " +
                              print_slot(c.promise) + "?",
                          target, vars));
  }
  out.push_back(make_cq(CqId::CQ3,
                        "Is there a stronger commitment that does not "
                        "support " + print_formula(justified) + "?",
                        target, vars));
  return out;
}

std::map<std::string, std::string> schema_vars(const Commitment& c,
                                               const Formula& justified,
                                               const Agent& asker) {
  return {{"a", c.debtor.name()},
          {"b", c.creditor.name()},
          {"Q", print_slot(c.condition)},
          {"P", print_slot(c.promise)},
          {"c", asker.name()},
          {"F", print_formula(justified)}};
}

}  // namespace

std::vector<CriticalQuestion> critical_questions(const Commitment& c,
                                                 const Formula& justified,
                                                 const Agent& asker,
                                                 int target) {
  const PatternClass k = classify(c);
  if (k == PatternClass::Other)
    throw Error(ErrorCode::UnclassifiedPattern,
                print_commitment(c) + " matches no pattern");
  auto vars = schema_vars(c, justified, asker);
  auto out = common_questions(c, justified, asker, target, vars);
  if (k == PatternClass::Request || k == PatternClass::Taboo) {
    out.push_back(make_cq(CqId::CQ4,
                          "Does " + c.debtor.name() +
                              " have the standing to issue this request?",
                          target, vars));
  } else if (k == PatternClass::CC) {
    out.push_back(make_cq(CqId::CQ4,
                          "Does " + c.debtor.name() +
                              " keep track of all of its own commitments?",
                          target, vars));
  }
  return out;
}

std::vector<CriticalQuestion> critical_questions(const Term& t,
                                                 const Formula& justified,
                                                 const Agent& asker,
                                                 int target) {
  if (t.kind() == TermKind::Commit)
    return critical_questions(t.commitment(), justified, asker, target);
  if (classify_term(t) != PatternClass::PC)
    throw Error(ErrorCode::UnclassifiedPattern,
                print_term(t) + " matches no pattern");
  const Commitment& first = t.left().commitment();
  auto vars = schema_vars(first, justified, asker);
  vars["c2"] = t.right().commitment().creditor.name();
  auto out = common_questions(first, justified, asker, target, vars);
  out.push_back(make_cq(CqId::CQ4,
                        "Can " + first.debtor.name() +
                            " honor both commitments at once?",
                        target, vars));
  out.push_back(make_cq(CqId::CQ5,
                        "Is the preference backed by a self commitment of " +
                            asker.name() + "?",
                        target, vars));
  return out;
}

// ---------------------------------------------------------------------------
// Template matching

std::optional<Bindings> match(const Commitment& tmpl, const Commitment& c) {
  Bindings b;
  if (tmpl.debtor.is_dont_care())
    b.debtor = c.debtor;
  else if (tmpl.debtor != c.debtor)
    return std::nullopt;
  if (tmpl.creditor.is_dont_care())
    b.creditor = c.creditor;
  else if (tmpl.creditor != c.creditor)
    return std::nullopt;
  if (!tmpl.condition)
    b.condition = c.condition;
  else if (compare_slots(tmpl.condition, c.condition) != 0)
    return std::nullopt;
  if (!tmpl.promise)
    b.promise = c.promise;
  else if (compare_slots(tmpl.promise, c.promise) != 0)
    return std::nullopt;
  return b;
}

namespace {

Slot fill(const Slot& slot, const std::optional<Slot>& bound) {
  if (slot || !bound) return slot;
  return *bound;
}

}  // namespace

Commitment substitute(const Commitment& tmpl, const Bindings& b) {
  Agent debtor = tmpl.debtor.is_dont_care() && b.debtor ? *b.debtor : tmpl.debtor;
  Agent creditor =
      tmpl.creditor.is_dont_care() && b.creditor ? *b.creditor : tmpl.creditor;
  return Commitment(std::move(debtor), std::move(creditor),
                    fill(tmpl.condition, b.condition),
                    fill(tmpl.promise, b.promise));
}

// ---------------------------------------------------------------------------

int CommitmentStore::add(Agent owner, Commitment c) {
  const int id = static_cast<int>(entries_.size()) + 1;
  entries_.push_back(StoreEntry{id, std::move(owner), std::move(c)});
  return id;
}

const StoreEntry* CommitmentStore::find(int id) const {
  if (id < 1 || id > static_cast<int>(entries_.size())) return nullptr;
  return &entries_[static_cast<std::size_t>(id) - 1];
}

}  // namespace jel
