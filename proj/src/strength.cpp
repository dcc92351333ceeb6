#include "jel/strength.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "jel/commitments.hpp"
#include "jel/error.hpp"

namespace jel {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Stronger: return "STRONGER";
    case Verdict::Weaker: return "WEAKER";
    case Verdict::Equal: return "EQUAL";
    case Verdict::Incomparable: return "INCOMPARABLE";
  }
  return "INCOMPARABLE";
}

Verdict flip(Verdict v) {
  if (v == Verdict::Stronger) return Verdict::Weaker;
  if (v == Verdict::Weaker) return Verdict::Stronger;
  return v;
}

std::string_view standard_name(ProofStandard s) {
  switch (s) {
    case ProofStandard::Scintilla: return "scintilla";
    case ProofStandard::Reasonable: return "reasonable";
    case ProofStandard::Preponderance: return "preponderance";
    case ProofStandard::Convincing: return "convincing";
    case ProofStandard::BeyondDoubt: return "beyond-doubt";
  }
  return "scintilla";
}

std::optional<ProofStandard> parse_standard(std::string_view keyword) {
  for (int level = 1; level <= 5; ++level) {
    auto s = static_cast<ProofStandard>(level);
    if (standard_name(s) == keyword) return s;
  }
  return std::nullopt;
}

namespace {

// Per-slot comparison; Greater means the slot makes its commitment stronger.
enum class Cmp { Less, Eq, Greater, None };

void flatten(const Formula& f, FormulaKind op, std::set<Formula>& out) {
  if (f.kind() == op) {
    flatten(f.left(), op, out);
    flatten(f.right(), op, out);
  } else {
    out.insert(f);
  }
}

std::set<Formula> conjuncts(const Formula& f) {
  std::set<Formula> out;
  if (f.kind() != FormulaKind::Top) flatten(f, FormulaKind::And, out);
  return out;
}

std::set<Formula> disjuncts(const Formula& f) {
  std::set<Formula> out;
  flatten(f, FormulaKind::Or, out);
  return out;
}

Cmp compare_sets(const std::set<Formula>& a, const std::set<Formula>& b) {
  if (a == b) return Cmp::Eq;
  if (std::includes(a.begin(), a.end(), b.begin(), b.end())) return Cmp::Greater;
  if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return Cmp::Less;
  return Cmp::None;
}

// More promised conjuncts is stronger.
Cmp compare_promises(const Slot& x, const Slot& y) {
  if (compare_slots(x, y) == 0) return Cmp::Eq;
  if (!x || !y) return Cmp::None;
  return compare_sets(conjuncts(*x), conjuncts(*y));
}

// A fact condition p against C(_,_,top,p): depending on the fact alone asks
// less than depending on a promise of it.
bool fact_over_promised(const Formula& fact, const Formula& other) {
  if (other.kind() != FormulaKind::Commit) return false;
  if (fact.kind() == FormulaKind::Commit || embeds_commitment(fact))
    return false;
  const Commitment& c = other.commitment();
  return c.condition && c.condition->kind() == FormulaKind::Top && c.promise &&
         *c.promise == fact;
}

// Asking less (Top, or more ways to satisfy the condition) is stronger.
Cmp compare_conditions(const Slot& x, const Slot& y) {
  if (compare_slots(x, y) == 0) return Cmp::Eq;
  if (!x || !y) return Cmp::None;
  const bool xt = x->kind() == FormulaKind::Top;
  const bool yt = y->kind() == FormulaKind::Top;
  if (xt) return Cmp::Greater;
  if (yt) return Cmp::Less;
  if (fact_over_promised(*x, *y)) return Cmp::Greater;
  if (fact_over_promised(*y, *x)) return Cmp::Less;
  return compare_sets(disjuncts(*x), disjuncts(*y));
}

Verdict compare_commitments(const Commitment& x, const Commitment& y) {
  if (x == y) return Verdict::Equal;
  if (x.debtor != y.debtor || x.creditor != y.creditor)
    return Verdict::Incomparable;
  const Cmp p = compare_promises(x.promise, y.promise);
  const Cmp q = compare_conditions(x.condition, y.condition);
  if (p == Cmp::None || q == Cmp::None) return Verdict::Incomparable;
  if (p == Cmp::Eq && q == Cmp::Eq) return Verdict::Equal;
  if (p != Cmp::Less && q != Cmp::Less) return Verdict::Stronger;
  if (p != Cmp::Greater && q != Cmp::Greater) return Verdict::Weaker;
  return Verdict::Incomparable;
}

bool fact_promised_by(const Term& fact, const Term& commit) {
  const Slot& p = commit.commitment().promise;
  return p && p->kind() == FormulaKind::Atom && p->name() == fact.name();
}

bool is_compound(const Term& t) {
  return t.kind() == TermKind::Sum || t.kind() == TermKind::Apply;
}

void flatten_sum(const Term& t, std::vector<Term>& out) {
  if (t.kind() == TermKind::Sum) {
    flatten_sum(t.left(), out);
    flatten_sum(t.right(), out);
  } else {
    out.push_back(t);
  }
}

std::optional<int> commitment_rank(const Commitment& c) {
  if (c.is_template()) return std::nullopt;
  switch (classify_shape(c)) {
    case PatternClass::GP:
    case PatternClass::PromiseToCommit: return 1;
    case PatternClass::Request:
    case PatternClass::Taboo: return 2;
    case PatternClass::BC: return 3;
    case PatternClass::UC: return 4;
    case PatternClass::UCpGP: return 5;
    default: return std::nullopt;
  }
}

}  // namespace

Verdict stronger(const Term& x, const Term& y) {
  if (x == y) return Verdict::Equal;
  const TermKind xk = x.kind();
  const TermKind yk = y.kind();
  if (xk == TermKind::Commit && yk == TermKind::Commit)
    return compare_commitments(x.commitment(), y.commitment());
  if (xk == TermKind::Const && yk == TermKind::Commit)
    return fact_promised_by(x, y) ? Verdict::Stronger : Verdict::Incomparable;
  if (xk == TermKind::Commit && yk == TermKind::Const)
    return fact_promised_by(y, x) ? Verdict::Weaker : Verdict::Incomparable;
  if (is_compound(x) || is_compound(y)) {
    auto rx = try_pattern_rank(x);
    auto ry = try_pattern_rank(y);
    if (!rx || !ry || *rx == *ry) return Verdict::Incomparable;
    return *rx > *ry ? Verdict::Stronger : Verdict::Weaker;
  }
  if (xk == TermKind::Bang && yk == TermKind::Bang)
    return stronger(x.inner(), y.inner());
  return Verdict::Incomparable;
}

std::optional<int> try_pattern_rank(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: return 5;
    case TermKind::Commit: return commitment_rank(t.commitment());
    case TermKind::Bang: return try_pattern_rank(t.inner());
    case TermKind::Apply: {
      auto l = try_pattern_rank(t.left());
      auto r = try_pattern_rank(t.right());
      if (!l || !r) return std::nullopt;
      return std::min(*l, *r);
    }
    case TermKind::Sum: {
      std::vector<Term> parts;
      flatten_sum(t, parts);
      if (parts.size() == 2 && parts[0].kind() == TermKind::Commit &&
          parts[1].kind() == TermKind::Commit &&
          !parts[0].commitment().is_template() &&
          !parts[1].commitment().is_template()) {
        const Commitment* gp = nullptr;
        const Commitment* req = nullptr;
        for (const Term& part : parts) {
          PatternClass k = classify_shape(part.commitment());
          if (k == PatternClass::GP) gp = &part.commitment();
          if (k == PatternClass::Request) req = &part.commitment();
        }
        if (gp && req) return embeds_commitment(req->condition) ? 1 : 2;
      }
      std::optional<int> best;
      for (const Term& part : parts) {
        auto r = try_pattern_rank(part);
        if (!r) return std::nullopt;
        best = best ? std::min(*best, *r) : *r;
      }
      return best;
    }
    default: return std::nullopt;
  }
}

int pattern_rank(const Term& t) {
  auto r = try_pattern_rank(t);
  if (!r)
    throw Error(ErrorCode::UnrankedTerm, print_term(t) + " has no rank");
  return *r;
}

bool meets_standard(const Term& justifier, ProofStandard standard) {
  return pattern_rank(justifier) >= static_cast<int>(standard);
}

bool equal_strength(const Term& x, const Term& y) {
  const Verdict v = stronger(x, y);
  if (v == Verdict::Equal) return true;
  if (v != Verdict::Incomparable) return false;
  auto rx = try_pattern_rank(x);
  auto ry = try_pattern_rank(y);
  return rx && ry && *rx == *ry;
}

std::optional<Preference> prefer(const Commitment& x, const Commitment& y,
                                 const Agent& viewer) {
  const Verdict v = compare_commitments(x, y);
  if (v != Verdict::Stronger && v != Verdict::Weaker)
    throw Error(ErrorCode::IncomparableStrength,
                print_commitment(x) + " and " + print_commitment(y) +
                    " are not strictly ordered");
  const Preference stronger_side =
      v == Verdict::Stronger ? Preference::First : Preference::Second;
  const Preference weaker_side =
      v == Verdict::Stronger ? Preference::Second : Preference::First;
  if (viewer == x.creditor && viewer == y.creditor) return stronger_side;
  if (viewer == x.debtor && viewer == y.debtor) return weaker_side;
  return std::nullopt;
}

}  // namespace jel
