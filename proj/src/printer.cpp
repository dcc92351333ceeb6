#include <string>

#include "jel/syntax.hpp"

namespace jel {
namespace {

// Binding levels; a child printed below its required level gets parentheses.
enum FormulaLevel { kImplies = 1, kOr, kAnd, kUnary, kFormulaAtom };
enum TermLevel { kPref = 1, kSum, kApp, kTermUnary, kTermAtom };

int level_of(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return kImplies;
    case FormulaKind::Or: return kOr;
    case FormulaKind::And: return kAnd;
    case FormulaKind::Not:
    case FormulaKind::Justified:
    case FormulaKind::Explained: return kUnary;
    default: return kFormulaAtom;
  }
}

int level_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Stronger:
    case TermKind::Prefer: return kPref;
    case TermKind::Sum: return kSum;
    case TermKind::Apply: return kApp;
    case TermKind::Bang:
    case TermKind::Query: return kTermUnary;
    default: return kTermAtom;
  }
}

std::string term_at(const Term& t, int min_level);
std::string formula_at(const Formula& f, int min_level, bool in_slot);

std::string commitment_text(const Commitment& c) {
  auto slot_text = [](const Slot& s) {
    return s ? formula_at(*s, kImplies, true) : std::string("_");
  };
  const std::string cond = slot_text(c.condition);
  const std::string prom = slot_text(c.promise);
  const bool spaced = cond.find(' ') != std::string::npos ||
                      prom.find(' ') != std::string::npos;
  const char* sep = spaced ? ", " : ",";
  return "C(" + c.debtor.name() + "," + c.creditor.name() + sep + cond + sep +
         prom + ")";
}

std::string term_at(const Term& t, int min_level) {
  if (level_of(t) < min_level) return "(" + term_at(t, kPref) + ")";
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: return t.name();
    case TermKind::Commit: return commitment_text(t.commitment());
    case TermKind::Absent: return "neg " + commitment_text(t.commitment());
    case TermKind::Apply:
      return term_at(t.left(), kApp) + " . " + term_at(t.right(), kTermUnary);
    case TermKind::Sum:
      return term_at(t.left(), kSum) + " + " + term_at(t.right(), kApp);
    case TermKind::Stronger:
      return term_at(t.left(), kPref) + " >> " + term_at(t.right(), kSum);
    case TermKind::Prefer:
      return term_at(t.left(), kPref) + " ~> " + term_at(t.right(), kSum);
    case TermKind::Bang: return "!" + term_at(t.inner(), kTermUnary);
    case TermKind::Query: return "?" + term_at(t.inner(), kTermUnary);
  }
  return {};
}

// Inside commitment slots a nested assertion body is always parenthesized so
// that request encodings such as C(a,t, !j :{t} (j :{t} p), top) stay
// readable; elsewhere right associativity makes those parentheses redundant.
std::string formula_at(const Formula& f, int min_level, bool in_slot) {
  if (level_of(f) < min_level)
    return "(" + formula_at(f, kImplies, in_slot) + ")";
  switch (f.kind()) {
    case FormulaKind::Atom: return f.name();
    case FormulaKind::Top: return "top";
    case FormulaKind::Commit: return commitment_text(f.commitment());
    case FormulaKind::Not: {
      const Formula& op = f.operand();
      return std::string(op.is_assertion() ? "~ " : "~") +
             formula_at(op, kUnary, in_slot);
    }
    case FormulaKind::And:
      return formula_at(f.left(), kAnd, in_slot) + " /\\ " +
             formula_at(f.right(), kUnary, in_slot);
    case FormulaKind::Or:
      return formula_at(f.left(), kOr, in_slot) + " \\/ " +
             formula_at(f.right(), kAnd, in_slot);
    case FormulaKind::Implies:
      return formula_at(f.left(), kOr, in_slot) + " -> " +
             formula_at(f.right(), kImplies, in_slot);
    case FormulaKind::Justified:
    case FormulaKind::Explained: {
      const char* op = f.kind() == FormulaKind::Justified ? " :{" : " <|{";
      const Formula& body = f.body();
      std::string body_text =
          in_slot && body.is_assertion()
              ? "(" + formula_at(body, kImplies, in_slot) + ")"
              : formula_at(body, kUnary, in_slot);
      return term_at(f.term(), kPref) + op + f.agent().name() + "} " +
             body_text;
    }
  }
  return {};
}

}  // namespace

std::string print_formula(const Formula& f) {
  return formula_at(f, kImplies, false);
}

std::string print_term(const Term& t) { return term_at(t, kPref); }

std::string print_commitment(const Commitment& c) { return commitment_text(c); }

std::string print_slot(const Slot& s) {
  return s ? formula_at(*s, kImplies, true) : std::string("_");
}

}  // namespace jel
