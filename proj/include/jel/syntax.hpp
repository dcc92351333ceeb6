#pragma once

// Abstract syntax of justification/explanation formulas, their proof terms,
// and the commitments used as justifiers.
//
// Concrete grammar, loosest binding last:
//
//   term    := term (">>" | "~>") term | term "+" term | term "." term
//            | "!" term | "?" term | ident | C(...) | "neg" C(...) | "(" term ")"
//   formula := term ":{i}" formula | term "<|{i}" formula | "~" formula
//            | formula "/\" formula | formula "\/" formula
//            | formula "->" formula | ident | "top" | C(...) | "(" formula ")"
//   C(...)  := "C(" agent "," agent "," slot "," slot ")"   slot := formula | "_"
//
// Term operators bind tighter than ":" and "<|", which bind tighter than "~",
// then "/\", "\/" and "->". ".", "+", ">>", "~>", "/\" and "\/" associate to
// the left; ":", "<|" and "->" to the right. An omitted agent index means the
// public agent "*".

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace jel {

namespace detail {
struct TermNode;
struct FormulaNode;
}  // namespace detail

class Agent {
 public:
  Agent() : name_("*") {}
  // Accepts an identifier, "*" (public) or "_" (don't care).
  explicit Agent(std::string name);

  static Agent public_agent() { return Agent("*"); }
  static Agent dont_care() { return Agent("_"); }

  const std::string& name() const { return name_; }
  bool is_public() const { return name_ == "*"; }
  bool is_dont_care() const { return name_ == "_"; }

  friend bool operator==(const Agent&, const Agent&) = default;
  friend auto operator<=>(const Agent&, const Agent&) = default;

 private:
  std::string name_;
};

enum class FormulaKind {
  Atom,
  Top,
  Not,
  Or,
  And,
  Implies,
  Justified,
  Explained,
  Commit,  // a commitment used in formula position, e.g. as a condition
};

enum class TermKind {
  Var,
  Const,
  Commit,
  Absent,
  Apply,
  Sum,
  Bang,
  Query,
  Stronger,
  Prefer,
};

class Term;
struct Commitment;

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula negation(Formula operand);
  static Formula disjunction(Formula left, Formula right);
  static Formula conjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula justified(Term term, Agent agent, Formula body);
  static Formula explained(Term term, Agent agent, Formula body);
  static Formula commitment(Commitment c);

  FormulaKind kind() const;
  const std::string& name() const;      // Atom
  const Formula& operand() const;       // Not
  const Formula& left() const;          // Or, And, Implies
  const Formula& right() const;         // Or, And, Implies
  const Term& term() const;             // Justified, Explained
  const Agent& agent() const;           // Justified, Explained
  const Formula& body() const;          // Justified, Explained
  const Commitment& commitment() const; // Commit

  bool is_assertion() const {
    return kind() == FormulaKind::Justified || kind() == FormulaKind::Explained;
  }
  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const Formula&, const Formula&);
  friend bool operator==(const Formula&, const Formula&);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

class Term {
 public:
  static Term var(std::string name);
  static Term constant(std::string name);
  static Term commit(Commitment c);
  static Term absent(Commitment c);
  static Term apply(Term left, Term right);
  static Term sum(Term left, Term right);
  static Term bang(Term inner);
  static Term query(Term inner);
  static Term stronger(Term left, Term right);
  static Term prefer(Term left, Term right);

  // Proof variables are x, y, z optionally followed by digits; every other
  // identifier in term position is a constant.
  static bool is_variable_name(std::string_view name);

  TermKind kind() const;
  const std::string& name() const;       // Var, Const
  const Commitment& commitment() const;  // Commit, Absent
  const Term& left() const;              // binary kinds
  const Term& right() const;             // binary kinds
  const Term& inner() const;             // Bang, Query
  // Leaves have height 1.
  int height() const;
  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const Term&, const Term&);
  friend bool operator==(const Term&, const Term&);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

// Empty slot = don't care ("_").
using Slot = std::optional<Formula>;

// C(debtor, creditor, condition, promise). A "_" debtor marks a matching
// template.
struct Commitment {
  Agent debtor;
  Agent creditor;
  Slot condition;
  Slot promise;

  Commitment(Agent debtor, Agent creditor, Slot condition, Slot promise);

  bool is_template() const { return debtor.is_dont_care(); }

  friend std::strong_ordering operator<=>(const Commitment&,
                                          const Commitment&);
  friend bool operator==(const Commitment&, const Commitment&);
};

std::strong_ordering compare_slots(const Slot& a, const Slot& b);

// Parsing. Throws SyntaxError or Error(ReservedIdentifier).
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
Commitment parse_commitment(std::string_view text);

// Parses the longest term starting at byte `offset`; `end` receives the
// offset just past it (trailing whitespace not consumed).
Term parse_term_prefix(std::string_view text, std::size_t offset,
                       std::size_t& end);

// Canonical printing with minimal parentheses.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);
std::string print_commitment(const Commitment& c);
std::string print_slot(const Slot& s);

// Every subterm of t including t itself, structurally deduplicated.
std::set<Term> subterms(const Term& t);

}  // namespace jel

template <>
struct std::hash<jel::Formula> {
  std::size_t operator()(const jel::Formula& f) const noexcept {
    return f.hash();
  }
};

template <>
struct std::hash<jel::Term> {
  std::size_t operator()(const jel::Term& t) const noexcept {
    return t.hash();
  }
};
