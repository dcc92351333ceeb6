#include "jel/syntax.hpp"

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "jel/error.hpp"

namespace jel {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ReservedIdentifier: return "ReservedIdentifier";
    case ErrorCode::InvalidName: return "InvalidName";
    case ErrorCode::TemplateNotClassifiable: return "TemplateNotClassifiable";
    case ErrorCode::UnclassifiedPattern: return "UnclassifiedPattern";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::UnrankedTerm: return "UnrankedTerm";
    case ErrorCode::IncomparableStrength: return "IncomparableStrength";
    case ErrorCode::IncomparableChain: return "IncomparableChain";
    case ErrorCode::NotARebuttal: return "NotARebuttal";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NotSincere: return "NotSincere";
    case ErrorCode::NotDiffident: return "NotDiffident";
    case ErrorCode::NotARequest: return "NotARequest";
    case ErrorCode::NotYourTurn: return "NotYourTurn";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::ScenarioFormat: return "ScenarioFormat";
  }
  return "Error";
}

namespace {

std::string describe_syntax_error(std::size_t offset,
                                  const std::set<std::string>& expected,
                                  const std::string& found) {
  std::string msg = "at byte " + std::to_string(offset) + ": expected ";
  bool first = true;
  for (const auto& e : expected) {
    if (!first) msg += ", ";
    msg += e;
    first = false;
  }
  msg += " but found " + found;
  return msg;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

bool is_reserved_word(std::string_view s) { return s == "top" || s == "neg"; }

void check_plain_name(std::string_view name, std::string_view what) {
  if (is_reserved_word(name) || name == "_" || name == "*") {
    throw Error(ErrorCode::ReservedIdentifier,
                "'" + std::string(name) + "' cannot be used as " +
                    std::string(what));
  }
  if (!is_identifier(name)) {
    throw Error(ErrorCode::InvalidName,
                "'" + std::string(name) + "' is not a valid " +
                    std::string(what));
  }
}

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_agent(const Agent& a) {
  return std::hash<std::string>{}(a.name());
}

std::size_t hash_slot(const Slot& s) { return s ? s->hash() : 0x5f5fULL; }

std::size_t hash_commitment(const Commitment& c) {
  std::size_t h = 0xc0ffeeULL;
  h = mix(h, hash_agent(c.debtor));
  h = mix(h, hash_agent(c.creditor));
  h = mix(h, hash_slot(c.condition));
  h = mix(h, hash_slot(c.promise));
  return h;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::SyntaxError,
            describe_syntax_error(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

Agent::Agent(std::string name) : name_(std::move(name)) {
  if (name_ == "*" || name_ == "_") return;
  check_plain_name(name_, "an agent name");
}

namespace detail {

struct TermNode {
  TermKind kind;
  std::string name;
  std::optional<Commitment> commitment;
  std::optional<Term> left;
  std::optional<Term> right;
  int height = 1;
  std::size_t hash = 0;
};

struct FormulaNode {
  FormulaKind kind;
  std::string name;
  std::optional<Formula> left;   // also Not operand and assertion body
  std::optional<Formula> right;
  std::optional<Term> term;
  Agent agent;
  std::optional<Commitment> commitment;
  std::size_t hash = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Terms

bool Term::is_variable_name(std::string_view name) {
  if (name.empty() || (name[0] != 'x' && name[0] != 'y' && name[0] != 'z'))
    return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

namespace {

std::shared_ptr<detail::TermNode> new_term(TermKind kind) {
  auto node = std::make_shared<detail::TermNode>();
  node->kind = kind;
  return node;
}

void seal(detail::TermNode& n) {
  std::size_t h = mix(0x7e57ULL, static_cast<std::size_t>(n.kind));
  if (!n.name.empty()) h = mix(h, std::hash<std::string>{}(n.name));
  if (n.commitment) h = mix(h, hash_commitment(*n.commitment));
  int height = 0;
  if (n.left) {
    h = mix(h, n.left->hash());
    height = std::max(height, n.left->height());
  }
  if (n.right) {
    h = mix(h, n.right->hash());
    height = std::max(height, n.right->height());
  }
  n.height = height + 1;
  n.hash = h;
}

}  // namespace

Term Term::var(std::string name) {
  if (!is_variable_name(name))
    throw Error(ErrorCode::InvalidName,
                "'" + name + "' is not a proof variable name");
  auto n = new_term(TermKind::Var);
  n->name = std::move(name);
  seal(*n);
  return Term(std::move(n));
}

Term Term::constant(std::string name) {
  check_plain_name(name, "a proof constant");
  if (is_variable_name(name))
    throw Error(ErrorCode::InvalidName,
                "'" + name + "' is reserved for proof variables");
  auto n = new_term(TermKind::Const);
  n->name = std::move(name);
  seal(*n);
  return Term(std::move(n));
}

Term Term::commit(Commitment c) {
  auto n = new_term(TermKind::Commit);
  n->commitment = std::move(c);
  seal(*n);
  return Term(std::move(n));
}

Term Term::absent(Commitment c) {
  auto n = new_term(TermKind::Absent);
  n->commitment = std::move(c);
  seal(*n);
  return Term(std::move(n));
}

namespace {

std::shared_ptr<detail::TermNode> binary_term(TermKind kind, Term l, Term r) {
  auto n = new_term(kind);
  n->left = std::move(l);
  n->right = std::move(r);
  seal(*n);
  return n;
}

}  // namespace

Term Term::apply(Term l, Term r) {
  return Term(binary_term(TermKind::Apply, std::move(l), std::move(r)));
}

Term Term::sum(Term l, Term r) {
  return Term(binary_term(TermKind::Sum, std::move(l), std::move(r)));
}

Term Term::stronger(Term l, Term r) {
  return Term(binary_term(TermKind::Stronger, std::move(l), std::move(r)));
}

Term Term::prefer(Term l, Term r) {
  return Term(binary_term(TermKind::Prefer, std::move(l), std::move(r)));
}

Term Term::bang(Term inner) {
  auto n = new_term(TermKind::Bang);
  n->left = std::move(inner);
  seal(*n);
  return Term(std::move(n));
}

Term Term::query(Term inner) {
  auto n = new_term(TermKind::Query);
  n->left = std::move(inner);
  seal(*n);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Commitment& Term::commitment() const { return *node_->commitment; }
const Term& Term::left() const { return *node_->left; }
const Term& Term::right() const { return *node_->right; }
const Term& Term::inner() const { return *node_->left; }
int Term::height() const { return node_->height; }
std::size_t Term::hash() const { return node_->hash; }

namespace {

std::strong_ordering structural_compare(const detail::TermNode& a,
                                        const detail::TermNode& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (a.commitment.has_value() != b.commitment.has_value())
    return a.commitment.has_value() <=> b.commitment.has_value();
  if (a.commitment) {
    if (auto c = *a.commitment <=> *b.commitment; c != 0) return c;
  }
  if (a.left.has_value() != b.left.has_value())
    return a.left.has_value() <=> b.left.has_value();
  if (a.left) {
    if (auto c = *a.left <=> *b.left; c != 0) return c;
  }
  if (a.right.has_value() != b.right.has_value())
    return a.right.has_value() <=> b.right.has_value();
  if (a.right) return *a.right <=> *b.right;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->hash <=> b.node_->hash; c != 0) return c;
  return structural_compare(*a.node_, *b.node_);
}

bool operator==(const Term& a, const Term& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Formulas

namespace {

std::shared_ptr<detail::FormulaNode> new_formula(FormulaKind kind) {
  auto node = std::make_shared<detail::FormulaNode>();
  node->kind = kind;
  return node;
}

void seal(detail::FormulaNode& n) {
  std::size_t h = mix(0xf0f0ULL, static_cast<std::size_t>(n.kind));
  if (!n.name.empty()) h = mix(h, std::hash<std::string>{}(n.name));
  if (n.left) h = mix(h, n.left->hash());
  if (n.right) h = mix(h, n.right->hash());
  if (n.term) {
    h = mix(h, n.term->hash());
    h = mix(h, hash_agent(n.agent));
  }
  if (n.commitment) h = mix(h, hash_commitment(*n.commitment));
  n.hash = h;
}

}  // namespace

Formula Formula::atom(std::string name) {
  check_plain_name(name, "an atom");
  auto n = new_formula(FormulaKind::Atom);
  n->name = std::move(name);
  seal(*n);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula kTop = [] {
    auto n = new_formula(FormulaKind::Top);
    seal(*n);
    return Formula(std::move(n));
  }();
  return kTop;
}

Formula Formula::negation(Formula operand) {
  auto n = new_formula(FormulaKind::Not);
  n->left = std::move(operand);
  seal(*n);
  return Formula(std::move(n));
}

namespace {

std::shared_ptr<detail::FormulaNode> binary_formula(FormulaKind kind,
                                                     Formula l, Formula r) {
  auto n = new_formula(kind);
  n->left = std::move(l);
  n->right = std::move(r);
  seal(*n);
  return n;
}

std::shared_ptr<detail::FormulaNode> assertion(FormulaKind kind, Term t,
                                               Agent agent, Formula body) {
  if (agent.is_dont_care())
    throw Error(ErrorCode::ReservedIdentifier,
                "'_' cannot index a justification or explanation");
  auto n = new_formula(kind);
  n->term = std::move(t);
  n->agent = std::move(agent);
  n->left = std::move(body);
  seal(*n);
  return n;
}

}  // namespace

Formula Formula::disjunction(Formula l, Formula r) {
  return Formula(binary_formula(FormulaKind::Or, std::move(l), std::move(r)));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return Formula(binary_formula(FormulaKind::And, std::move(l), std::move(r)));
}

Formula Formula::implication(Formula l, Formula r) {
  return Formula(
      binary_formula(FormulaKind::Implies, std::move(l), std::move(r)));
}

Formula Formula::justified(Term t, Agent agent, Formula body) {
  return Formula(assertion(FormulaKind::Justified, std::move(t),
                           std::move(agent), std::move(body)));
}

Formula Formula::explained(Term t, Agent agent, Formula body) {
  return Formula(assertion(FormulaKind::Explained, std::move(t),
                           std::move(agent), std::move(body)));
}

Formula Formula::commitment(Commitment c) {
  auto n = new_formula(FormulaKind::Commit);
  n->commitment = std::move(c);
  seal(*n);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::operand() const { return *node_->left; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }
const Term& Formula::term() const { return *node_->term; }
const Agent& Formula::agent() const { return node_->agent; }
const Formula& Formula::body() const { return *node_->left; }
const Commitment& Formula::commitment() const { return *node_->commitment; }
std::size_t Formula::hash() const { return node_->hash; }

namespace {

std::strong_ordering structural_compare(const detail::FormulaNode& a,
                                        const detail::FormulaNode& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.agent <=> b.agent; c != 0) return c;
  if (a.term.has_value() != b.term.has_value())
    return a.term.has_value() <=> b.term.has_value();
  if (a.term) {
    if (auto c = *a.term <=> *b.term; c != 0) return c;
  }
  if (a.commitment.has_value() != b.commitment.has_value())
    return a.commitment.has_value() <=> b.commitment.has_value();
  if (a.commitment) {
    if (auto c = *a.commitment <=> *b.commitment; c != 0) return c;
  }
  if (a.left.has_value() != b.left.has_value())
    return a.left.has_value() <=> b.left.has_value();
  if (a.left) {
    if (auto c = *a.left <=> *b.left; c != 0) return c;
  }
  if (a.right.has_value() != b.right.has_value())
    return a.right.has_value() <=> b.right.has_value();
  if (a.right) return *a.right <=> *b.right;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->hash <=> b.node_->hash; c != 0) return c;
  return structural_compare(*a.node_, *b.node_);
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Commitments

Commitment::Commitment(Agent d, Agent c, Slot cond, Slot prom)
    : debtor(std::move(d)),
      creditor(std::move(c)),
      condition(std::move(cond)),
      promise(std::move(prom)) {
  if (debtor.is_public() || creditor.is_public())
    throw Error(ErrorCode::ReservedIdentifier,
                "'*' cannot be a party to a commitment");
}

std::strong_ordering compare_slots(const Slot& a, const Slot& b) {
  if (a.has_value() != b.has_value()) return a.has_value() <=> b.has_value();
  if (!a) return std::strong_ordering::equal;
  return *a <=> *b;
}

std::strong_ordering operator<=>(const Commitment& a, const Commitment& b) {
  if (auto c = a.debtor <=> b.debtor; c != 0) return c;
  if (auto c = a.creditor <=> b.creditor; c != 0) return c;
  if (auto c = compare_slots(a.condition, b.condition); c != 0) return c;
  return compare_slots(a.promise, b.promise);
}

bool operator==(const Commitment& a, const Commitment& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

std::set<Term> subterms(const Term& t) {
  std::set<Term> out;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term cur = stack.back();
    stack.pop_back();
    if (!out.insert(cur).second) continue;
    switch (cur.kind()) {
      case TermKind::Apply:
      case TermKind::Sum:
      case TermKind::Stronger:
      case TermKind::Prefer:
        stack.push_back(cur.left());
        stack.push_back(cur.right());
        break;
      case TermKind::Bang:
      case TermKind::Query:
        stack.push_back(cur.inner());
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace jel
