#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jel/error.hpp"
#include "jel/syntax.hpp"

namespace jel {
namespace {

enum class Tok {
  Ident,
  Star,
  Underscore,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Tilde,
  AndOp,
  OrOp,
  Arrow,
  Dot,
  Plus,
  BangOp,
  QueryOp,
  StrongerOp,
  PreferOp,
  Colon,
  Triangle,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string display(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

bool alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool alnum(char c) { return alpha(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(std::string_view src, std::size_t start) {
  std::vector<Token> out;
  std::size_t i = start;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), i});
    i += len;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    auto next = [&](char want) { return i + 1 < src.size() && src[i + 1] == want; };
    if (alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && alnum(src[j])) ++j;
      push(Tok::Ident, j - i);
    } else if (c == '*') {
      push(Tok::Star, 1);
    } else if (c == '_') {
      push(Tok::Underscore, 1);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == '{') {
      push(Tok::LBrace, 1);
    } else if (c == '}') {
      push(Tok::RBrace, 1);
    } else if (c == ',') {
      push(Tok::Comma, 1);
    } else if (c == '~') {
      if (next('>'))
        push(Tok::PreferOp, 2);
      else
        push(Tok::Tilde, 1);
    } else if (c == '/' && next('\\')) {
      push(Tok::AndOp, 2);
    } else if (c == '\\' && next('/')) {
      push(Tok::OrOp, 2);
    } else if (c == '-' && next('>')) {
      push(Tok::Arrow, 2);
    } else if (c == '>' && next('>')) {
      push(Tok::StrongerOp, 2);
    } else if (c == '<' && next('|')) {
      push(Tok::Triangle, 2);
    } else if (c == '.') {
      push(Tok::Dot, 1);
    } else if (c == '+') {
      push(Tok::Plus, 1);
    } else if (c == '!') {
      push(Tok::BangOp, 1);
    } else if (c == '?') {
      push(Tok::QueryOp, 1);
    } else if (c == ':') {
      push(Tok::Colon, 1);
    } else {
      throw SyntaxError(i, {"a token"},
                        "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

// Thrown internally to abandon one alternative; never escapes the parser.
struct Backtrack {};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula_eof() {
    Formula f = run([&] { return implies(); });
    expect_end();
    return f;
  }

  Term term_eof() {
    terms_only_ = true;
    Term t = run([&] { return term_expr(); });
    expect_end();
    return t;
  }

  Term term_prefix(std::size_t& end_offset) {
    terms_only_ = true;
    Term t = run([&] { return term_expr(); });
    end_offset = pos_ == 0 ? toks_[0].offset
                           : toks_[pos_ - 1].offset + toks_[pos_ - 1].text.size();
    return t;
  }

 private:
  template <class F>
  auto run(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Backtrack&) {
      throw furthest_error();
    }
  }

  void expect_end() {
    if (peek().kind != Tok::End) {
      note({"end of input"});
      throw furthest_error();
    }
  }

  SyntaxError furthest_error() const {
    std::string found = "end of input";
    for (const auto& t : toks_) {
      if (t.offset == err_offset_) {
        found = display(t);
        break;
      }
    }
    return SyntaxError(err_offset_, err_expected_, found);
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }

  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view text) const {
    return peek().kind == Tok::Ident && peek().text == text;
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    std::size_t off = peek().offset;
    if (!have_err_ || off > err_offset_) {
      err_offset_ = off;
      err_expected_ = std::move(expected);
      have_err_ = true;
    } else if (off == err_offset_) {
      err_expected_.insert(expected.begin(), expected.end());
    }
    throw Backtrack{};
  }

  void note(std::set<std::string> expected) {
    try {
      fail(std::move(expected));
    } catch (const Backtrack&) {
    }
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail({what});
    ++pos_;
  }

  [[noreturn]] void reserved(const std::string& msg) {
    throw Error(ErrorCode::ReservedIdentifier,
                "at byte " + std::to_string(peek().offset) + ": " + msg);
  }

  // ---- formulas ----------------------------------------------------------

  Formula implies() {
    Formula l = disjunction();
    if (at(Tok::Arrow)) {
      ++pos_;
      return Formula::implication(std::move(l), implies());
    }
    return l;
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (at(Tok::OrOp)) {
      ++pos_;
      l = Formula::disjunction(std::move(l), conjunction());
    }
    return l;
  }

  Formula conjunction() {
    Formula l = unary();
    while (at(Tok::AndOp)) {
      ++pos_;
      l = Formula::conjunction(std::move(l), unary());
    }
    return l;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      ++pos_;
      return Formula::negation(unary());
    }
    return assertion_or_primary();
  }

  Formula assertion_or_primary() {
    if (at_ident("top") &&
        (peek(1).kind == Tok::Colon || peek(1).kind == Tok::Triangle))
      reserved("'top' cannot be used as a proof term");
    const std::size_t save = pos_;
    std::optional<Term> t;
    try {
      t = term_expr();
    } catch (const Backtrack&) {
      t.reset();
    }
    if (t && (at(Tok::Colon) || at(Tok::Triangle))) {
      const bool justified = at(Tok::Colon);
      ++pos_;
      Agent agent = index();
      Formula body = unary();
      return justified ? Formula::justified(std::move(*t), std::move(agent),
                                            std::move(body))
                       : Formula::explained(std::move(*t), std::move(agent),
                                            std::move(body));
    }
    if (t) note({"':'", "'<|'"});
    pos_ = save;
    return primary();
  }

  Agent index() {
    if (!at(Tok::LBrace)) return Agent::public_agent();
    ++pos_;
    Agent a;
    if (at(Tok::Star)) {
      ++pos_;
      a = Agent::public_agent();
    } else if (at(Tok::Underscore)) {
      reserved("'_' cannot index a justification or explanation");
    } else if (at(Tok::Ident)) {
      a = agent_name();
    } else {
      fail({"agent"});
    }
    expect(Tok::RBrace, "'}'");
    return a;
  }

  Agent agent_name() {
    const std::string& name = peek().text;
    if (name == "top" || name == "neg")
      reserved("'" + name + "' cannot be used as an agent name");
    ++pos_;
    return Agent(name);
  }

  Formula primary() {
    if (at(Tok::LParen)) {
      ++pos_;
      Formula f = implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at(Tok::Ident)) {
      if (peek().text == "top") {
        ++pos_;
        return Formula::top();
      }
      if (peek().text == "neg")
        reserved("'neg' only marks an absent commitment in term position");
      if (peek().text == "C" && peek(1).kind == Tok::LParen)
        return Formula::commitment(commitment());
      std::string name = peek().text;
      ++pos_;
      return Formula::atom(std::move(name));
    }
    if (at(Tok::Underscore))
      reserved("'_' is only allowed in commitment slots");
    if (at(Tok::Star)) reserved("'*' is only allowed as an agent index");
    fail({"formula"});
  }

  // ---- terms -------------------------------------------------------------

  Term term_expr() {
    Term l = term_sum();
    while (at(Tok::StrongerOp) || at(Tok::PreferOp)) {
      const bool stronger = at(Tok::StrongerOp);
      ++pos_;
      Term r = term_sum();
      l = stronger ? Term::stronger(std::move(l), std::move(r))
                   : Term::prefer(std::move(l), std::move(r));
    }
    return l;
  }

  Term term_sum() {
    Term l = term_app();
    while (at(Tok::Plus)) {
      ++pos_;
      l = Term::sum(std::move(l), term_app());
    }
    return l;
  }

  Term term_app() {
    Term l = term_unary();
    while (at(Tok::Dot)) {
      ++pos_;
      l = Term::apply(std::move(l), term_unary());
    }
    return l;
  }

  Term term_unary() {
    if (at(Tok::BangOp)) {
      ++pos_;
      return Term::bang(term_unary());
    }
    if (at(Tok::QueryOp)) {
      ++pos_;
      return Term::query(term_unary());
    }
    return term_primary();
  }

  Term term_primary() {
    if (at(Tok::LParen)) {
      ++pos_;
      Term t = term_expr();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (at(Tok::Ident)) {
      const std::string& name = peek().text;
      if (name == "C" && peek(1).kind == Tok::LParen)
        return Term::commit(commitment());
      if (name == "neg") {
        ++pos_;
        if (!(at_ident("C") && peek(1).kind == Tok::LParen))
          fail({"commitment after 'neg'"});
        return Term::absent(commitment());
      }
      if (name == "top") {
        if (terms_only_ && formula_depth_ == 0) reserved("'top' cannot be used as a proof term");
        fail({"term"});
      }
      std::string copy = name;
      ++pos_;
      return Term::is_variable_name(copy) ? Term::var(std::move(copy))
                                          : Term::constant(std::move(copy));
    }
    fail({"term"});
  }

  // ---- commitments -------------------------------------------------------

  Commitment commitment() {
    const std::size_t start = pos_;
    if (auto it = memo_.find(start); it != memo_.end()) {
      pos_ = it->second.second;
      return it->second.first;
    }
    ++pos_;  // C
    expect(Tok::LParen, "'('");
    Agent debtor = party();
    expect(Tok::Comma, "','");
    Agent creditor = party();
    expect(Tok::Comma, "','");
    Slot cond = slot();
    expect(Tok::Comma, "','");
    Slot prom = slot();
    expect(Tok::RParen, "')'");
    Commitment c(std::move(debtor), std::move(creditor), std::move(cond),
                 std::move(prom));
    memo_.emplace(start, std::make_pair(c, pos_));
    return c;
  }

  Agent party() {
    if (at(Tok::Underscore)) {
      ++pos_;
      return Agent::dont_care();
    }
    if (at(Tok::Star)) reserved("'*' cannot be a party to a commitment");
    if (!at(Tok::Ident)) fail({"agent"});
    return agent_name();
  }

  Slot slot() {
    if (at(Tok::Underscore) &&
        (peek(1).kind == Tok::Comma || peek(1).kind == Tok::RParen)) {
      ++pos_;
      return std::nullopt;
    }
    ++formula_depth_;
    try {
      Formula f = implies();
      --formula_depth_;
      return f;
    } catch (...) {
      --formula_depth_;
      throw;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool terms_only_ = false;
  int formula_depth_ = 0;  // > 0 inside a commitment slot
  bool have_err_ = false;
  std::size_t err_offset_ = 0;
  std::set<std::string> err_expected_;
  std::map<std::size_t, std::pair<Commitment, std::size_t>> memo_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  return Parser(lex(text, 0)).formula_eof();
}

Term parse_term(std::string_view text) {
  return Parser(lex(text, 0)).term_eof();
}

Term parse_term_prefix(std::string_view text, std::size_t offset,
                       std::size_t& end) {
  return Parser(lex(text, offset)).term_prefix(end);
}

Commitment parse_commitment(std::string_view text) {
  Term t = parse_term(text);
  if (t.kind() != TermKind::Commit)
    throw SyntaxError(0, {"commitment C(...)"}, "'" + print_term(t) + "'");
  return t.commitment();
}

}  // namespace jel
