#include <doctest.h>

#include <string>
#include <vector>

#include "jel/error.hpp"
#include "jel/syntax.hpp"
#include "support/generators.hpp"

using namespace jel;

namespace {

Term c(const std::string& n) { return Term::constant(n); }
Formula at(const std::string& n) { return Formula::atom(n); }
Commitment cm(const std::string& d, const std::string& cr, Formula q,
              Formula p) {
  return Commitment(Agent(d), Agent(cr), q, p);
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::ScenarioFormat;
}

}  // namespace

TEST_CASE("formula examples") {
  const Commitment abpq = cm("a", "b", at("p"), at("q"));
  CHECK(parse_formula("~ C(a,b,p,q) :{i} F") ==
        Formula::negation(
            Formula::justified(Term::commit(abpq), Agent("i"), at("F"))));
  CHECK(parse_formula("(neg C(a,b,p,q)) :{i} F") ==
        Formula::justified(Term::absent(abpq), Agent("i"), at("F")));
  CHECK(parse_formula("p") == at("p"));
  CHECK(parse_formula("!t . s + r :{i} f") ==
        Formula::justified(
            Term::sum(Term::apply(Term::bang(c("t")), c("s")), c("r")),
            Agent("i"), at("f")));
}

TEST_CASE("printer examples") {
  const Commitment abpq = cm("a", "b", at("p"), at("q"));
  CHECK(print_formula(Formula::justified(Term::commit(abpq), Agent("i"),
                                         at("f"))) == "C(a,b,p,q) :{i} f");
  CHECK(print_formula(Formula::negation(
            Formula::justified(c("t"), Agent("i"), at("F")))) ==
        "~ t :{i} F");
  CHECK(print_formula(Formula::explained(
            Term::bang(c("t")), Agent("i"),
            Formula::explained(c("t"), Agent("i"), at("F")))) ==
        "!t <|{i} t <|{i} F");
  CHECK(print_formula(parse_formula("p \\/ ~p")) == "p \\/ ~p");
}

TEST_CASE("term examples") {
  CHECK(parse_term("s . t") == Term::apply(c("s"), c("t")));
  Term st = parse_term(
      "C(s,r,top, moreItems /\\ fasterDeliv) >> C(s,r,payEarlier, "
      "fasterDeliv)");
  REQUIRE(st.kind() == TermKind::Stronger);
  CHECK(st.left() ==
        Term::commit(cm("s", "r", Formula::top(),
                        Formula::conjunction(at("moreItems"),
                                             at("fasterDeliv")))));
  CHECK(st.right() ==
        Term::commit(cm("s", "r", at("payEarlier"), at("fasterDeliv"))));
  CHECK(parse_term("x + !x") ==
        Term::sum(Term::var("x"), Term::bang(Term::var("x"))));
}

TEST_CASE("unindexed assertions belong to the public agent") {
  Formula f = parse_formula("t : p");
  CHECK(f.agent().is_public());
  CHECK(print_formula(f) == "t :{*} p");
}

TEST_CASE("subterms") {
  CHECK(subterms(Term::var("x")) == std::set<Term>{Term::var("x")});
  Term st = Term::apply(c("s"), c("t"));
  CHECK(subterms(st) == std::set<Term>{st, c("s"), c("t")});
  Term ss = Term::sum(c("s"), c("s"));
  CHECK(subterms(ss) == std::set<Term>{ss, c("s")});
}

// One witness per adjacent pair of the binding order, plus associativity.
TEST_CASE("precedence witnesses") {
  const Agent i("i");
  struct Row {
    const char* text;
    Formula expected;
  };
  const Term s = c("s"), t = c("t"), r = c("r");
  const Formula p = at("p"), q = at("q"), rr = at("r");
  std::vector<Row> rows{
      {"!s . t :{i} p", Formula::justified(Term::apply(Term::bang(s), t), i, p)},
      {"?s . t :{i} p",
       Formula::justified(Term::apply(Term::query(s), t), i, p)},
      {"s . t + r :{i} p",
       Formula::justified(Term::sum(Term::apply(s, t), r), i, p)},
      {"s + t >> r :{i} p",
       Formula::justified(Term::stronger(Term::sum(s, t), r), i, p)},
      {"s + t ~> r :{i} p",
       Formula::justified(Term::prefer(Term::sum(s, t), r), i, p)},
      {"s >> t :{i} p", Formula::justified(Term::stronger(s, t), i, p)},
      {"s ~> t <|{i} p", Formula::explained(Term::prefer(s, t), i, p)},
      {"~ t :{i} p", Formula::negation(Formula::justified(t, i, p))},
      {"~ t <|{i} p", Formula::negation(Formula::explained(t, i, p))},
      {"t :{i} p /\\ q",
       Formula::conjunction(Formula::justified(t, i, p), q)},
      {"~p /\\ q", Formula::conjunction(Formula::negation(p), q)},
      {"p /\\ q \\/ r", Formula::disjunction(Formula::conjunction(p, q), rr)},
      {"p \\/ q -> r", Formula::implication(Formula::disjunction(p, q), rr)},
      {"s . t . r :{i} p",
       Formula::justified(Term::apply(Term::apply(s, t), r), i, p)},
      {"s + t + r :{i} p",
       Formula::justified(Term::sum(Term::sum(s, t), r), i, p)},
      {"p -> q -> r", Formula::implication(p, Formula::implication(q, rr))},
      {"s :{i} t :{i} p",
       Formula::justified(s, i, Formula::justified(t, i, p))},
      {"(p -> q) -> r",
       Formula::implication(Formula::implication(p, q), rr)},
      {"s . (t + r) :{i} p",
       Formula::justified(Term::apply(s, Term::sum(t, r)), i, p)},
  };
  for (const Row& row : rows) {
    CAPTURE(row.text);
    Formula got = parse_formula(row.text);
    CHECK(got == row.expected);
    CHECK(parse_formula(print_formula(got)) == got);
  }
}

TEST_CASE("negated term needs the absence form") {
  // ~ applies to formulas only, so (~ t) cannot stand before ':'.
  CHECK(code_of("(~ t) :{i} F") == ErrorCode::SyntaxError);
  CHECK(parse_formula("~ t :{i} F").kind() == FormulaKind::Not);
}

TEST_CASE("syntax errors carry an offset and expected tokens") {
  try {
    parse_formula("p /\\");
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  for (const char* bad : {"", "(p", "p q", "C(a,b,p)", "t :{} p", "p ->",
                          "s . :{i} p", "C(a,b,p,q"}) {
    CAPTURE(bad);
    CHECK(code_of(bad) == ErrorCode::SyntaxError);
  }
}

TEST_CASE("reserved identifier misuse") {
  for (const char* bad : {"C(*,b,p,q) :{i} p", "t :{_} p", "top :{i} p",
                          "_ :{i} p"}) {
    CAPTURE(bad);
    CHECK(code_of(bad) == ErrorCode::ReservedIdentifier);
  }
  CHECK_THROWS_AS(parse_term("top"), Error);
  CHECK_THROWS_AS(Agent("a b"), Error);
  CHECK_THROWS_AS(Term::constant("x1"), Error);
  CHECK_THROWS_AS(Term::var("s"), Error);
}

TEST_CASE("don't-care slots round-trip") {
  for (const char* text : {"C(a,b,_,_)", "C(_,b,p,q)", "C(a,_,top,p)"}) {
    CAPTURE(text);
    CHECK(print_commitment(parse_commitment(text)) == text);
  }
}

TEST_CASE("variables and constants") {
  CHECK(parse_term("x").kind() == TermKind::Var);
  CHECK(parse_term("z12").kind() == TermKind::Var);
  CHECK(parse_term("xy").kind() == TermKind::Const);
  CHECK(parse_term("swissPassport").kind() == TermKind::Const);
}

TEST_CASE("round trip on random formulas") {
  gen::Gen g(7);
  for (int k = 0; k < 2000; ++k) {
    Formula f = gen::formula(g, 4);
    const std::string text = print_formula(f);
    CAPTURE(text);
    Formula back = parse_formula(text);
    CHECK(back == f);
    CHECK(print_formula(back) == text);
  }
  for (int k = 0; k < 2000; ++k) {
    Term t = gen::term(g, 4);
    const std::string text = print_term(t);
    CAPTURE(text);
    CHECK(parse_term(text) == t);
  }
}

TEST_CASE("term prefix parsing stops at the longest term") {
  const std::string line = "j t trip";
  std::size_t end = 0;
  Term t = parse_term_prefix(line, 0, end);
  CHECK(t == c("j"));
  CHECK(end == 1);
  const std::string line2 = "request s . t  holder";
  t = parse_term_prefix(line2, 8, end);
  CHECK(t == Term::apply(c("s"), c("t")));
  CHECK(line2.substr(end) == "  holder");
}
