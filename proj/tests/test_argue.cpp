#include <doctest.h>

#include <algorithm>

#include "jel/argue.hpp"
#include "jel/error.hpp"
#include "jel/scenario.hpp"
#include "support/generators.hpp"

using namespace jel;

namespace {

Formula pf(const char* text) { return parse_formula(text); }
Term pt(const char* text) { return parse_term(text); }

const char* kJ = "C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight)";
const char* kJ1 = "C(na,_,~euCitizen,visa)";

const KnowledgeBase& trip_kb() {
  static const KnowledgeBase kb =
      run_scenario(trip_booking_scenario()).state.kb;
  return kb;
}

KnowledgeBase kb_of(std::initializer_list<const char*> texts) {
  KnowledgeBase kb;
  for (const char* t : texts) kb.assertions.push_back(pf(t));
  return kb;
}

Argument arg(std::vector<Term> chain, std::vector<Formula> carriers,
             Formula conclusion, Agent holder,
             ArgumentKind kind = ArgumentKind::Justificatory) {
  return Argument{std::move(chain), std::move(carriers), std::move(conclusion),
                  kind, std::move(holder)};
}

// Single-step justificatory argument t :{h} f.
Argument simple(const char* term, const char* holder, const char* body) {
  Term t = pt(term);
  Formula f = pf(body);
  return arg({t}, {Formula::justified(t, Agent(holder), f)}, f, Agent(holder));
}

}  // namespace

TEST_CASE("justificatory argument for the trip") {
  auto args = build_arguments(trip_kb(), pf("trip"), 3);
  auto it = std::find_if(args.begin(), args.end(), [](const Argument& a) {
    return a.conclusion == pf("trip") && a.chain == std::vector<Term>{pt(kJ)};
  });
  REQUIRE(it != args.end());
  CHECK(it->kind == ArgumentKind::Justificatory);
  CHECK(it->holder == Agent("t"));
}

TEST_CASE("arguments against the trip") {
  auto args = build_arguments(trip_kb(), pf("trip"), 3);
  bool found = false;
  for (const Argument& a : args) {
    if (a.conclusion != pf("~trip") || a.kind != ArgumentKind::Justificatory)
      continue;
    // Chains are stored nearest-first: J, then what supports J.
    if (a.chain == std::vector<Term>{pt(kJ), pt(kJ1)}) found = true;
  }
  CHECK(found);
}

TEST_CASE("argument list basics") {
  CHECK(build_arguments(KnowledgeBase{}, pf("p"), 3).empty());
  auto args = build_arguments(trip_kb(), pf("trip"), 3);
  for (std::size_t k = 1; k < args.size(); ++k)
    CHECK(args[k - 1].chain.size() <= args[k].chain.size());
  for (const Argument& a : args) {
    CHECK(a.chain.size() == a.carriers.size());
    CHECK(is_minimal(a, trip_kb(), 3));
  }
}

TEST_CASE("describe") {
  CHECK(describe(simple("s", "i", "p")) == "<[s], p> J@i");
  Argument e = simple("s", "i", "p");
  e.kind = ArgumentKind::Explanatory;
  CHECK(describe(e) == "<[s], p> E@i");
  CHECK(complement(pf("p")) == pf("~p"));
  CHECK(complement(pf("~p")) == pf("p"));
}

TEST_CASE("minimality examples") {
  KnowledgeBase only_s = kb_of({"s :{i} F"});
  CHECK(is_minimal(simple("s", "i", "F"), only_s, 2));

  KnowledgeBase with_sum = kb_of({"s :{i} F"});
  with_sum.term_universe.push_back(pt("t"));
  CHECK_FALSE(is_minimal(simple("s + t", "i", "F"), with_sum, 2));

  KnowledgeBase ex1 =
      kb_of({"C(b,c,F,G) :{c} (F -> G)", "C(a,b,_,F) :{b} F"});
  CHECK(is_minimal(simple("C(b,c,F,G) . C(a,b,_,F)", "b", "G"), ex1, 2));
}

TEST_CASE("attack examples") {
  // J' argument for ~trip held by a, and the undercutter J'''.
  const Formula inner = pf(
      "C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight) :{a} ~trip");
  const Formula carrier1 = Formula::justified(pt(kJ1), Agent("a"), inner);
  Argument against = arg({pt(kJ), pt(kJ1)}, {inner, carrier1}, pf("~trip"),
                         Agent("a"));
  const Formula undercut_conclusion = Formula::negation(carrier1);
  Argument j3 = arg({pt("C(na,_,swiss,~visa)")},
                    {Formula::justified(pt("C(na,_,swiss,~visa)"), Agent("t"),
                                        undercut_conclusion)},
                    undercut_conclusion, Agent("t"));
  auto u = attacks(j3, against);
  REQUIRE(u.has_value());
  CHECK(u->kind == AttackKind::Undercut);
  CHECK(u->locus == std::size_t{1});

  Argument for_trip = simple(kJ, "t", "trip");
  auto r = attacks(for_trip, against);
  REQUIRE(r.has_value());
  CHECK(r->kind == AttackKind::Rebuttal);
  CHECK(attacks(against, for_trip)->kind == AttackKind::Rebuttal);

  CHECK_FALSE(attacks(simple("s", "i", "p"), simple("t", "j", "p")));
}

TEST_CASE("resolve examples") {
  Argument uc = simple("C(a,b,p,q)", "i", "F");
  Argument gp = simple("C(c,d,top,r)", "i", "~F");
  CHECK(resolve(uc, gp) == Resolution::First);
  CHECK(resolve(gp, uc) == Resolution::Second);

  Argument same = simple("C(a,b,p,q)", "i", "~F");
  CHECK(resolve(uc, same) == Resolution::Tie);

  Argument weak = simple("C(a,b,p,q)", "b", "F");
  Argument strong = simple("C(a,b,top,q/\\r)", "b", "~F");
  CHECK(resolve(weak, strong) == Resolution::Second);

  CHECK_THROWS_AS(resolve(uc, simple("s", "i", "F")), Error);
}

TEST_CASE("resolve is antisymmetric and attacks are mutual for rebuttals") {
  const std::vector<const char*> terms{
      "C(a,b,top,p) + C(a,b,C(b,a,top,q),top)", "C(a,b,top,p) + C(a,b,q,top)",
      "C(a,b,C(b,a,top,q),p)", "C(a,b,q,p)", "C(a,b,q,C(a,b,top,p))",
      "C(c,d,top,r)", "fact"};
  gen::Gen g(21);
  for (int k = 0; k < 500; ++k) {
    std::vector<Term> c1, c2;
    for (int n = 1 + g.below(3); n > 0; --n) c1.push_back(pt(g.pick(terms)));
    for (int n = 1 + g.below(3); n > 0; --n) c2.push_back(pt(g.pick(terms)));
    Argument a = arg(c1, std::vector<Formula>(c1.size(), pf("F")), pf("F"),
                     Agent("i"));
    Argument b = arg(c2, std::vector<Formula>(c2.size(), pf("F")), pf("~F"),
                     Agent("i"));
    CHECK(attacks(a, b).has_value() == attacks(b, a).has_value());
    Resolution ab, ba;
    try {
      ab = resolve(a, b);
    } catch (const Error&) {
      CHECK_THROWS_AS(resolve(b, a), Error);
      continue;
    }
    ba = resolve(b, a);
    if (ab == Resolution::Tie) CHECK(ba == Resolution::Tie);
    if (ab == Resolution::First) CHECK(ba == Resolution::Second);
    if (ab == Resolution::Second) CHECK(ba == Resolution::First);
  }
}
