#include <doctest.h>

#include "jel/error.hpp"
#include "jel/strength.hpp"
#include "support/generators.hpp"

using namespace jel;

namespace {

Term pt(const char* text) { return parse_term(text); }
Commitment pc(const char* text) { return parse_commitment(text); }

}  // namespace

TEST_CASE("stronger examples") {
  CHECK(stronger(pt("C(s,r,top, moreItems/\\fasterDeliv)"),
                 pt("C(s,r,payEarlier,fasterDeliv)")) == Verdict::Stronger);
  CHECK(stronger(pt("C(bank,a,card\\/wired,top)"),
                 pt("C(bank,a,wired,top)")) == Verdict::Stronger);
  CHECK(stronger(pt("p"), pt("C(x,y,q,p)")) == Verdict::Stronger);
  CHECK(stronger(pt("C(me,you,confirm,deliver)"),
                 pt("C(me,you,C(me,you,top,confirm),deliver)")) ==
        Verdict::Stronger);
  CHECK(stronger(pt("C(a,b,p,q)"), pt("C(a,b,p,q)")) == Verdict::Equal);
  CHECK(stronger(pt("C(a,b,p,q)"), pt("C(a,b,r,s)")) == Verdict::Incomparable);
  CHECK(verdict_name(Verdict::Stronger) == "STRONGER");
}

TEST_CASE("stronger is antisymmetric on random commitments") {
  gen::Gen g(3);
  for (int k = 0; k < 3000; ++k) {
    Term x = Term::commit(gen::commitment(g, 2));
    Term y = g.coin(20) ? x : Term::commit(gen::commitment(g, 2));
    CAPTURE(print_term(x));
    CAPTURE(print_term(y));
    CHECK(stronger(y, x) == flip(stronger(x, y)));
    CHECK(stronger(x, x) == Verdict::Equal);
  }
}

TEST_CASE("rank examples") {
  CHECK(pattern_rank(pt("C(a,b,C(b,a,top,pay),deliver)")) == 3);
  CHECK(pattern_rank(pt("C(a,b,pay,deliver)")) == 4);
  CHECK(pattern_rank(pt("C(a,b,top,deliver) + C(a,b,pay,top)")) == 2);
  CHECK(pattern_rank(pt("C(a,b,top,deliver) + C(a,b,C(b,a,top,pay),top)")) ==
        1);
  CHECK(pattern_rank(pt("C(a,b,pay,C(a,b,top,deliver))")) == 5);
  CHECK(pattern_rank(pt("swissPassport")) == 5);
  CHECK(pattern_rank(pt("!C(a,b,pay,deliver)")) == 4);
  CHECK_FALSE(try_pattern_rank(pt("x")).has_value());
  CHECK_THROWS_AS(pattern_rank(pt("neg C(a,b,p,q)")), Error);
}

TEST_CASE("meets_standard examples") {
  const Term j = pt("C(s2,t,pay1,acc) + C(s1,t,C(t,s1,top,pay2),flight)");
  CHECK_FALSE(meets_standard(j, ProofStandard::Convincing));
  CHECK(meets_standard(j, ProofStandard::Preponderance));
  CHECK(meets_standard(pt("swissPassport"), ProofStandard::Preponderance));
  CHECK(meets_standard(pt("swissPassport"), ProofStandard::BeyondDoubt));
  CHECK_FALSE(meets_standard(pt("C(a,b,top,deliver) + C(a,b,pay,top)"),
                             ProofStandard::Convincing));
}

TEST_CASE("meets_standard is monotone in the level") {
  gen::Gen g(5);
  for (int k = 0; k < 2000; ++k) {
    Term t = g.coin(70) ? Term::commit(gen::commitment(g, 2))
                        : Term::sum(Term::commit(gen::commitment(g, 2)),
                                    Term::commit(gen::commitment(g, 2)));
    if (!try_pattern_rank(t)) continue;
    for (int lv = 2; lv <= 5; ++lv) {
      if (meets_standard(t, ProofStandard(lv)))
        CHECK(meets_standard(t, ProofStandard(lv - 1)));
    }
  }
}

TEST_CASE("standards by keyword") {
  CHECK(parse_standard("preponderance") == ProofStandard::Preponderance);
  CHECK(parse_standard("beyond-doubt") == ProofStandard::BeyondDoubt);
  CHECK_FALSE(parse_standard("certain").has_value());
  for (int lv = 1; lv <= 5; ++lv)
    CHECK(parse_standard(standard_name(ProofStandard(lv))) ==
          ProofStandard(lv));
}

TEST_CASE("prefer examples") {
  const Commitment x = pc("C(a,b,top,q /\\ r)");
  const Commitment y = pc("C(a,b,p,q)");
  REQUIRE(stronger(Term::commit(x), Term::commit(y)) == Verdict::Stronger);
  CHECK(prefer(x, y, Agent("b")) == Preference::First);
  CHECK(prefer(x, y, Agent("a")) == Preference::Second);
  CHECK_FALSE(prefer(x, y, Agent("z")).has_value());
  CHECK_THROWS_AS(prefer(pc("C(a,b,p,q)"), pc("C(a,b,r,s)"), Agent("b")),
                  Error);
}

TEST_CASE("prefer is antisymmetric") {
  gen::Gen g(9);
  int decided = 0;
  for (int k = 0; k < 3000; ++k) {
    Commitment x = gen::commitment(g, 2);
    Commitment y = gen::commitment(g, 2);
    Verdict v = stronger(Term::commit(x), Term::commit(y));
    if (v != Verdict::Stronger && v != Verdict::Weaker) continue;
    for (const Agent& viewer : {Agent("i"), Agent("j")}) {
      auto a = prefer(x, y, viewer);
      auto b = prefer(y, x, viewer);
      CHECK(a.has_value() == b.has_value());
      if (a && b) {
        ++decided;
        CHECK(*a != *b);
      }
    }
  }
  CHECK(decided > 0);
}

TEST_CASE("equal_strength examples") {
  CHECK(equal_strength(pt("C(a,b,p,q)"), pt("C(c,d,r,s)")));
  CHECK_FALSE(equal_strength(pt("C(a,b,top,q)"), pt("C(a,b,p,q)")));
  CHECK(equal_strength(pt("C(a,b,p,q)"), pt("C(a,b,p,q)")));
}
