#include "support.hpp"

namespace pcf {
namespace {

using test::den;
using test::for_all;
using test::ref_eval;

TEST(Denote, Numerals) {
  EXPECT_EQ(den("0"), point(0, 4));
  EXPECT_THROW(den("4"), Error);
  EXPECT_THROW(den("\\x:nat. x x"), TypeError);
}

TEST(Denote, CaseMatchesHandTable) {
  EXPECT_EQ(den("\\x:nat. case[2] x 1 0", 3), test::ask_then({{0, 1}, {1, 0}}, 3));
}

TEST(Denote, OpenTerm) {
  TypingContext ctx{{"x", Type::nat()}};
  Strategy s = denote(parse_term("case[2] x 1 0"), ctx, 0, 3);
  EXPECT_EQ(s.domain_arity(), 1u);
  EXPECT_EQ(s, test::ask_then({{0, 1}, {1, 0}}, 3));
}

TEST(Denote, FixOfIdentityIsBottom) {
  for (std::size_t k = 0; k <= 16; ++k) EXPECT_TRUE(den("Y[nat] (\\x:nat. x)", 4, k).is_bottom()) << k;
}

TEST(Denote, FixChainIsIncreasing) {
  Term m = parse_term("Y[nat->nat] (\\f:nat->nat. \\x:nat. case[4] x 0 (f 0) (f 1) (f 2))");
  ApproxDenotation chain(m, {}, 4);
  EXPECT_EQ(chain.type(), parse_type("nat->nat"));
  for (std::size_t k = 0; k < 8; ++k) EXPECT_TRUE(strategy_leq(chain.at(k), chain.at(k + 1))) << k;
  EXPECT_EQ(chain.at(4), chain.at(12));  // stabilizes once every branch is reached
  EXPECT_TRUE(strategy_leq(fix_chain(parse_type("nat->nat"), 2, 3), fix_chain(parse_type("nat->nat"), 3, 3)));
  EXPECT_TRUE(fix_chain(Type::nat(), 0, 3).is_bottom());
  EXPECT_EQ(fix_chain(Type::nat(), 2, 3), den("\\f:nat->nat. f (f omega)", 3));
}

TEST(Adequacy, Examples) {
  auto r = adequacy_check(parse_term("3"), 100000, 32, 4);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.denoted, 3u);
  EXPECT_EQ(r.first_k, 0u);

  r = adequacy_check(parse_term("case[2] 1 omega 3"), 100000, 32, 4);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.denoted, 3u);

  r = adequacy_check(parse_term("Y[nat] (\\x:nat. x)"), 100000, 32, 4);
  EXPECT_TRUE(r.agree);
  EXPECT_FALSE(r.denoted);
  EXPECT_FALSE(r.operational.converges());
  EXPECT_FALSE(r.note.empty());
}

TEST(Property, AdequacyAgainstEnvironmentEvaluator) {
  TermGen g;
  g.fix = true;
  g.depth = 3;
  for_all(150, 51, [&](Rng& rng, std::size_t) {
    Term p = rng() % 3 == 0 ? random_fix_term(Type::nat(), g, rng) : random_term({}, Type::nat(), g, rng);
    auto ref = ref_eval(p, 50000);
    auto r = adequacy_check(p, 100000, 32, 4);
    EXPECT_TRUE(r.agree) << p.str();
    if (ref && r.denoted) EXPECT_EQ(*r.denoted, *ref) << p.str();
    EXPECT_EQ(ref.has_value(), r.denoted.has_value()) << p.str();
  });
}

TEST(Property, DenotationsAreWellFormedAndMonotone) {
  TermGen g;
  g.fix = true;
  g.window = 3;
  for_all(100, 52, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{parse_type("nat->nat"), parse_type("(nat->nat)->nat")}, rng);
    Term m = random_term({}, t, g, rng);
    Strategy a = denote(m, 2, 3), b = denote(m, 3, 3);
    EXPECT_FALSE(check_wellformed(a)) << m.str();
    EXPECT_TRUE(strategy_leq(a, b)) << m.str();
  });
}

}  // namespace
}  // namespace pcf
