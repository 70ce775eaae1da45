#include "support.hpp"

#include "pcf/fullabs.hpp"

namespace pcf {
namespace {

using test::den;
using test::for_all;

TEST(Intrinsic, BottomIsLeast) {
  for (const char* g : {"0", "2", "omega"}) {
    auto v = intrinsic_leq(bottom(Type::nat(), 3), den(g, 3), 3, 3);
    EXPECT_FALSE(v.separated) << g;
  }
}

TEST(Intrinsic, DistinctConstantsSeparate) {
  auto v = intrinsic_leq(den("\\x:nat. 0", 3), den("\\x:nat. 1", 3), 3, 3);
  ASSERT_TRUE(v.separated);
  EXPECT_EQ(v.value, 0u);
  // Replay.
  EXPECT_EQ(point_value(compose(den("\\x:nat. 0", 3), *v.witness_strategy)), 0u);
  EXPECT_NE(point_value(compose(den("\\x:nat. 1", 3), *v.witness_strategy)), std::optional<std::uint32_t>(0));
}

TEST(Intrinsic, IntensionallyDifferentStrictPairs) {
  Strategy f = den("\\x:nat. \\y:nat. case[1] x (case[1] y 0)", 2);
  Strategy g = den("\\x:nat. \\y:nat. case[1] y (case[1] x 0)", 2);
  ASSERT_NE(f, g);
  EXPECT_FALSE(intrinsic_leq(f, g, 4, 2).separated);
  EXPECT_FALSE(intrinsic_leq(g, f, 4, 2).separated);
}

TEST(Observational, Examples) {
  auto v = obs_compare(parse_term("omega"), parse_term("0"), 3, 10000, 3);
  EXPECT_FALSE(v.separated);  // omega is below everything
  v = obs_compare(parse_term("0"), parse_term("omega"), 3, 10000, 3);
  ASSERT_TRUE(v.separated);
  EXPECT_EQ(v.value, 0u);
  auto replay = evaluate(Term::app(*v.witness_term, parse_term("0")), 10000);
  EXPECT_TRUE(replay.converges());
  EXPECT_EQ(replay.value, 0u);

  Term m = parse_term("\\f:nat->nat. f 1");
  EXPECT_FALSE(obs_compare(m, m, 4, 10000, 3).separated);
  EXPECT_FALSE(obs_compare(parse_term("\\x:nat. \\y:nat. case[1] x (case[1] y 0)"),
                           parse_term("\\x:nat. \\y:nat. case[1] y (case[1] x 0)"), 4, 10000, 2)
                   .separated);
}

TEST(Tests, EnumerationOrder) {
  auto ts = enumerate_tests(Type::nat(), 2, 2);
  for (const auto& t : ts) {
    EXPECT_EQ(t.domain_arity(), 1u);
    EXPECT_LE(t.norm(), 2u);
  }
  for (std::size_t i = 1; i < ts.size(); ++i)
    EXPECT_LT(std::make_pair(ts[i - 1].norm(), ts[i - 1].serialize()), std::make_pair(ts[i].norm(), ts[i].serialize()));
}

TEST(Property, PreorderLaws) {
  TermGen g;
  g.window = 2;
  g.depth = 2;
  for_all(40, 81, [&](Rng& rng, std::size_t) {
    Type t = parse_type("nat->nat");
    Strategy f = denote(random_term({}, t, g, rng), 0, 2);
    Strategy h = denote(random_term({}, t, g, rng), 0, 2);
    Strategy k = denote(random_term({}, t, g, rng), 0, 2);
    EXPECT_FALSE(intrinsic_leq(f, f, 3, 2).separated);
    bool fh = !intrinsic_leq(f, h, 3, 2).separated, hk = !intrinsic_leq(h, k, 3, 2).separated;
    if (fh && hk) EXPECT_FALSE(intrinsic_leq(f, k, 3, 2).separated);
  });
}

TEST(Property, IntrinsicAndObservationalCohere) {
  TermGen g;
  g.window = 2;
  g.depth = 2;
  for_all(60, 82, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{Type::nat(), parse_type("nat->nat")}, rng);
    Term m = random_term({}, t, g, rng), n = random_term({}, t, g, rng);
    auto a = intrinsic_leq(denote(m, 0, 2), denote(n, 0, 2), 3, 2);
    auto b = obs_compare(m, n, 3, 10000, 2);
    EXPECT_EQ(a.separated, b.separated) << m.str() << " vs " << n.str();
    if (a.separated && b.separated) EXPECT_EQ(*a.witness_strategy, *b.witness_strategy);
  });
}

}  // namespace
}  // namespace pcf
