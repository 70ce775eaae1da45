#include "support.hpp"

namespace pcf {
namespace {

using test::ask_then;
using test::den;
using test::for_all;

const JMove kQ{Move::question({}), -1};

TEST(Arena, Flat) {
  Arena a(Type::nat(), 3);
  EXPECT_EQ(a.move_count(), 4u);
  EXPECT_EQ(a.answers_at({}), 3u);
  auto en = a.enabled_by(Move::question({}));
  ASSERT_EQ(en.size(), 3u);
  for (std::uint32_t v = 0; v < 3; ++v) EXPECT_TRUE(a.contains(Move::answer_to({}, v)));
  EXPECT_FALSE(a.contains(Move::answer_to({}, 3)));
  EXPECT_FALSE(a.contains(Move::question({0})));
}

TEST(Arena, Arrow) {
  Arena a(parse_type("nat->nat"), 2);
  EXPECT_EQ(a.move_count(), 6u);
  EXPECT_EQ(Move::question({}).polarity(), Polarity::Opponent);
  EXPECT_EQ(Move::question({0}).polarity(), Polarity::Player);
  EXPECT_EQ(Move::answer_to({0}, 1).polarity(), Polarity::Opponent);
  EXPECT_EQ(Move::answer_to({}, 1).polarity(), Polarity::Player);
  auto en = a.enabled_by(Move::question({}));
  EXPECT_NE(std::find(en.begin(), en.end(), Move::question({0})), en.end());
  EXPECT_TRUE(a.enabled_by(Move::answer_to({0}, 0)).empty());
}

TEST(Arena, Iota) {
  Arena a(parse_type("i->i"), 5);
  EXPECT_EQ(a.move_count(), 2u);
  EXPECT_EQ(a.answers_at({}), 0u);
}

TEST(Strategy, Norms) {
  EXPECT_EQ(bottom(Type::nat(), 4).norm(), 0u);
  EXPECT_EQ(point(2, 4).norm(), 1u);
  EXPECT_EQ(identity(Type::nat(), 3).norm(), 4u);
}

TEST(Strategy, Classify) {
  auto b = classify(bottom(parse_type("nat->nat"), 3, 1));
  EXPECT_TRUE(b.strict);
  EXPECT_FALSE(b.total);
  auto d = classify(identity(Type::nat(), 3));
  EXPECT_TRUE(d.strict);
  EXPECT_TRUE(d.total);
  auto c = classify(den("\\x:nat. 3").with_domain_arity(1));
  EXPECT_FALSE(c.strict);
  EXPECT_TRUE(c.constant);
}

TEST(Strategy, Order) {
  Strategy f = ask_then({{0, 1}}, 3);
  EXPECT_TRUE(strategy_leq(f, f));
  EXPECT_TRUE(strategy_leq(bottom(Type::nat(), 4), point(0, 4)));
  EXPECT_FALSE(strategy_leq(point(0, 4), bottom(Type::nat(), 4)));
  EXPECT_TRUE(strategy_leq(f, ask_then({{0, 1}, {2, 0}}, 3)));
  EXPECT_FALSE(strategy_leq(ask_then({{0, 2}}, 3), ask_then({{0, 1}, {2, 0}}, 3)));
}

TEST(Strategy, WellFormedness) {
  EXPECT_FALSE(check_wellformed(ask_then({{0, 1}, {1, 0}}, 2)));
  Strategy bad(parse_type("nat->nat"), 2);
  bad.set({kQ}, JMove{Move::answer_to({0}, 1), 0});  // O-move as a response
  EXPECT_TRUE(check_wellformed(bad));
  Strategy orphan(parse_type("nat->nat"), 2);
  orphan.set({kQ, JMove{Move::question({0}), 0}, JMove{Move::answer_to({0}, 1), 1}}, JMove{Move::answer_to({}, 0), 0});
  EXPECT_TRUE(check_wellformed(orphan));  // not prefix-closed
}

TEST(Strategy, SerializeRoundTrip) {
  Strategy f = den("\\f:nat->nat. \\x:nat. case[2] (f x) x 1", 3);
  EXPECT_EQ(Strategy::parse(f.serialize()), f);
  EXPECT_THROW(Strategy::parse("pcf-strategy 1\ntype nat\n"), Error);
}

TEST(Property, GeneratedStrategiesAreWellFormed) {
  for_all(400, 31, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{parse_type("nat->nat"), parse_type("(nat->nat)->nat"),
                                    parse_type("nat->nat->nat"), parse_type("((nat->nat)->nat)->nat")},
                  rng);
    Strategy f = random_compact(t, 3, 6, rng);
    auto why = check_wellformed(f);
    EXPECT_FALSE(why) << *why << "\n" << f.serialize();
    EXPECT_LE(f.norm(), 6u);
    EXPECT_EQ(Strategy::parse(f.serialize()), f);
  });
}

TEST(Property, EnumerationIsSortedAndComplete) {
  auto all = enumerate_strategies(parse_type("nat->nat"), 2, 1, 3);
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto key = [](const Strategy& s) { return std::make_pair(s.norm(), s.serialize()); };
    EXPECT_LT(key(all[i - 1]), key(all[i]));
  }
  // Hand count at window 2. After the argument answers, P may answer 0, 1
  // or ask again: 3 responses per answered view.
  //   norm 1: two constants, or ask
  //   norm 2: ask, then one of 2 answers gets one of 3 responses
  //   norm 3: both answers responded (3 x 3), or one answer re-asks and one
  //           of the 2 second answers gets a response (2 x 2 x 3)
  std::size_t by_norm[4] = {};
  for (const auto& s : all) ++by_norm[s.norm()];
  EXPECT_EQ(by_norm[0], 1u);
  EXPECT_EQ(by_norm[1], 3u);
  EXPECT_EQ(by_norm[2], 6u);
  EXPECT_EQ(by_norm[3], 21u);
}

}  // namespace
}  // namespace pcf
