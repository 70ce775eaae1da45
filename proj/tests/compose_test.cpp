#include "support.hpp"

namespace pcf {
namespace {

using test::ask_then;
using test::den;
using test::for_all;

const Type kNN = Type::arrow(Type::nat(), Type::nat());

TEST(Compose, MediateSelectsBranch) {
  std::map<std::uint32_t, Strategy> fam{{2, point(7, 8)}, {0, point(1, 8)}};
  Strategy m = mediate(fam, Type::nat(), 8);
  EXPECT_EQ(point_value(compose(point(2, 8), m)), 7u);
  EXPECT_EQ(point_value(compose(point(0, 8), m)), 1u);
  EXPECT_TRUE(compose(point(1, 8), m).is_bottom());
  // The empty family still asks its argument: strict, and bottom on every
  // point, but not the empty strategy.
  Strategy none = mediate({}, Type::nat(), 8);
  EXPECT_EQ(none.norm(), 1u);
  EXPECT_TRUE(classify(none).strict);
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_TRUE(compose(point(x, 8), none).is_bottom());
}

TEST(Compose, BottomIsAbsorbing) {
  for (auto h : {identity(Type::nat(), 3), ask_then({{0, 1}, {1, 2}}, 3)})
    EXPECT_TRUE(compose(bottom(Type::nat(), 3), h).is_bottom());
}

TEST(Compose, DerelictionAfterPromotion) {
  Strategy g = den("\\f:nat->nat. f (f 0)", 3).with_domain_arity(1);
  EXPECT_EQ(compose(promote(g), dereliction(Type::nat(), 3)), g);
}

TEST(Compose, WeakeningIgnoresTheContext) {
  Strategy p = point(2, 4);
  Strategy w = weaken(p, {kNN, Type::nat()});
  EXPECT_EQ(w.domain_arity(), 2u);
  EXPECT_EQ(w.norm(), 1u);
  EXPECT_EQ(compose_tuple({}, {ask_then({{0, 1}}, 4), bottom(Type::nat(), 4)}, w), p);
}

TEST(Compose, ContractionDuplicates) {
  Tuple c = contraction(Type::nat(), 3);
  ASSERT_EQ(c.size(), 2u);
  Strategy plus = den("\\x:nat. \\y:nat. case[2] x y 2", 3).with_domain_arity(2);
  Strategy diag = compose_tuple({Type::nat()}, c, plus);
  EXPECT_EQ(diag, den("\\x:nat. case[2] x x 2", 3));
}

TEST(Compose, ApplicationAndCurry) {
  Strategy f = den("\\x:nat. \\y:nat. case[2] y x 0", 3);
  Strategy uf = uncurry(f.with_domain_arity(1));
  EXPECT_EQ(uf.domain_arity(), 2u);
  EXPECT_EQ(curry(uf).domain_arity(), 1u);
  EXPECT_EQ(curry(uf), f);
  Strategy ap = application(kNN, 3);
  EXPECT_EQ(ap.domain_arity(), 2u);
  // ap ; <id-ish point arguments>: apply nat->nat to 1.
  Strategy r = compose_tuple({}, {den("\\z:nat. case[2] z 2 0", 3), point(1, 3)}, ap);
  EXPECT_EQ(point_value(r), 0u);
}

TEST(Compose, StructuralDispatcher) {
  StructuralArgs a;
  a.objects = {Type::nat()};
  a.window = 3;
  EXPECT_EQ(structural(StructuralKind::Identity, a).at(0), identity(Type::nat(), 3));
  EXPECT_EQ(structural(StructuralKind::Con, a).size(), 2u);
  EXPECT_TRUE(structural(StructuralKind::Weak, a).empty());
  a.value = 2;
  EXPECT_EQ(point_value(structural(StructuralKind::Point, a).at(0)), 2u);
  EXPECT_THROW(structural(StructuralKind::Promote, StructuralArgs{}), Error);
}

TEST(Property, IdentityLaws) {
  for_all(200, 41, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{kNN, parse_type("(nat->nat)->nat"), parse_type("nat->nat->nat")}, rng);
    Strategy f = random_compact(t, 3, 6, rng);
    // f : A -> B with A the first argument.
    Strategy g = f.with_domain_arity(1);
    Type a = t.arguments()[0];
    EXPECT_EQ(compose(identity(a, 3), g), g) << g.serialize();
    Type b = g.codomain();
    EXPECT_EQ(compose(g, identity(b, 3)), g) << g.serialize();
  });
}

TEST(Property, Associativity) {
  for_all(150, 42, [&](Rng& rng, std::size_t) {
    Strategy f = random_compact(kNN, 3, 5, rng).with_domain_arity(1);
    Strategy g = random_compact(kNN, 3, 5, rng).with_domain_arity(1);
    Strategy h = random_compact(kNN, 3, 5, rng).with_domain_arity(1);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)))
        << f.serialize() << g.serialize() << h.serialize();
  });
}

TEST(Property, BetaIsSound) {
  // The model cannot tell a redex from its contractum.
  TermGen tg;
  tg.window = 3;
  tg.depth = 3;
  for_all(150, 43, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{Type::nat(), kNN, parse_type("(nat->nat)->nat")}, rng);
    Term m = random_term({}, t, tg, rng);
    Strategy d = denote(m, 0, 3);
    Term r = m;
    for (int i = 0; i < 6; ++i)
      if (auto s = reduce_step(r)) r = *s;
    EXPECT_EQ(denote(r, 0, 3), d) << m.str() << " ~> " << r.str();
  });
}

}  // namespace
}  // namespace pcf
