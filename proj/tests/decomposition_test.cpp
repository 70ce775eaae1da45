#include "support.hpp"

namespace pcf {
namespace {

using test::ask_then;
using test::den;
using test::for_all;

const std::vector<Type> kShapes{parse_type("nat->nat"), parse_type("(nat->nat)->nat"), parse_type("nat->nat->nat")};

Strategy in_context(const std::string& src, std::uint32_t window) {
  Strategy s = den(src, window);
  return s.with_domain_arity(s.type().arity());
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(bottom(parse_type("nat->nat"), 4, 1)).kind, Decomposition::Kind::Bot);

  auto c = decompose(in_context("\\x:nat. 3", 4));
  EXPECT_EQ(c.kind, Decomposition::Kind::Const);
  EXPECT_EQ(c.value, 3u);

  Strategy f = in_context("\\x:nat. case[2] x 1 0", 3);
  auto d = decompose(f);
  ASSERT_EQ(d.kind, Decomposition::Kind::Total);
  EXPECT_EQ(d.head, 0u);
  EXPECT_TRUE(d.args.empty());
  ASSERT_EQ(d.branches.size(), 2u);
  EXPECT_EQ(decompose(d.branches.at(0)).value, 1u);
  EXPECT_EQ(decompose(d.branches.at(1)).value, 0u);
  EXPECT_EQ(recompose(d, f.type(), 3), f);
}

TEST(Decompose, HigherOrderHead) {
  Strategy f = in_context("\\f:nat->nat. \\x:nat. case[2] (f x) 2 x", 3);
  auto d = decompose(f);
  ASSERT_EQ(d.kind, Decomposition::Kind::Total);
  EXPECT_EQ(d.head, 0u);
  ASSERT_EQ(d.args.size(), 1u);
  // The argument of f is x, i.e. the second projection out of the context.
  EXPECT_EQ(d.args[0], projection({parse_type("nat->nat"), Type::nat()}, 1, 3));
  EXPECT_EQ(d.branches.size(), 2u);
  EXPECT_EQ(recompose(d, f.type(), 3), f);
}

TEST(Recompose, ConstAndBot) {
  Type t = parse_type("nat->nat");
  Decomposition c;
  c.kind = Decomposition::Kind::Const;
  c.value = 2;
  EXPECT_EQ(recompose(c, t, 4), in_context("\\x:nat. 2", 4));
  EXPECT_TRUE(recompose(Decomposition{}, t, 4).is_bottom());
  Decomposition tot;
  tot.kind = Decomposition::Kind::Total;
  tot.branches.emplace(0, in_context("\\x:nat. 1", 3));
  tot.branches.emplace(1, in_context("\\x:nat. 0", 3));
  EXPECT_EQ(recompose(tot, t, 3), ask_then({{0, 1}, {1, 0}}, 3));
}

TEST(Property, RoundTripAndTrichotomy) {
  for_all(400, 61, [&](Rng& rng, std::size_t) {
    Strategy f = random_compact(pick(kShapes, rng), 3, 6, rng);
    Decomposition d = decompose(f);
    Classification c = classify(f);
    // Exactly one case, and it matches the move-level reading.
    EXPECT_EQ(d.kind == Decomposition::Kind::Bot, f.is_bottom());
    EXPECT_EQ(d.kind == Decomposition::Kind::Const, c.constant);
    EXPECT_EQ(d.kind == Decomposition::Kind::Total, c.total);
    EXPECT_LE(d.branches.size(), f.norm());
    EXPECT_EQ(recompose(d, f.type(), 3), f) << f.serialize();
    if (d.kind == Decomposition::Kind::Total) {
      EXPECT_LT(d.head, f.domain_arity());
      EXPECT_EQ(d.args.size(), f.type().arguments()[d.head].arity());
      for (const auto& [x, h] : d.branches) {
        EXPECT_LT(x, 3u);
        EXPECT_FALSE(h.is_bottom());
      }
    }
  });
}

// A well-shaped canonical form built from random components.
Decomposition random_decomposition(const Type& t, Rng& rng) {
  const auto ctx = t.arguments();
  Decomposition d;
  d.kind = Decomposition::Kind::Total;
  d.head = std::uniform_int_distribution<std::size_t>(0, ctx.size() - 1)(rng);
  for (const auto& b : ctx[d.head].arguments())
    d.args.push_back(random_compact(Type::curried(ctx, b), 3, 3, rng).with_domain_arity(ctx.size()));
  for (std::uint32_t x = 0; x < 3; ++x) {
    if (rng() % 2) continue;
    Strategy h = random_compact(t, 3, 3, rng);
    if (!h.is_bottom()) d.branches.emplace(x, h);
  }
  return d;
}

TEST(Property, DecomposeAfterRecompose) {
  for_all(200, 62, [&](Rng& rng, std::size_t) {
    Type t = pick(kShapes, rng);
    Decomposition d = random_decomposition(t, rng);
    Strategy f = recompose(d, t, 3);
    EXPECT_FALSE(check_wellformed(f));
    EXPECT_TRUE(decompose(f) == d) << f.serialize();
  });
}

TEST(Axioms, SpecialCases) {
  // case[1] x 7 needs an answer 7 in the window.
  Strategy f = in_context("\\x:nat. case[1] x 7", 8);
  auto c = classify(f);
  EXPECT_TRUE(c.strict);
  EXPECT_TRUE(c.total);
  Strategy g = in_context("\\f:nat->nat. f 0", 3);
  EXPECT_EQ(compose(promote(g), dereliction(Type::nat(), 3)), g);
}

TEST(Axioms, SuitesPass) {
  for (Axiom a : {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5}) {
    CheckReport r = check_axiom(a, 60, 5, CheckBounds{3, 5});
    EXPECT_GT(r.cases, 60u) << axiom_name(a);
    EXPECT_TRUE(r.passed()) << axiom_name(a) << ": " << (r.failures.empty() ? "" : r.failures[0].witness);
  }
}

TEST(Axioms, ReportsAreReplayable) {
  std::vector<std::string> first, second;
  check_axiom(Axiom::A4, 20, 9, {}, [&](const CheckFailure& c, bool) { first.push_back(c.inputs); });
  check_axiom(Axiom::A4, 20, 9, {}, [&](const CheckFailure& c, bool) { second.push_back(c.inputs); });
  EXPECT_EQ(first, second);
  EXPECT_EQ(parse_axiom("A5"), Axiom::A5);
  EXPECT_THROW(parse_axiom("A6"), Error);
}

TEST(Axioms, CatchesABrokenMerge) {
  // A4 round trip must notice when the two copies are confused.
  Strategy f = in_context("\\x:nat. \\y:nat. case[2] x (case[2] x y 1) 0", 3);
  Strategy h = split_head(f);
  EXPECT_EQ(merge_head(h, 2), f);
  EXPECT_TRUE(head_linear(h, 2));
  EXPECT_NE(h, f.with_domain_arity(2));
}

TEST(Linear, SplitJoin) {
  // fi : (nat -o nat) -o (!nat -o nat) calling its linear argument on the
  // context, then returning the answer.
  Strategy fi = den("\\g:nat->nat. \\c:nat. g c", 3).with_domain_arity(1);
  auto p = split_linear(fi);
  ASSERT_TRUE(p);
  ASSERT_EQ(p->args.size(), 1u);
  EXPECT_EQ(join_linear(*p, parse_type("nat->nat"), {Type::nat()}, 3).with_domain_arity(1), fi);
  EXPECT_FALSE(split_linear(den("\\g:nat->nat. \\c:nat. c", 3).with_domain_arity(1)));
}

}  // namespace
}  // namespace pcf
