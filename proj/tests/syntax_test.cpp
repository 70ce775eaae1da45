#include "support.hpp"

namespace pcf {
namespace {

using test::for_all;

TEST(Parse, Literals) {
  Term z = parse_term("0");
  EXPECT_EQ(z.kind(), Term::Kind::Num);
  EXPECT_EQ(z.value(), 0u);

  Term m = parse_term("\\x:nat. case[2] x 1 0");
  ASSERT_EQ(m.kind(), Term::Kind::Lam);
  EXPECT_EQ(m.name(), "x");
  EXPECT_EQ(m.annotation(), Type::nat());
  auto [h, args] = m.body().spine();
  EXPECT_EQ(h.kind(), Term::Kind::Case);
  EXPECT_EQ(h.branches(), 2u);
  ASSERT_EQ(args.size(), 3u);
  EXPECT_EQ(args[0].kind(), Term::Kind::Var);
  EXPECT_EQ(args[1].value(), 1u);
  EXPECT_EQ(args[2].value(), 0u);

  Term y = parse_term("Y[nat] (\\x:nat. x)");
  ASSERT_EQ(y.kind(), Term::Kind::App);
  EXPECT_EQ(y.fn().kind(), Term::Kind::Fix);
  EXPECT_EQ(y.fn().annotation(), Type::nat());
  EXPECT_EQ(y.arg().kind(), Term::Kind::Lam);
}

TEST(Parse, TypesBothArrowSpellings) {
  EXPECT_EQ(parse_type("(i->i)->i->i"), parse_type("(iota => iota) => iota => iota"));
  EXPECT_EQ(parse_type("nat->nat->nat").arity(), 2u);
  EXPECT_EQ(parse_type("(nat->nat)->nat").arguments()[0], parse_type("nat->nat"));
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  try {
    parse_term("\\x:nat. (x");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(parse_term("case[2] 1 )"), SyntaxError);
  EXPECT_THROW(parse_type("nat ->"), SyntaxError);
}

TEST(Typecheck, Constants) {
  EXPECT_EQ(typecheck(Term::case_of(2)), parse_type("nat->nat->nat->nat"));
  EXPECT_EQ(typecheck(Term::fix(Type::nat())), parse_type("(nat->nat)->nat"));
  EXPECT_EQ(typecheck(parse_term("omega")), Type::nat());
}

TEST(Typecheck, Errors) {
  TypingContext ctx{{"x", Type::nat()}};
  EXPECT_THROW(typecheck(ctx, parse_term("x x")), TypeError);
  EXPECT_THROW(typecheck(parse_term("y")), TypeError);
  EXPECT_EQ(typecheck(parse_term("case[2] 0 1")), parse_type("nat->nat"));
  EXPECT_THROW(typecheck(parse_term("case[1] 0 1 2")), TypeError);
  EXPECT_THROW(typecheck(parse_term("(\\f:nat->nat. f 0) 3")), TypeError);
}

TEST(Substitute, AvoidsCapture) {
  Term m = parse_term("\\y:nat. x");
  Term r = substitute(m, "x", Term::var("y"));
  ASSERT_EQ(r.kind(), Term::Kind::Lam);
  EXPECT_NE(r.name(), "y");
  EXPECT_EQ(r.body().name(), "y");
  EXPECT_TRUE(alpha_equal(substitute(parse_term("\\x:nat. x"), "x", Term::num(1)), parse_term("\\z:nat. z")));
}

TEST(Alpha, NamesDoNotMatterButStructureDoes) {
  EXPECT_TRUE(alpha_equal(parse_term("\\a:nat. \\b:nat. a"), parse_term("\\x:nat. \\y:nat. x")));
  EXPECT_FALSE(alpha_equal(parse_term("\\a:nat. \\b:nat. a"), parse_term("\\x:nat. \\y:nat. y")));
  EXPECT_FALSE(alpha_equal(parse_term("\\a:nat. a"), parse_term("\\a:nat->nat. a 0")));
}

TEST(StructEquiv, Examples) {
  EXPECT_EQ(struct_equiv(parse_term("(\\x:nat. x) 3"), parse_term("3"), 1), Congruence::Equivalent);
  Term m = parse_term("\\x:nat. case[1] x 0");
  Term ym = Term::app(Term::fix(Type::nat()), m);
  EXPECT_EQ(struct_equiv(ym, Term::app(m, ym), 1), Congruence::Equivalent);
  EXPECT_EQ(struct_equiv(parse_term("\\x:nat. omega"), parse_term("\\x:nat. 0"), 50), Congruence::NotShown);
}

TEST(Property, PrintParseRoundTrip) {
  TermGen g;
  g.fix = true;
  g.depth = 4;
  for_all(300, 11, [&](Rng& rng, std::size_t) {
    Type t = pick(std::vector<Type>{Type::nat(), parse_type("nat->nat"), parse_type("(nat->nat)->nat")}, rng);
    Term m = random_term({}, t, g, rng);
    Term back = parse_term(m.str());
    EXPECT_TRUE(alpha_equal(m, back)) << m.str();
    EXPECT_EQ(typecheck(back), t) << m.str();
  });
}

TEST(Property, SubstitutionPreservesTypes) {
  TermGen g;
  g.depth = 3;
  for_all(200, 12, [&](Rng& rng, std::size_t) {
    TypingContext ctx{{"x", Type::nat()}, {"f", parse_type("nat->nat")}};
    Term m = random_term(ctx, Type::nat(), g, rng);
    Term n = random_term({{"f", parse_type("nat->nat")}}, Type::nat(), g, rng);
    Term r = substitute(m, "x", n);
    EXPECT_EQ(typecheck({{"f", parse_type("nat->nat")}}, r), Type::nat()) << r.str();
    EXPECT_FALSE(occurs_free("x", r));
  });
}

TEST(Property, ReductionPreservesTypes) {
  TermGen g;
  g.fix = true;
  g.depth = 4;
  for_all(200, 13, [&](Rng& rng, std::size_t) {
    Term m = random_term({}, Type::nat(), g, rng);
    for (int i = 0; i < 10; ++i) {
      auto r = reduce_step(m);
      if (!r) break;
      EXPECT_EQ(typecheck(*r), Type::nat()) << m.str() << " ~> " << r->str();
      m = *r;
    }
  });
}

}  // namespace
}  // namespace pcf
