#include <gtest/gtest.h>

#include "alba/syntax.hpp"
#include "generators.hpp"

namespace alba {
namespace {

Formula p() { return Formula::prop("p"); }
Formula q() { return Formula::prop("q"); }

TEST(Parse, WorkedExampleInput) {
  const Inequality got = parse_inequality("T <= box(box p -> p)");
  const Inequality want{Formula::top(), Formula::box(Formula::imp(Formula::box(p()), p()))};
  EXPECT_EQ(got, want);
}

TEST(Parse, Identity) {
  EXPECT_EQ(parse_inequality("p <= p"), (Inequality{p(), p()}));
}

TEST(Parse, ExpandedSymbols) {
  const Inequality got = parse_inequality("bdiam i0 <= m2");
  EXPECT_EQ(got, (Inequality{Formula::bdiam(Formula::nom("i0")), Formula::conom("m2")}));
}

TEST(Parse, Precedence) {
  // box binds tighter than /\, which binds tighter than \/, then ->.
  const Formula f = parse_formula("box p /\\ q \\/ p -> q -> p");
  const Formula want = Formula::imp(
      Formula::disj(Formula::conj(Formula::box(p()), q()), p()), Formula::imp(q(), p()));
  EXPECT_EQ(f, want);
}

TEST(Parse, ConjunctionIsLeftAssociative) {
  EXPECT_EQ(parse_formula("p /\\ q /\\ p"), Formula::conj(Formula::conj(p(), q()), p()));
  EXPECT_EQ(parse_formula("p \\/ q \\/ p"), Formula::disj(Formula::disj(p(), q()), p()));
}

TEST(Parse, BottomAndNames) {
  EXPECT_EQ(parse_formula("F"), Formula::bot());
  EXPECT_EQ(parse_formula("p12"), Formula::prop("p12"));
  EXPECT_EQ(parse_formula("i10"), Formula::nom("i10"));
  EXPECT_EQ(parse_formula("m3"), Formula::conom("m3"));
  // Bare "i" and "m" are ordinary propositional variables.
  EXPECT_EQ(parse_formula("i"), Formula::prop("i"));
  EXPECT_EQ(parse_formula("mx"), Formula::prop("mx"));
}

TEST(Parse, ErrorsCarryPositionAndExpectedTokens) {
  try {
    parse_inequality("p <= (q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
    EXPECT_EQ(e.found(), "end of input");
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "')'"), e.expected().end());
  }
  try {
    parse_inequality("p q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_NE(std::find(e.expected().begin(), e.expected().end(), "'<='"), e.expected().end());
  }
  EXPECT_THROW(parse_inequality("p <= $"), ParseError);
  EXPECT_THROW(parse_inequality("p"), ParseError);
  EXPECT_THROW(parse_inequality("box <= p"), ParseError);
  EXPECT_THROW(parse_inequality("P <= p"), ParseError);
  EXPECT_THROW(parse_inequality("p <= p <= p"), ParseError);
}

TEST(Print, Examples) {
  EXPECT_EQ(to_string(Formula::box(Formula::imp(Formula::box(p()), p()))), "box(box p -> p)");
  EXPECT_EQ(to_string(Formula::top()), "T");
  EXPECT_EQ(to_string(Formula::imp(Formula::imp(p(), q()), Formula::prop("r"))),
            "(p -> q) -> r");
  EXPECT_EQ(to_string(Formula::imp(p(), Formula::imp(q(), p()))), "p -> q -> p");
  EXPECT_EQ(to_string(Formula::conj(p(), Formula::conj(q(), p()))), "p /\\ (q /\\ p)");
  EXPECT_EQ(to_string(Formula::bdiam(Formula::bdiam(Formula::nom("i1")))), "bdiam bdiam i1");
  EXPECT_EQ(to_string(Formula::box(Formula::conj(p(), q()))), "box(p /\\ q)");
}

TEST(Print, QuasiInequality) {
  const QuasiInequality q{{parse_inequality("box m1 <= m0"), parse_inequality("bdiam i1 <= m2")},
                          parse_inequality("i0 <= m0")};
  EXPECT_EQ(to_string(q), "box m1 <= m0 & bdiam i1 <= m2 => i0 <= m0");
  EXPECT_EQ(to_string(QuasiInequality{{}, parse_inequality("i0 <= m0")}), "=> i0 <= m0");
}

TEST(Substitute, Examples) {
  const Formula i = Formula::nom("i");
  EXPECT_EQ(substitute(Formula::imp(Formula::box(p()), p()), "p", i),
            Formula::imp(Formula::box(i), i));
  EXPECT_EQ(substitute(q(), "p", Formula::top()), q());
  const Formula d = Formula::bdiam(Formula::nom("i0"));
  EXPECT_EQ(substitute(Formula::disj(p(), Formula::conj(p(), q())), "p", d),
            Formula::disj(d, Formula::conj(d, q())));
}

TEST(Fresh, Examples) {
  SymbolPool pool;
  pool.add(SymbolKind::Nominal, "i0");
  EXPECT_EQ(pool.fresh(SymbolKind::Nominal), "i1");

  SymbolPool empty;
  EXPECT_EQ(empty.fresh(SymbolKind::Conominal), "m0");

  SymbolPool three;
  for (const char* m : {"m0", "m1", "m2"}) three.add(SymbolKind::Conominal, m);
  EXPECT_EQ(three.fresh(SymbolKind::Conominal), "m3");
  EXPECT_TRUE(three.contains(SymbolKind::Conominal, "m3"));
}

TEST(Fresh, FillsGapsAndSeparatesKinds) {
  SymbolPool pool;
  pool.add(SymbolKind::Nominal, "i1");
  pool.add(SymbolKind::Conominal, "m0");
  EXPECT_EQ(pool.fresh(SymbolKind::Nominal), "i0");
  EXPECT_EQ(pool.fresh(SymbolKind::Nominal), "i2");
  EXPECT_EQ(pool.fresh(SymbolKind::Conominal), "m1");
  EXPECT_EQ(pool.fresh(SymbolKind::Prop), "p0");
}

TEST(NaturalOrder, NumericSuffixes) {
  EXPECT_TRUE(natural_less("i2", "i10"));
  EXPECT_TRUE(natural_less("i10", "m0"));
  EXPECT_FALSE(natural_less("m1", "m1"));
  EXPECT_TRUE(natural_less("x", "x1"));
}

TEST(Depth, CountsConnectives) {
  EXPECT_EQ(depth(p()), 0u);
  EXPECT_EQ(depth(parse_formula("box(box p -> p)")), 3u);
}

// Property: parse(print(phi)) = phi on random expanded formulas.
TEST(Property, RoundTrip) {
  auto rng = testing::make_rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Formula f = testing::random_formula(rng, 8);
    const std::string text = to_string(f);
    ASSERT_EQ(parse_formula(text), f) << text;
    const Inequality q{f, testing::random_formula(rng, 3)};
    ASSERT_EQ(parse_inequality(to_string(q)), q) << to_string(q);
  }
}

TEST(Property, SubstitutingAVariableForItselfIsIdentity) {
  auto rng = testing::make_rng(2);
  for (int k = 0; k < 500; ++k) {
    const Formula f = testing::random_formula(rng, 6);
    for (const char* v : {"p", "q", "r"}) ASSERT_EQ(substitute(f, v, Formula::prop(v)), f);
  }
}

TEST(Property, PurityMeansNoPropositionalVariables) {
  auto rng = testing::make_rng(3);
  for (int k = 0; k < 500; ++k) {
    const Formula f = testing::random_formula(rng, 5);
    ASSERT_EQ(is_pure(f), props(f).empty()) << to_string(f);
  }
}

TEST(Property, HashAgreesWithEquality) {
  auto rng = testing::make_rng(4);
  for (int k = 0; k < 200; ++k) {
    const Formula f = testing::random_formula(rng, 6);
    const Formula g = parse_formula(to_string(f));
    ASSERT_EQ(f.hash(), g.hash());
    ASSERT_EQ(f.size(), g.size());
  }
}

}  // namespace
}  // namespace alba
