#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "alba/classify.hpp"
#include "alba/engine.hpp"
#include "generators.hpp"

namespace alba {
namespace {

std::map<std::string, std::vector<Polarity>> by_name(const std::vector<Occurrence>& occs) {
  std::map<std::string, std::vector<Polarity>> out;
  for (const auto& o : occs) out[o.name].push_back(o.polarity);
  return out;
}

TEST(PolarityMap, FootnoteExample) {
  const auto occs = polarity_map(parse_formula("(p -> q) -> r"));
  ASSERT_EQ(occs.size(), 3u);
  EXPECT_EQ(occs[0].name, "p");
  EXPECT_EQ(occs[0].polarity, Polarity::Positive);
  EXPECT_EQ(occs[0].path, (Path{0, 0}));
  EXPECT_EQ(occs[1].name, "q");
  EXPECT_EQ(occs[1].polarity, Polarity::Negative);
  EXPECT_EQ(occs[2].name, "r");
  EXPECT_EQ(occs[2].polarity, Polarity::Positive);
}

TEST(PolarityMap, SingleVariableAndBox) {
  const auto single = polarity_map(parse_formula("p"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].polarity, Polarity::Positive);

  const auto boxed = by_name(polarity_map(parse_formula("box(q -> p)")));
  EXPECT_EQ(boxed.at("q"), std::vector{Polarity::Negative});
  EXPECT_EQ(boxed.at("p"), std::vector{Polarity::Positive});
}

TEST(PolarityMap, InequalityFlipsLeftSide) {
  const auto occs = by_name(polarity_map(parse_inequality("box p <= p")));
  EXPECT_EQ(occs.at("p"), (std::vector{Polarity::Negative, Polarity::Positive}));
}

TEST(IsPos, Examples) {
  EXPECT_TRUE(is_pos(parse_formula("box q /\\ T"), {"q"}));
  EXPECT_FALSE(is_pos(parse_formula("q -> q"), {"q"}));
  EXPECT_FALSE(is_pos(parse_formula("box(q \\/ r)"), {"q"}));
  EXPECT_TRUE(is_pos(parse_formula("box(q \\/ r)")));
  EXPECT_TRUE(is_pos(parse_formula("T"), {}));
}

TEST(ParsePia, Examples) {
  EXPECT_EQ(parse_pia(parse_formula("box p"), "p"), ConstraintSet{});
  EXPECT_EQ(parse_pia(parse_formula("q -> box p"), "p"), (ConstraintSet{{"q", "p"}}));
  EXPECT_EQ(parse_pia(parse_formula("p -> p"), "p"), std::nullopt);
}

TEST(ParsePia, MoreShapes) {
  EXPECT_EQ(parse_pia(parse_formula("box(q /\\ box r -> box p)"), "p"),
            (ConstraintSet{{"q", "p"}, {"r", "p"}}));
  EXPECT_EQ(parse_pia(parse_formula("T"), "p"), ConstraintSet{});
  EXPECT_EQ(parse_pia(parse_formula("box q"), "p"), std::nullopt);
  EXPECT_EQ(parse_pia(parse_formula("(q -> q) -> p"), "p"), std::nullopt);
  EXPECT_EQ(parse_pia(parse_formula("p /\\ p"), "p"), std::nullopt);
}

TEST(Omega, CycleDetection) {
  OmegaOrder o;
  o.add("p", "q");
  o.add("q", "r");
  EXPECT_TRUE(o.acyclic());
  EXPECT_TRUE(o.less("p", "r"));
  EXPECT_FALSE(o.less("r", "p"));
  EXPECT_EQ(o.below("r"), (std::set<std::string>{"p", "q"}));
  o.add("r", "p");
  const auto cycle = o.find_cycle();
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->front(), cycle->back());
  EXPECT_EQ(cycle->size(), 4u);
}

TEST(CheckInductive, WorkedExample) {
  const auto c = check_inductive(parse_inequality("T <= box(box p -> p)"));
  ASSERT_TRUE(c.inductive()) << c.error->message;
  EXPECT_TRUE(c.certificate->omega.edges().empty());
  ASSERT_EQ(c.certificate->ant_blocks.size(), 1u);
  EXPECT_FALSE(c.certificate->ant_blocks[0].main.has_value());
  ASSERT_EQ(c.certificate->suc_blocks.size(), 1u);
  EXPECT_EQ(c.certificate->suc_blocks[0].main, "p");
  EXPECT_EQ(c.certificate->suc_blocks[0].path, (Path{0, 0}));
  EXPECT_EQ(c.certificate->suc_blocks[0].formula, parse_formula("box p"));
}

TEST(CheckInductive, Transitivity) {
  const auto c = check_inductive(parse_inequality("box p <= box box p"));
  ASSERT_TRUE(c.inductive());
  ASSERT_EQ(c.certificate->ant_blocks.size(), 1u);
  EXPECT_EQ(c.certificate->ant_blocks[0].main, "p");
  EXPECT_TRUE(c.certificate->suc_blocks.empty());
}

TEST(CheckInductive, RejectsDisjunctionBelowConjunction) {
  const auto c = check_inductive(parse_inequality("p \\/ q <= p /\\ q"));
  ASSERT_FALSE(c.inductive());
  EXPECT_EQ(c.error->kind, ClassifyFailure::Polarity);
  EXPECT_NE(c.error->message.find("variable p"), std::string::npos) << c.error->message;
}

TEST(CheckInductive, AcceptsCommutedConjunction) {
  const auto c = check_inductive(parse_inequality("p /\\ q <= q /\\ p"));
  ASSERT_TRUE(c.inductive()) << c.error->message;
  EXPECT_EQ(c.certificate->ant_blocks.size(), 2u);
}

TEST(CheckInductive, CollectsDependenceConstraints) {
  const auto c = check_inductive(parse_inequality("(q -> box p) /\\ q <= box p"));
  ASSERT_TRUE(c.inductive()) << c.error->message;
  EXPECT_EQ(c.certificate->omega.edges(), (ConstraintSet{{"q", "p"}}));
}

TEST(CheckInductive, FailureKinds) {
  const auto kind_of = [](const char* text) {
    const auto c = check_inductive(parse_inequality(text));
    EXPECT_FALSE(c.inductive()) << text;
    return c.error ? c.error->kind : ClassifyFailure::Polarity;
  };
  EXPECT_EQ(kind_of("bdiam i0 <= m0"), ClassifyFailure::NotBaseLanguage);
  EXPECT_EQ(kind_of("(p -> q) -> p <= p"), ClassifyFailure::NotAntecedent);
  EXPECT_EQ(kind_of("p <= ((p -> q) -> q) -> p"), ClassifyFailure::NotSuccedent);
  EXPECT_EQ(kind_of("(q -> p) /\\ (p -> q) <= p /\\ q"), ClassifyFailure::CyclicOrder);
  EXPECT_EQ(kind_of("p -> p <= p"), ClassifyFailure::CyclicOrder);
  EXPECT_EQ(kind_of("p <= q"), ClassifyFailure::Polarity);
  EXPECT_EQ(kind_of("T <= p"), ClassifyFailure::Polarity);
}

TEST(CheckInductive, CorpusIsInductive) {
  for (const auto& text : testing::inductive_corpus()) {
    const auto c = check_inductive(parse_inequality(text));
    EXPECT_TRUE(c.inductive()) << text << ": " << (c.error ? c.error->message : "");
  }
}

TEST(ReplayCertificate, RejectsTamperedCertificates) {
  const Inequality q = parse_inequality("(q -> box p) /\\ q <= box p");
  auto c = check_inductive(q);
  ASSERT_TRUE(c.inductive());
  EXPECT_TRUE(replay_certificate(q, *c.certificate));

  auto no_order = *c.certificate;
  no_order.omega = OmegaOrder{};
  EXPECT_FALSE(replay_certificate(q, no_order));

  auto wrong_main = *c.certificate;
  wrong_main.ant_blocks[0].main = "q";
  EXPECT_FALSE(replay_certificate(q, wrong_main));

  auto missing = *c.certificate;
  missing.ant_blocks.pop_back();
  EXPECT_FALSE(replay_certificate(q, missing));
}

TEST(ResidualShapes, MatchPreprocessingUpToPolarity) {
  auto rng = testing::make_rng(10);
  for (int k = 0; k < 200; ++k) {
    const Inequality q = testing::random_inductive(rng).inequality;
    const auto shapes = residual_shapes(q);
    const auto residuals = preprocess(q);
    ASSERT_EQ(shapes.size(), residuals.size()) << to_string(q);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      auto a = polarity_map(shapes[i]);
      auto b = polarity_map(residuals[i]);
      const auto key = [](std::vector<Occurrence>& v) {
        std::vector<std::pair<std::string, Polarity>> out;
        for (const auto& o : v) out.emplace_back(o.name, o.polarity);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      };
      ASSERT_EQ(key(a), key(b)) << to_string(q) << " residual " << i;
    }
  }
}

// Property: every generated inductive inequality is recognized, its
// certificate replays, its order is acyclic, and the polarity map covers
// every occurrence.
TEST(Property, GeneratorAndRecognizerAgree) {
  auto rng = testing::make_rng(11);
  for (int k = 0; k < 500; ++k) {
    const auto sample = testing::random_inductive(rng);
    const Inequality& q = sample.inequality;
    const auto c = check_inductive(q);
    ASSERT_TRUE(c.inductive()) << to_string(q) << ": " << c.error->message;
    ASSERT_TRUE(replay_certificate(q, *c.certificate)) << to_string(q);
    ASSERT_TRUE(c.certificate->omega.acyclic());
    // The discovered order only contains constraints the generator's order
    // also imposes.
    for (const auto& e : c.certificate->omega.edges()) {
      ASSERT_TRUE(sample.omega.less(e.lower, e.upper)) << to_string(q);
    }
  }
}

TEST(Property, PolarityMapIsTotal) {
  auto rng = testing::make_rng(12);
  for (int k = 0; k < 300; ++k) {
    const Formula f = testing::random_formula(rng, 6);
    std::multiset<std::string> expected;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
      if (g.is(Kind::Prop)) expected.insert(g.name());
      for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
    };
    walk(f);
    std::multiset<std::string> got;
    for (const auto& o : polarity_map(f)) got.insert(o.name);
    ASSERT_EQ(got, expected) << to_string(f);
  }
}

}  // namespace
}  // namespace alba
