#include "iru/context.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"

namespace iru {
namespace {

using S = Strength;

Proposition P(const char* text) { return parse_proposition(text); }
UtteranceId U(const char* id) { return UtteranceId(id); }

TEST(AssertProp, InsertIntoEmptyContext) {
  Context ctx;
  auto out = ctx.assert_prop(P("!eligible81"), S::kLinguistic, U("u17"));
  ASSERT_TRUE(out.entry);
  ASSERT_EQ(ctx.entries().size(), 1u);
  EXPECT_EQ(ctx.entries()[0].strength, S::kLinguistic);
  EXPECT_EQ(ctx.entries()[0].sources, std::vector<UtteranceId>{U("u17")});
}

TEST(AssertProp, ReassertingWeakerKeepsStrength) {
  Context ctx;
  ctx.assert_prop(P("p"), S::kLinguistic, U("u1"));
  auto out = ctx.assert_prop(P("p"), S::kDefault, U("u2"));
  EXPECT_EQ(ctx.entries().size(), 1u);
  EXPECT_EQ(ctx.entry(*out.entry).strength, S::kLinguistic);
}

TEST(AssertProp, ReassertingStrongerRaises) {
  Context ctx;
  ctx.assert_prop(P("p"), S::kDefault, U("u1"));
  auto out = ctx.assert_prop(P("p"), S::kLinguistic, U("u2"));
  EXPECT_EQ(ctx.entry(*out.entry).strength, S::kLinguistic);
}

TEST(AssertProp, PensionIntoBiconditionalDerivesNegation) {
  Context ctx;
  ctx.assert_prop(P("buyIRA <-> !pension"), S::kLinguistic, U("u15"));
  EXPECT_NO_THROW(ctx.assert_prop(P("pension"), S::kLinguistic, U("u16")));
  auto lits = ctx.closure();
  EXPECT_TRUE(lits.count(Literal{"buyIRA", false}));
  auto oracle = testing::truth_table({P("buyIRA <-> !pension"), P("pension")});
  EXPECT_EQ(lits, oracle.entailed);
}

TEST(AssertProp, EqualOrStrongerContraryRefuses) {
  Context ctx;
  ctx.assert_prop(P("a"), S::kLinguistic, U("u1"));
  auto out = ctx.assert_prop(P("!a"), S::kLinguistic, U("u2"));
  EXPECT_FALSE(out.entry);
  ASSERT_TRUE(out.conflict);
  EXPECT_EQ(out.conflict->positive, (Literal{"a", true}));
}

TEST(AssertProp, StrongerContraryDefeatsWeaker) {
  Context ctx;
  ctx.assert_prop(P("a"), S::kDefault, U("u1"));
  auto out = ctx.assert_prop(P("!a"), S::kLinguistic, U("u2"));
  ASSERT_TRUE(out.entry);
  ASSERT_EQ(out.defeated.size(), 1u);
  EXPECT_TRUE(ctx.entry(out.defeated[0]).defeated);
}

TEST(Closure, EmptyContext) {
  Context ctx;
  EXPECT_TRUE(ctx.closure().empty());
}

TEST(Closure, DerivedStrengthIsWeakestPremiseCappedAtInference) {
  Context ctx;
  ctx.assert_prop(P("a -> b"), S::kLinguistic, U("u1"));
  ctx.assert_prop(P("a"), S::kLinguistic, U("u2"));
  ctx.assert_prop(P("c -> d"), S::kLinguistic, U("u3"));
  ctx.assert_prop(P("c"), S::kDefault, U("u4"));
  ctx.closure();
  EXPECT_EQ(ctx.entry(*ctx.find_live(P("b"))).strength, S::kInference);
  EXPECT_EQ(ctx.entry(*ctx.find_live(P("d"))).strength, S::kDefault);
}

TEST(Closure, ConflictLeavesContextUnchanged) {
  Context ctx;
  ctx.assert_prop(P("a -> b"), S::kLinguistic, U("u1"));
  ctx.assert_prop(P("a -> !b"), S::kLinguistic, U("u2"));
  ctx.assert_prop(P("a"), S::kLinguistic, U("u3"));
  auto before = ctx.entries().size();
  try {
    ctx.closure();
    FAIL() << "expected a conflict";
  } catch (const ConflictDetected& c) {
    // b clashes directly; the contrapositive b -> !a then clashes with a.
    std::set<std::string> atoms;
    for (const auto& clash : c.clashes()) atoms.insert(clash.positive.atom);
    EXPECT_EQ(atoms, (std::set<std::string>{"a", "b"}));
  }
  EXPECT_EQ(ctx.entries().size(), before);
}

TEST(Closure, RefutationReachesWhatForwardChainingMisses) {
  // !a -> b and b -> a entail a, though no premise fires forward.
  Context ctx;
  ctx.assert_prop(P("!a -> b"), S::kLinguistic, U("u1"));
  ctx.assert_prop(P("b -> a"), S::kLinguistic, U("u2"));
  auto lits = ctx.closure();
  EXPECT_TRUE(lits.count(Literal{"a", true}));
}

TEST(Closure, DefeatedPremiseRetractsDerivation) {
  Context ctx;
  ctx.assert_prop(P("a -> b"), S::kLinguistic, U("u1"));
  auto a = *ctx.assert_prop(P("a"), S::kDefault, U("u2")).entry;
  ctx.closure();
  auto b = *ctx.find_live(P("b"));
  auto gone = ctx.mark_defeated(a);
  EXPECT_NE(std::find(gone.begin(), gone.end(), b), gone.end());
  EXPECT_FALSE(ctx.closure().count(Literal{"b", true}));
}

TEST(IsRedundant, EntailedByBiconditionalAndPension) {
  Context ctx;
  ctx.assert_prop(P("eligible81 <-> !pension"), S::kLinguistic, U("u15"));
  ctx.assert_prop(P("pension"), S::kLinguistic, U("u16"));
  auto v = ctx.is_redundant(P("!eligible81"));
  EXPECT_EQ(v.kind, RedundancyVerdict::Kind::kEntailed);
  EXPECT_EQ(v.antecedents, (std::vector<UtteranceId>{U("u15"), U("u16")}));
}

TEST(IsRedundant, SaidBefore) {
  Context ctx;
  ctx.assert_prop(P("income_rules_out_dependent"), S::kLinguistic, U("u7"));
  auto v = ctx.is_redundant(P("income_rules_out_dependent"));
  EXPECT_EQ(v.kind, RedundancyVerdict::Kind::kSaid);
  EXPECT_EQ(v.antecedents, std::vector<UtteranceId>{U("u7")});
}

TEST(IsRedundant, FreshAtom) {
  Context ctx;
  EXPECT_EQ(ctx.is_redundant(P("fresh")).kind, RedundancyVerdict::Kind::kNotRedundant);
}

struct Built {
  Context ctx;
  std::vector<Proposition> live;
};

Built build(const std::vector<std::pair<Proposition, Strength>>& props) {
  Built b;
  int n = 0;
  for (const auto& [p, s] : props) b.ctx.assert_prop(p, s, UtteranceId("g" + std::to_string(n++)));
  for (const auto& e : b.ctx.entries()) {
    if (e.live() && e.asserted()) b.live.push_back(e.proposition);
  }
  return b;
}

void check_against_oracle(testing::Rng& rng, bool fragment) {
  for (int round = 0; round < 200; ++round) {
    auto built = build(testing::random_context(rng, fragment));
    auto oracle = testing::truth_table(built.live);
    std::set<Literal> lits;
    bool conflict = false;
    try {
      lits = built.ctx.closure();
    } catch (const ConflictDetected&) {
      conflict = true;
    }
    if (oracle.satisfiable) {
      ASSERT_FALSE(conflict) << "round " << round;
      for (const auto& l : lits) EXPECT_TRUE(oracle.entailed.count(l)) << "unsound " << to_string(l);
      if (fragment) EXPECT_EQ(lits, oracle.entailed) << "round " << round;
    } else if (fragment) {
      EXPECT_TRUE(conflict) << "round " << round;
    }
    if (conflict) continue;
    for (const auto& e : built.ctx.entries()) {
      if (!e.live() || e.asserted()) continue;
      EXPECT_LE(e.strength, Strength::kInference);
      std::vector<Strength> deps;
      for (auto d : e.dependencies) deps.push_back(built.ctx.entry(d).strength);
      ASSERT_FALSE(deps.empty());
      deps.push_back(Strength::kInference);
      EXPECT_EQ(e.strength, min_strength(deps));
    }
  }
}

TEST(ClosureOracle, SoundAndCompleteOnTheFragment) {
  testing::Rng rng(2024);
  check_against_oracle(rng, true);
}

TEST(ClosureOracle, SoundOnWideRules) {
  testing::Rng rng(77);
  check_against_oracle(rng, false);
}

TEST(AssertProp, RandomReassertionNeverLowersStrength) {
  testing::Rng rng(9);
  for (int round = 0; round < 300; ++round) {
    Context ctx;
    for (int i = 0; i < 10; ++i) {
      Proposition p = testing::random_literal(rng, 3);
      auto s = testing::random_strength(rng, Strength::kHypothesis, Strength::kLinguistic);
      std::optional<Strength> before;
      if (auto id = ctx.find_live(p)) before = ctx.entry(*id).strength;
      auto out = ctx.assert_prop(p, s, UtteranceId("u" + std::to_string(i)));
      if (!before) continue;
      ASSERT_TRUE(out.entry);
      EXPECT_EQ(ctx.entry(*out.entry).strength, std::max(*before, s));
    }
  }
}

}  // namespace
}  // namespace iru
