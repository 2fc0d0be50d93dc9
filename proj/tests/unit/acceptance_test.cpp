#include "iru/acceptance.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "iru/discourse_state.hpp"
#include "iru/engine.hpp"
#include "oracle.hpp"

namespace iru {
namespace {

using S = Strength;
using Kind = AcceptanceOutcome::Kind;

const UtteranceEvent& event_of(const Transcript& t, const char* id) {
  for (const auto& e : t.events) {
    if (e.id.str() == id) return e;
  }
  throw std::invalid_argument(id);
}

/// State with every event before `next` replayed and `next` registered.
DiscourseState state_at(const Transcript& t, const char* next) {
  Engine engine(t);
  for (const auto& e : t.events) {
    if (e.id.str() == next) break;
    engine.process(e);
  }
  DiscourseState st = engine.state();
  open_record(st, event_of(t, next));
  return st;
}

AcceptanceOutcome evaluate_at(const char* fixture, const char* prev, const char* next) {
  auto t = testing::load_fixture(fixture);
  auto st = state_at(t, next);
  return evaluate_acceptance(st, event_of(t, prev), event_of(t, next));
}

ConflictEvidence evidence(S strength) {
  ConflictEvidence c;
  c.event = UtteranceId("x");
  c.kind = ConflictKind::kContradictoryAssertion;
  c.strength = strength;
  return c;
}

TEST(EvaluateAcceptance, RisingEchoBlocks) {
  auto out = evaluate_at("example5.dlg", "u38", "u39");
  EXPECT_EQ(out.kind, Kind::kBlocked);
  EXPECT_TRUE(out.beliefs.empty());
  ASSERT_TRUE(out.conflict);
  EXPECT_EQ(out.conflict->kind, ConflictKind::kRisingIru);
}

TEST(EvaluateAcceptance, ContradictoryReplyIsRejection) {
  auto out = evaluate_at("example6.dlg", "u13", "u14");
  EXPECT_EQ(out.kind, Kind::kRejected);
  ASSERT_TRUE(out.conflict);
  EXPECT_EQ(out.conflict->kind, ConflictKind::kContradictoryAssertion);
}

TEST(EvaluateAcceptance, NeutralReplyInGoalMarkedDialogueIsDefault) {
  auto t = testing::load_fixture("default_acceptance.dlg");
  auto st = state_at(t, "u2");
  auto out = evaluate_acceptance(st, event_of(t, "u1"), event_of(t, "u2"));
  EXPECT_EQ(out.kind, Kind::kDefault);
  ASSERT_EQ(out.beliefs.size(), 1u);
  const auto& b = st.acceptances.at(out.beliefs[0]);
  EXPECT_EQ(b.strength, S::kDefault);
  EXPECT_EQ(b.agent, ParticipantId("c"));
  EXPECT_EQ(to_string(b.proposition), "roll_into_money_market");
}

TEST(EvaluateAcceptance, WithoutTheGoalFlagThereIsNoDefault) {
  auto t = testing::load_fixture("default_acceptance.dlg");
  t.require_acceptance = false;
  auto st = state_at(t, "u2");
  EXPECT_EQ(evaluate_acceptance(st, event_of(t, "u1"), event_of(t, "u2")).kind, Kind::kNone);
}

TEST(EvaluateAcceptance, AffirmationIsLinguisticAndBeatsDefault) {
  auto t = testing::load_fixture("default_acceptance.dlg");
  auto affirmed = t;
  affirmed.events[1].act.reset();
  affirmed.events[1].text = "absolutely";
  auto st = state_at(affirmed, "u2");
  auto out = evaluate_acceptance(st, event_of(affirmed, "u1"), event_of(affirmed, "u2"));
  EXPECT_EQ(out.kind, Kind::kLinguistic);
  EXPECT_EQ(st.acceptances.at(out.beliefs[0]).strength, S::kLinguistic);
  EXPECT_GT(S::kLinguistic, S::kDefault);
}

TEST(EvaluateAcceptance, ReplyFromTheSpeakerIsNotEvidence) {
  auto t = testing::load_fixture("default_acceptance.dlg");
  t.events[1].speaker = ParticipantId("h");
  t.events[1].addressee = ParticipantId("c");
  auto st = state_at(t, "u2");
  EXPECT_EQ(evaluate_acceptance(st, event_of(t, "u1"), event_of(t, "u2")).kind, Kind::kNotApplicable);
}

TEST(EvaluateAcceptance, OutOfOrderPair) {
  auto t = testing::load_fixture("default_acceptance.dlg");
  auto st = state_at(t, "u2");
  try {
    evaluate_acceptance(st, event_of(t, "u2"), event_of(t, "u1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderingViolation);
  }
}

TEST(DetectConflict, ExclusionRuleAgainstEarlierAssertion) {
  auto t = testing::load_fixture("example6.dlg");
  auto st = state_at(t, "u14");
  auto c = detect_conflict(st, event_of(t, "u14"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, ConflictKind::kContradictoryAssertion);
  ASSERT_TRUE(c->clash);
  EXPECT_EQ(c->clash->positive.atom, "ira_available_last_year");
}

TEST(DetectConflict, AnnotatedRejection) {
  auto t = testing::load_fixture("example5.dlg");
  auto st = state_at(t, "u41");
  auto c = detect_conflict(st, event_of(t, "u41"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, ConflictKind::kExplicitRejection);
  EXPECT_EQ(c->rejected, UtteranceId("u38"));
  EXPECT_EQ(c->rejected_content.size(), 1u);
}

TEST(DetectConflict, ConsistentAssertion) {
  auto t = testing::load_fixture("example3.dlg");
  auto st = state_at(t, "u16");
  EXPECT_FALSE(detect_conflict(st, event_of(t, "u16")));
}

/// Default acceptance a0 of `a` with entries for `b` and `c` resting on it.
DiscourseState acceptance_with_two_dependents() {
  DiscourseState st({ParticipantId("h"), ParticipantId("r")}, true);
  auto a = *st.context.assert_prop(parse_proposition("a"), S::kLinguistic, UtteranceId("u1")).entry;
  st.acceptances.push_back(AcceptanceBelief{0, UtteranceId("u1"), parse_proposition("a"),
                                            ParticipantId("r"), S::kDefault, {}, BeliefStatus::kLive});
  st.entry_dependencies[a];
  auto b = *st.context.assert_prop(parse_proposition("b"), S::kDefault, UtteranceId("u3")).entry;
  auto c = *st.context.assert_prop(parse_proposition("c"), S::kDefault, UtteranceId("u5")).entry;
  st.add_dependency(NodeRef::entry(b), NodeRef::acceptance(0));
  st.add_dependency(NodeRef::entry(c), NodeRef::acceptance(0));
  return st;
}

TEST(Defeat, DefaultAcceptanceWithTwoDependents) {
  auto st = acceptance_with_two_dependents();
  auto report = defeat(st, NodeRef::acceptance(0), evidence(S::kLinguistic));
  EXPECT_EQ(report.defeated.size(), 3u);
  EXPECT_EQ(report.defeated.front(), NodeRef::acceptance(0));
  EXPECT_EQ(std::set<NodeRef>(report.defeated.begin(), report.defeated.end()),
            testing::reachable_dependents(acceptance_with_two_dependents(), NodeRef::acceptance(0)));
  EXPECT_TRUE(testing::live_nodes_on_defeated(st).empty());
  EXPECT_EQ(st.strength_of(NodeRef::acceptance(0)), S::kDefault);
  EXPECT_TRUE(st.context.find_live(parse_proposition("a")).has_value());
}

TEST(Defeat, NoDependents) {
  auto st = acceptance_with_two_dependents();
  auto lone = *st.context.find_live(parse_proposition("a"));
  auto report = defeat(st, NodeRef::entry(lone), evidence(S::kPhysical));
  EXPECT_EQ(report.defeated, std::vector<NodeRef>{NodeRef::entry(lone)});
}

TEST(Defeat, EqualStrengthIsRejected) {
  auto st = acceptance_with_two_dependents();
  auto a = *st.context.find_live(parse_proposition("a"));
  try {
    defeat(st, NodeRef::entry(a), evidence(S::kLinguistic));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDefeatRejected);
  }
  EXPECT_TRUE(st.is_live(NodeRef::entry(a)));
}

TEST(Defeat, RequiresStrictlyStrongerEvidenceForEveryPair) {
  for (auto held : kAllStrengths) {
    for (auto by : kAllStrengths) {
      DiscourseState st({ParticipantId("h"), ParticipantId("r")}, false);
      auto id = *st.context.assert_prop(parse_proposition("p"), held, UtteranceId("u1")).entry;
      bool defeated = true;
      try {
        defeat(st, NodeRef::entry(id), evidence(by));
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDefeatRejected);
        defeated = false;
      }
      EXPECT_EQ(defeated, by > held) << to_string(by) << " vs " << to_string(held);
      EXPECT_EQ(st.is_live(NodeRef::entry(id)), !defeated);
      EXPECT_EQ(st.context.entry(id).strength, held);
    }
  }
}

TEST(Defeat, AlreadyDefeatedTarget) {
  auto st = acceptance_with_two_dependents();
  defeat(st, NodeRef::acceptance(0), evidence(S::kLinguistic));
  EXPECT_THROW(defeat(st, NodeRef::acceptance(0), evidence(S::kPhysical)), Error);
}

TEST(RecordSupport, StoredThenIdempotent) {
  auto t = testing::load_fixture("example4.dlg");
  Engine engine(t);
  testing::run_until(engine, t, "u10");
  DiscourseState st = engine.state();
  ASSERT_EQ(st.supports.size(), 1u);
  EXPECT_EQ(to_string(st.supports[0].belief), "getting_1500_yearly");
  EXPECT_EQ(to_string(st.supports[0].goal), "take_the_money");
  const auto& again = record_support(st, parse_proposition("getting_1500_yearly"),
                                     parse_proposition("take_the_money"));
  EXPECT_EQ(again.id, 0u);
  EXPECT_EQ(st.supports.size(), 1u);
}

TEST(RecordSupport, MissingGoal) {
  auto t = testing::load_fixture("example4.dlg");
  Engine engine(t);
  testing::run_until(engine, t, "u10");
  DiscourseState st = engine.state();
  try {
    record_support(st, parse_proposition("getting_1500_yearly"), parse_proposition("buy_a_boat"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownProposition);
  }
}

TEST(RecordSupport, DefeatingTheBeliefDefeatsTheLink) {
  auto t = testing::load_fixture("example4.dlg");
  Engine engine(t);
  testing::run_until(engine, t, "u10");
  DiscourseState st = engine.state();
  auto belief = *st.context.find_live(parse_proposition("getting_1500_yearly"));
  auto report = defeat(st, NodeRef::entry(belief), evidence(S::kPhysical));
  EXPECT_NE(std::find(report.defeated.begin(), report.defeated.end(), NodeRef::support(0)),
            report.defeated.end());
  EXPECT_EQ(st.supports[0].status, BeliefStatus::kDefeated);
}

// Over random dialogues: no default acceptance of the previous utterance
// when the reply carries conflict evidence or is a rising-intonation IRU,
// and no live node ever rests on a defeated one.
TEST(AcceptanceProperties, RandomDialogues) {
  testing::Rng rng(99);
  int defaults = 0, withheld_defaults = 0;
  for (int run = 0; run < 300; ++run) {
    auto t = testing::random_dialogue(rng, testing::uniform(rng, 2, 12));
    Engine engine(t);
    for (std::size_t i = 0; i < t.events.size(); ++i) {
      const auto& e = t.events[i];
      bool forbids = false;
      if (i > 0) {
        const auto& before = engine.state();
        forbids = detect_conflict(before, e).has_value() ||
                  (e.intonation == Intonation::kRising && classify_iru(e, before) != IruClass::kNone);
      }
      auto rec = engine.process(e);
      for (const auto& line : rec.acceptance) {
        if (i == 0 || line.about != t.events[i - 1].id || line.kind != Kind::kDefault) continue;
        ++defaults;
        EXPECT_FALSE(forbids) << "run " << run << " event " << e.id;
      }
      if (forbids) ++withheld_defaults;
      ASSERT_TRUE(testing::live_nodes_on_defeated(engine.state()).empty()) << "run " << run;
    }
  }
  EXPECT_GT(defaults, 0);
  EXPECT_GT(withheld_defaults, 0);
}

}  // namespace
}  // namespace iru
