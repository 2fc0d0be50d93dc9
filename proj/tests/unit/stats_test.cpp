#include "iru/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"

namespace iru {
namespace {

std::vector<Transcript> load_corpus() {
  std::vector<Transcript> out;
  for (const auto& p : list_transcripts(testing::fixture_path("corpus"))) out.push_back(load_transcript(p));
  return out;
}

// Counted by hand from the templates that generated the corpus
// (tests/fixtures/make_corpus.py), three topics per template.
CorpusStats hand_counted() {
  CorpusStats s;
  s.total_dialogues = 24;
  s.total_turns = 78;
  s.total_irus = 27;
  s.irus_with_antecedents = 24;
  s.remote = 3;
  s.multi_antecedent = 6;
  s.self_antecedent = 3;
  s.other_antecedent = 21;
  s.rising_count = 3;
  s.affirmation_followed_count = 6;
  return s;
}

TEST(CorpusStats, SyntheticCorpusMatchesTheHandCount) {
  auto corpus = load_corpus();
  ASSERT_EQ(corpus.size(), 24u);
  EXPECT_EQ(corpus_stats(corpus), hand_counted());
}

TEST(CorpusStats, ShufflingLeavesTheTableByteIdentical) {
  auto corpus = load_corpus();
  auto reference = render_stats(corpus_stats(corpus));
  testing::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(corpus.begin(), corpus.end(), rng);
    EXPECT_EQ(render_stats(corpus_stats(corpus)), reference);
  }
}

TEST(CorpusStats, FractionsPartitionTheIrusWithAntecedents) {
  auto s = corpus_stats(load_corpus());
  EXPECT_DOUBLE_EQ(*s.self_antecedent_fraction() + *s.other_antecedent_fraction(), 1.0);
  EXPECT_EQ(s.remote + (s.irus_with_antecedents - s.remote), s.irus_with_antecedents);
  for (auto f : {s.remote_fraction(), s.multi_antecedent_fraction(), s.self_antecedent_fraction()}) {
    ASSERT_TRUE(f);
    EXPECT_GE(*f, 0.0);
    EXPECT_LE(*f, 1.0);
  }
  EXPECT_DOUBLE_EQ(*s.remote_fraction(), 3.0 / 24.0);
}

TEST(CorpusStats, RemoteGapIsConfigurable) {
  auto corpus = load_corpus();
  StatsOptions tight;
  tight.remote_gap = 0;
  EXPECT_EQ(corpus_stats(corpus, tight).remote, 24u);
  StatsOptions loose;
  loose.remote_gap = 3;
  EXPECT_EQ(corpus_stats(corpus, loose).remote, 0u);
}

TEST(CorpusStats, DialogueWithoutIrusRendersNotApplicable) {
  auto t = parse_transcript(
      "dialogue: quiet\nparticipants: a, b\nrequire-acceptance: false\n\n"
      "id: u1\nturn: 0\nspeaker: a\naddressee: b\ntext: hello\nact: other\n\n"
      "id: u2\nturn: 1\nspeaker: b\naddressee: a\ntext: the weather is fine\nrealizes: fine\n");
  auto s = corpus_stats({t});
  EXPECT_EQ(s.total_irus, 0u);
  EXPECT_EQ(s.total_turns, 2u);
  EXPECT_FALSE(s.remote_fraction());
  auto table = render_stats(s);
  EXPECT_NE(table.find("remote_fraction             n/a\n"), std::string::npos) << table;
  EXPECT_NE(table.find("irus                        0\n"), std::string::npos) << table;
}

TEST(CorpusStats, EmptyCorpus) {
  auto s = corpus_stats({});
  EXPECT_EQ(s, CorpusStats{});
  EXPECT_FALSE(s.self_antecedent_fraction());
}

TEST(RenderStats, TextRowsAndFootnote) {
  auto table = render_stats(hand_counted());
  EXPECT_NE(table.find("dialogues                   24\n"), std::string::npos) << table;
  EXPECT_NE(table.find("multi_antecedent_fraction   0.2500 (6/24)\n"), std::string::npos) << table;
  EXPECT_NE(table.find("171 IRUs"), std::string::npos);
}

TEST(RenderStats, Tabular) {
  auto table = render_stats(hand_counted(), TableFormat::kTabular);
  EXPECT_NE(table.find("remote_fraction\t0.1250 (3/24)\n"), std::string::npos) << table;
  EXPECT_EQ(table.find("171"), std::string::npos);
}

TEST(ListTranscripts, SortedDlgFilesOnly) {
  auto files = list_transcripts(testing::fixture_path(""));
  ASSERT_FALSE(files.empty());
  EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
  for (const auto& f : files) EXPECT_EQ(f.extension(), ".dlg");
}

}  // namespace
}  // namespace iru
