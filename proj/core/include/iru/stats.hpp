#pragma once

// Distributional statistics over a corpus of annotated transcripts: how IRUs
// relate to their antecedents (distance, count, who said them) and what
// follows them.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "iru/trace.hpp"
#include "iru/transcript.hpp"

namespace iru {

struct CorpusStats {
  std::size_t total_dialogues = 0;
  std::size_t total_turns = 0;
  std::size_t total_irus = 0;
  /// IRUs with at least one antecedent; denominator of every fraction.
  std::size_t irus_with_antecedents = 0;
  std::size_t remote = 0;
  std::size_t multi_antecedent = 0;
  std::size_t self_antecedent = 0;
  std::size_t other_antecedent = 0;
  std::size_t rising_count = 0;
  std::size_t affirmation_followed_count = 0;

  std::optional<double> remote_fraction() const;
  std::optional<double> multi_antecedent_fraction() const;
  std::optional<double> self_antecedent_fraction() const;
  std::optional<double> other_antecedent_fraction() const;

  CorpusStats& operator+=(const CorpusStats& other);
  bool operator==(const CorpusStats&) const = default;
};

struct StatsOptions {
  /// An IRU is remote when every antecedent is more than this many turns back.
  std::uint32_t remote_gap = 1;
  AffirmationLexicon lexicon;
};

/// Counts for one dialogue from its replay trace.
CorpusStats dialogue_stats(const Transcript& transcript, const std::vector<TraceRecord>& trace,
                           const StatsOptions& options = {});

/// Replays every transcript and sums the per-dialogue counts.
CorpusStats corpus_stats(const std::vector<Transcript>& corpus, const StatsOptions& options = {});

/// `*.dlg` files directly under `dir`, sorted by name.
std::vector<std::filesystem::path> list_transcripts(const std::filesystem::path& dir);

enum class TableFormat { kText, kTabular };

/// Fractions print with four decimals plus their counts, or `n/a` when no
/// IRU has an antecedent. The text form ends with reference values from the
/// original (unavailable) radio-show corpus, which are never computed here.
std::string render_stats(const CorpusStats& stats, TableFormat format = TableFormat::kText);

}  // namespace iru
