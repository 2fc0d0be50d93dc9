#include "iru/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "iru/engine.hpp"

namespace iru {

namespace {

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string fraction_cell(std::size_t num, std::size_t den) {
  if (den == 0) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f (%zu/%zu)", static_cast<double>(num) / static_cast<double>(den),
                num, den);
  return buf;
}

}  // namespace

std::optional<double> CorpusStats::remote_fraction() const { return ratio(remote, irus_with_antecedents); }
std::optional<double> CorpusStats::multi_antecedent_fraction() const {
  return ratio(multi_antecedent, irus_with_antecedents);
}
std::optional<double> CorpusStats::self_antecedent_fraction() const {
  return ratio(self_antecedent, irus_with_antecedents);
}
std::optional<double> CorpusStats::other_antecedent_fraction() const {
  return ratio(other_antecedent, irus_with_antecedents);
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& o) {
  total_dialogues += o.total_dialogues;
  total_turns += o.total_turns;
  total_irus += o.total_irus;
  irus_with_antecedents += o.irus_with_antecedents;
  remote += o.remote;
  multi_antecedent += o.multi_antecedent;
  self_antecedent += o.self_antecedent;
  other_antecedent += o.other_antecedent;
  rising_count += o.rising_count;
  affirmation_followed_count += o.affirmation_followed_count;
  return *this;
}

CorpusStats dialogue_stats(const Transcript& transcript, const std::vector<TraceRecord>& trace,
                           const StatsOptions& options) {
  CorpusStats s;
  s.total_dialogues = 1;
  s.total_turns = transcript.events.size();

  std::map<UtteranceId, const UtteranceEvent*> by_id;
  for (const auto& e : transcript.events) by_id.emplace(e.id, &e);

  for (std::size_t i = 0; i < trace.size() && i < transcript.events.size(); ++i) {
    const auto& record = trace[i];
    const auto& event = transcript.events[i];
    if (record.iru == IruClass::kNone) continue;
    ++s.total_irus;
    if (event.intonation == Intonation::kRising) ++s.rising_count;
    if (i + 1 < transcript.events.size()) {
      const auto& next = transcript.events[i + 1];
      if (next.speaker != event.speaker && effective_act(next, options.lexicon) == Act::kAffirmation) {
        ++s.affirmation_followed_count;
      }
    }

    std::vector<const UtteranceEvent*> antecedents;
    for (const auto& a : record.antecedents) {
      if (auto it = by_id.find(a); it != by_id.end()) antecedents.push_back(it->second);
    }
    if (antecedents.empty()) continue;
    ++s.irus_with_antecedents;
    bool adjacent = std::any_of(antecedents.begin(), antecedents.end(), [&](const UtteranceEvent* a) {
      return event.turn - a->turn <= options.remote_gap;
    });
    if (!adjacent) ++s.remote;
    if (antecedents.size() > 1) ++s.multi_antecedent;
    bool self = std::all_of(antecedents.begin(), antecedents.end(),
                            [&](const UtteranceEvent* a) { return a->speaker == event.speaker; });
    ++(self ? s.self_antecedent : s.other_antecedent);
  }
  return s;
}

CorpusStats corpus_stats(const std::vector<Transcript>& corpus, const StatsOptions& options) {
  CorpusStats total;
  for (const auto& t : corpus) total += dialogue_stats(t, replay(t, options.lexicon), options);
  return total;
}

std::vector<std::filesystem::path> list_transcripts(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dlg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string render_stats(const CorpusStats& s, TableFormat format) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"dialogues", std::to_string(s.total_dialogues)},
      {"turns", std::to_string(s.total_turns)},
      {"irus", std::to_string(s.total_irus)},
      {"irus_with_antecedents", std::to_string(s.irus_with_antecedents)},
      {"remote_fraction", fraction_cell(s.remote, s.irus_with_antecedents)},
      {"multi_antecedent_fraction", fraction_cell(s.multi_antecedent, s.irus_with_antecedents)},
      {"self_antecedent_fraction", fraction_cell(s.self_antecedent, s.irus_with_antecedents)},
      {"other_antecedent_fraction", fraction_cell(s.other_antecedent, s.irus_with_antecedents)},
      {"rising", std::to_string(s.rising_count)},
      {"affirmation_followed", std::to_string(s.affirmation_followed_count)},
  };
  std::ostringstream os;
  if (format == TableFormat::kTabular) {
    os << "statistic\tvalue\n";
    for (const auto& [k, v] : rows) os << k << '\t' << v << '\n';
    return os.str();
  }
  for (const auto& [k, v] : rows) {
    os << k << std::string(28 - k.size(), ' ') << v << '\n';
  }
  os << "\n# reference, original radio-show corpus (not reproduced here): 171 IRUs in 24 dialogues"
        " (976 turns); 35% remote; 32% more than one antecedent; 48% self / 52% other;"
        " 28 rising (14 followed by affirmation); 50 followed by affirmation\n";
  return os.str();
}

}  // namespace iru
