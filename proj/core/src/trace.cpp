#include "iru/trace.hpp"

#include <sstream>

namespace iru {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& items, std::string_view sep, F render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += render(items[i]);
  }
  return out;
}

std::string ids(const std::vector<UtteranceId>& v, std::string_view sep) {
  return join(v, sep, [](const UtteranceId& u) { return u.str(); });
}

}  // namespace

const RecordSnapshot* TraceRecord::record(const UtteranceId& u) const {
  for (const auto& r : records) {
    if (r.utterance == u) return &r;
  }
  return nullptr;
}

RecordSnapshot snapshot(const AssumptionRecord& record) {
  RecordSnapshot s;
  s.utterance = record.utterance();
  for (auto a : kAllAssumptions) {
    if (auto v = record.find(a)) s.assumptions.emplace_back(a, *v);
  }
  s.understanding = understanding_strength(record);
  return s;
}

std::string render_license(const LicenseLink& link) {
  return to_string(link.premise) + " => " + to_string(link.conclusion) + " [" +
         std::string(to_string(link.strength)) + "]" +
         (link.origin == LicenseOrigin::kImplicated ? " implicated" : "");
}

std::string render_conflict(const ConflictEvidence& c) {
  std::string out(to_string(c.kind));
  if (c.clash) out += " " + to_string(*c.clash);
  if (c.rejected) out += " rejects " + c.rejected->str();
  return out;
}

std::string write_trace(const std::vector<TraceRecord>& records) {
  std::ostringstream os;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (i > 0) os << '\n';
    os << "event: " << r.event << '\n';
    os << "turn: " << r.turn << '\n';
    os << "speaker: " << r.speaker << '\n';
    os << "iru: " << to_string(r.iru) << '\n';
    if (!r.antecedents.empty()) os << "antecedents: " << ids(r.antecedents, ", ") << '\n';
    for (const auto& snap : r.records) {
      os << "record: " << snap.utterance << '\n';
      for (const auto& [a, s] : snap.assumptions) os << "  " << to_string(a) << ": " << to_string(s) << '\n';
      os << "  understand: " << to_string(snap.understanding) << '\n';
    }
    for (const auto& acc : r.acceptance) {
      os << "acceptance: " << to_string(acc.kind) << ' ' << acc.about << '\n';
      for (const auto& a : acc.accepted) {
        os << "  accept: " << a.proposition << " by " << a.agent << " [" << to_string(a.strength)
           << "] " << a.node << '\n';
      }
    }
    for (const auto& l : r.licenses) os << "license: " << l << '\n';
    for (const auto& d : r.derived) os << "derived: " << d << '\n';
    for (const auto& c : r.conflicts) os << "conflict: " << render_conflict(c) << '\n';
    for (const auto& ret : r.retractions) {
      os << "retracted: " << ret.target << " by " << ret.by << " (" << to_string(ret.kind)
         << "): " << join(ret.defeated, " ", [](const std::string& s) { return s; }) << '\n';
    }
    for (const auto& w : r.withheld) os << "withheld: " << w << '\n';
  }
  return os.str();
}

std::string write_trace_tabular(const std::vector<TraceRecord>& records) {
  std::ostringstream os;
  os << "event\tturn\tspeaker\tiru\tantecedents\tunderstand\tacceptance\tconflicts\tretracted\n";
  for (const auto& r : records) {
    os << r.event << '\t' << r.turn << '\t' << r.speaker << '\t' << to_string(r.iru) << '\t'
       << (r.antecedents.empty() ? "-" : ids(r.antecedents, ",")) << '\t';
    os << (r.records.empty() ? "-" : join(r.records, ",", [](const RecordSnapshot& s) {
      return s.utterance.str() + "=" + std::string(to_string(s.understanding));
    })) << '\t';
    os << (r.acceptance.empty() ? "-" : join(r.acceptance, ",", [](const AcceptanceLine& a) {
      return a.about.str() + "=" + std::string(to_string(a.kind));
    })) << '\t';
    os << (r.conflicts.empty() ? "-" : join(r.conflicts, ",", [](const ConflictEvidence& c) {
      return std::string(to_string(c.kind));
    })) << '\t';
    os << (r.retractions.empty() ? "-" : join(r.retractions, ",", [](const RetractionLine& l) {
      return join(l.defeated, " ", [](const std::string& s) { return s; });
    })) << '\n';
  }
  return os.str();
}

}  // namespace iru
