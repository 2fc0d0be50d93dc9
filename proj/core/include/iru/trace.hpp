#pragma once

// Belief-state trace (.trace): one block per processed utterance.
//
//   event: u8
//   turn: 2
//   speaker: r
//   iru: repeat
//   antecedents: u7
//   record: u7
//     copresent: linguistic
//     attend: linguistic
//     hear: linguistic
//     realize: default
//     understand: default
//   acceptance: default u7
//     accept: ruled_out by r [default] a0
//   license: pension => !eligible81 [inference]
//   derived: !eligible81 [inference] e3
//   conflict: contradictory_assertion iraLastYear vs !iraLastYear
//   retracted: a0 by u20 (contradictory_assertion): a0 e2 e5
//   withheld: started -> !iraLastYear
//
// Blocks are separated by one blank line. Optional sections are omitted
// when empty.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iru/acceptance.hpp"
#include "iru/grounding.hpp"

namespace iru {

struct RecordSnapshot {
  UtteranceId utterance;
  std::vector<std::pair<Assumption, Strength>> assumptions;
  Strength understanding = Strength::kHypothesis;

  bool operator==(const RecordSnapshot&) const = default;
};

struct AcceptedLine {
  std::string proposition;
  ParticipantId agent;
  Strength strength = Strength::kDefault;
  std::string node;
};

struct AcceptanceLine {
  AcceptanceOutcome::Kind kind = AcceptanceOutcome::Kind::kNone;
  UtteranceId about;
  std::vector<AcceptedLine> accepted;
};

struct RetractionLine {
  std::string target;
  UtteranceId by;
  ConflictKind kind = ConflictKind::kContradictoryAssertion;
  std::vector<std::string> defeated;
};

struct TraceRecord {
  UtteranceId event;
  std::uint32_t turn = 0;
  ParticipantId speaker;
  IruClass iru = IruClass::kNone;
  std::vector<UtteranceId> antecedents;
  std::vector<RecordSnapshot> records;
  std::vector<AcceptanceLine> acceptance;
  std::vector<std::string> licenses;
  std::vector<std::string> derived;
  std::vector<ConflictEvidence> conflicts;
  std::vector<RetractionLine> retractions;
  std::vector<std::string> withheld;

  /// Snapshot for `u`, if the event touched its record.
  const RecordSnapshot* record(const UtteranceId& u) const;
};

RecordSnapshot snapshot(const AssumptionRecord& record);

std::string render_license(const LicenseLink& link);
std::string render_conflict(const ConflictEvidence& c);

/// Text rendering; an empty list renders as an empty document.
std::string write_trace(const std::vector<TraceRecord>& records);
/// Tab-separated: event, turn, speaker, iru, antecedents, understand (per
/// touched record), acceptance, conflicts, retracted.
std::string write_trace_tabular(const std::vector<TraceRecord>& records);

}  // namespace iru
