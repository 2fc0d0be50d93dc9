#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "iru/acceptance.hpp"
#include "iru/context.hpp"
#include "iru/grounding.hpp"
#include "iru/utterance.hpp"

namespace iru {

/// Everything known about one two-party dialogue so far: the common ground,
/// per-utterance assumption records, license and support links, acceptance
/// beliefs and the dependency edges used for retraction.
struct DiscourseState {
  DiscourseState() = default;
  DiscourseState(std::array<ParticipantId, 2> who, bool acceptance_required,
                 AffirmationLexicon affirmations = {});

  std::array<ParticipantId, 2> participants;
  bool require_acceptance = false;
  AffirmationLexicon lexicon;

  Context context;
  std::vector<UtteranceEvent> events;
  std::map<UtteranceId, std::size_t> event_index;
  std::map<UtteranceId, AssumptionRecord> records;
  /// Utterances whose addressee has already replied.
  std::set<UtteranceId> answered;
  std::map<UtteranceId, IruClass> classes;

  std::map<std::pair<Proposition, Proposition>, LicenseLink> licenses;
  std::vector<AcceptanceBelief> acceptances;
  std::vector<SupportLink> supports;
  std::vector<ConflictEvidence> conflicts;
  std::vector<RetractionReport> retractions;
  /// Utterances whose acceptance was blocked, awaiting re-evaluation.
  std::vector<UtteranceId> blocked;
  /// Dependencies of context entries on nodes outside the context.
  std::map<EntryId, std::set<NodeRef>> entry_dependencies;

  const UtteranceEvent* find_event(const UtteranceId& id) const;
  /// Position of an utterance in `events`; throws InvalidArgument if unknown.
  std::uint32_t position_of(const UtteranceId& id) const;
  /// "e3", "a0", "s1", or the utterance id for utterance nodes.
  std::string label(NodeRef node) const;

  /// Every node that can be defeated: context entries, acceptances, supports.
  std::vector<NodeRef> nodes() const;
  std::set<NodeRef> dependencies(NodeRef node) const;
  bool is_live(NodeRef node) const;
  /// Throws InvalidArgument for an unknown node.
  Strength strength_of(NodeRef node) const;

  /// Records that `dependent` rests on `on`. Throws InvalidArgument for
  /// unknown nodes or a self-edge.
  void add_dependency(NodeRef dependent, NodeRef on);

  /// Defeats every live node that depends on a defeated one, to a fixpoint.
  /// Returns the newly defeated nodes.
  std::vector<NodeRef> propagate_defeat();

  /// Live acceptance beliefs of `p`.
  std::vector<std::uint32_t> live_acceptances_of(const Proposition& p) const;
};

}  // namespace iru
