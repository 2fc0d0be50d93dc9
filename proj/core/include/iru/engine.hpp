#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iru/discourse_state.hpp"
#include "iru/trace.hpp"
#include "iru/transcript.hpp"

namespace iru {

/// Replays one two-party dialogue, utterance by utterance. For each event:
///   1. the addressee's reply gives default/linguistic support to the
///      records of utterances addressed to the speaker;
///   2. the event is classified and its IRU upgrade applied to the records
///      of antecedents addressed to the speaker;
///   3. acceptance of the previous utterance (and of any blocked earlier
///      one) is evaluated; later conflicts defeat weaker acceptances;
///   4. the event's content enters the common ground unless it conflicts,
///      and the closure and license links are brought up to date.
///
/// Strictly sequential; distinct engines share nothing.
class Engine {
 public:
  Engine(std::array<ParticipantId, 2> participants, bool require_acceptance,
         AffirmationLexicon lexicon = {});
  explicit Engine(const Transcript& header, AffirmationLexicon lexicon = {});

  /// Throws OrderingViolation for a non-increasing turn, DuplicateUtterance,
  /// DanglingAntecedent, or InvalidArgument for an unknown participant.
  TraceRecord process(const UtteranceEvent& event);

  const DiscourseState& state() const noexcept { return state_; }

 private:
  DiscourseState state_;
  std::optional<std::uint32_t> last_turn_;
};

std::vector<TraceRecord> replay(const Transcript& transcript, const AffirmationLexicon& lexicon = {});

}  // namespace iru
