#pragma once

// Acceptance under the collaborative principle: the addressee must surface a
// detected discrepancy on their next turn, so a next turn without one licenses
// default acceptance when the dialogue's goals require it. Explicit
// affirmation gives linguistic acceptance; a redundant echo with rising
// intonation blocks the inference. Defaults can be defeated later by strictly
// stronger evidence, and defeat cascades through everything depending on them.

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "iru/context.hpp"
#include "iru/evidence.hpp"
#include "iru/ids.hpp"
#include "iru/proposition.hpp"
#include "iru/utterance.hpp"

namespace iru {

struct DiscourseState;

enum class BeliefStatus : std::uint8_t { kLive, kDefeated };

struct AcceptanceBelief {
  std::uint32_t id = 0;
  /// Utterance whose content was accepted.
  UtteranceId about;
  Proposition proposition;
  ParticipantId agent;
  Strength strength = Strength::kDefault;  // default or linguistic
  std::set<NodeRef> dependencies;
  BeliefStatus status = BeliefStatus::kLive;
};

enum class ConflictKind : std::uint8_t { kExplicitRejection, kContradictoryAssertion, kRisingIru };

std::string_view to_string(ConflictKind k) noexcept;

struct ConflictEvidence {
  UtteranceId event;
  ConflictKind kind = ConflictKind::kContradictoryAssertion;
  /// Contradictory assertion: the literal pair that cannot both hold.
  std::optional<Clash> clash;
  /// Explicit rejection: the rejected utterance and its content.
  std::optional<UtteranceId> rejected;
  std::vector<Proposition> rejected_content;
  Strength strength = Strength::kLinguistic;

  bool operator==(const ConflictEvidence&) const = default;
};

struct SupportLink {
  std::uint32_t id = 0;
  Proposition belief;
  Proposition goal;
  std::set<NodeRef> dependencies;
  BeliefStatus status = BeliefStatus::kLive;
};

struct RetractionReport {
  NodeRef target;
  ConflictEvidence cause;
  /// Target first, then dependents in breadth-first order.
  std::vector<NodeRef> defeated;
};

struct AcceptanceOutcome {
  enum class Kind : std::uint8_t {
    kNotApplicable,  // next event is not the addressee's uninterrupted reply
    kNone,           // no evidence either way and acceptance not required
    kDefault,
    kLinguistic,
    kBlocked,
    kRejected,
  };

  Kind kind = Kind::kNotApplicable;
  UtteranceId about;
  std::vector<std::uint32_t> beliefs;
  std::optional<ConflictEvidence> conflict;
};

std::string_view to_string(AcceptanceOutcome::Kind k) noexcept;

/// Evaluates whether `next` (the addressee's reply) shows acceptance of
/// `prev`'s content, in this order: explicit affirmation, conflict, rising
/// IRU, default when acceptance is required. Throws OrderingViolation when
/// `next` does not come after `prev`.
AcceptanceOutcome evaluate_acceptance(DiscourseState& state, const UtteranceEvent& prev,
                                      const UtteranceEvent& next);

/// Explicit rejection annotation first, then contradiction in the closure of
/// the context extended with the event's content.
std::optional<ConflictEvidence> detect_conflict(const DiscourseState& state,
                                                const UtteranceEvent& event);

/// True when `conflict` bears on `prev`'s content.
bool conflicts_with(const DiscourseState& state, const ConflictEvidence& conflict,
                    const UtteranceEvent& prev);

/// Marks `target` and everything whose dependency closure contains it as
/// defeated. Throws DefeatRejected unless `by` is strictly stronger than the
/// target, InvalidArgument if the target is unknown or already defeated.
RetractionReport defeat(DiscourseState& state, NodeRef target, const ConflictEvidence& by);

/// Idempotent. Throws UnknownProposition when either endpoint is not live.
const SupportLink& record_support(DiscourseState& state, const Proposition& belief,
                                  const Proposition& goal);

}  // namespace iru
