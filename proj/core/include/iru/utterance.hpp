#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iru/ids.hpp"
#include "iru/proposition.hpp"

namespace iru {

enum class Act : std::uint8_t { kAssert, kQuestion, kPrompt, kAffirmation, kOther };
enum class Intonation : std::uint8_t { kUnmarked, kRising, kFalling };

std::string_view to_string(Act a) noexcept;
std::optional<Act> parse_act(std::string_view s) noexcept;
std::string_view to_string(Intonation i) noexcept;
std::optional<Intonation> parse_intonation(std::string_view s) noexcept;

/// `premise => conclusion`: an inference the speaker intends the hearer to draw.
struct Implicature {
  Proposition premise;
  Proposition conclusion;
  bool operator==(const Implicature&) const = default;
};

/// `belief => goal`: the belief is offered as a reason to adopt the goal.
struct SupportAnnotation {
  Proposition belief;
  Proposition goal;
  bool operator==(const SupportAnnotation&) const = default;
};

/// One annotated say(speaker, addressee, utterance, propositions) act.
struct UtteranceEvent {
  UtteranceId id;
  std::uint32_t turn = 0;
  ParticipantId speaker;
  ParticipantId addressee;
  std::string text;
  /// Annotated act; when absent the affirmation lexicon and content decide.
  std::optional<Act> act;
  Intonation intonation = Intonation::kUnmarked;
  std::vector<Proposition> realizes;
  std::vector<UtteranceId> antecedents;
  std::optional<Implicature> implicates;
  std::optional<SupportAnnotation> supports;
  std::optional<UtteranceId> rejects;
  /// The conversational flow broke off after this utterance; its addressee's
  /// next turn is not evidence about it.
  bool interrupted = false;

  bool operator==(const UtteranceEvent&) const = default;
};

/// Phrases that count as explicit affirmation when no act is annotated.
class AffirmationLexicon {
 public:
  /// "that's correct", "right", "yup", "absolutely".
  AffirmationLexicon();
  explicit AffirmationLexicon(const std::vector<std::string>& phrases);

  /// True when the normalized text starts with one of the phrases.
  bool matches(std::string_view text) const;

 private:
  std::vector<std::vector<std::string>> phrases_;
};

/// The annotated act if present, otherwise affirmation by lexicon, otherwise
/// assert when something is realized, otherwise other.
Act effective_act(const UtteranceEvent& e, const AffirmationLexicon& lexicon);

}  // namespace iru
