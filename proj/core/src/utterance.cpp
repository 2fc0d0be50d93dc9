#include "iru/utterance.hpp"

#include <array>
#include <utility>

#include "iru/text.hpp"

namespace iru {

namespace {
constexpr std::array<std::pair<Act, std::string_view>, 5> kActs = {{
    {Act::kAssert, "assert"},
    {Act::kQuestion, "question"},
    {Act::kPrompt, "prompt"},
    {Act::kAffirmation, "affirmation"},
    {Act::kOther, "other"},
}};
constexpr std::array<std::pair<Intonation, std::string_view>, 3> kIntonations = {{
    {Intonation::kUnmarked, "unmarked"},
    {Intonation::kRising, "rising"},
    {Intonation::kFalling, "falling"},
}};
}  // namespace

std::string_view to_string(Act a) noexcept {
  for (const auto& [v, s] : kActs) {
    if (v == a) return s;
  }
  return "other";
}

std::optional<Act> parse_act(std::string_view s) noexcept {
  for (const auto& [v, name] : kActs) {
    if (name == s) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Intonation i) noexcept {
  for (const auto& [v, s] : kIntonations) {
    if (v == i) return s;
  }
  return "unmarked";
}

std::optional<Intonation> parse_intonation(std::string_view s) noexcept {
  for (const auto& [v, name] : kIntonations) {
    if (name == s) return v;
  }
  return std::nullopt;
}

AffirmationLexicon::AffirmationLexicon()
    : AffirmationLexicon({"that's correct", "right", "yup", "absolutely"}) {}

AffirmationLexicon::AffirmationLexicon(const std::vector<std::string>& phrases) {
  for (const auto& p : phrases) {
    auto tokens = normalize_tokens(p);
    if (!tokens.empty()) phrases_.push_back(std::move(tokens));
  }
}

bool AffirmationLexicon::matches(std::string_view text) const {
  auto tokens = normalize_tokens(text);
  for (const auto& phrase : phrases_) {
    if (phrase.size() <= tokens.size() &&
        std::equal(phrase.begin(), phrase.end(), tokens.begin())) {
      return true;
    }
  }
  return false;
}

Act effective_act(const UtteranceEvent& e, const AffirmationLexicon& lexicon) {
  if (e.act) return *e.act;
  if (lexicon.matches(e.text)) return Act::kAffirmation;
  return e.realizes.empty() ? Act::kOther : Act::kAssert;
}

}  // namespace iru
