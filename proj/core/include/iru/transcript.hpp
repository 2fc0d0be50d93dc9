#pragma once

// Annotated transcript (.dlg) format.
//
// Blank-line-separated records of `key: value` lines; `#` starts a comment
// line. The first record is the header:
//
//   dialogue: example1
//   participants: h, r
//   require-acceptance: false
//
// Every following record is one utterance. Required keys: id, turn, speaker,
// addressee, text. Optional: act, intonation, realizes (`;`-separated
// propositions), antecedents (`,`-separated ids), implicates (`p => q`),
// supports (`belief => goal`), rejects (id), interrupted (true|false).
// Unknown keys are errors.

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "iru/ids.hpp"
#include "iru/utterance.hpp"

namespace iru {

struct Transcript {
  std::string dialogue;
  std::array<ParticipantId, 2> participants;
  bool require_acceptance = false;
  std::vector<UtteranceEvent> events;

  bool operator==(const Transcript&) const = default;
};

/// Throws ParseError listing every problem with its 1-based line number.
Transcript parse_transcript(std::string_view text);

/// Reads and parses a file. An unreadable file is a ParseError of kind kIo.
Transcript load_transcript(const std::filesystem::path& path);

/// Canonical text: fixed key order, defaults made explicit for intonation,
/// empty optional keys omitted, LF line endings, trailing newline.
std::string serialize(const Transcript& t);

}  // namespace iru
