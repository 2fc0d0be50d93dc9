#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace iru {

/// String identifier tagged by what it names, so utterance and participant
/// ids cannot be mixed up.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Name& n) { return os << n.value_; }

 private:
  std::string value_;
};

using UtteranceId = Name<struct UtteranceTag>;
using ParticipantId = Name<struct ParticipantTag>;

/// Dense numeric handle for a context entry.
struct EntryId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EntryId&, const EntryId&) = default;
};

/// Anything that can sit in the dependency graph used for retraction.
enum class NodeKind : std::uint8_t { kEntry, kAcceptance, kSupport, kUtterance };

struct NodeRef {
  NodeKind kind = NodeKind::kEntry;
  std::uint32_t index = 0;

  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;

  static NodeRef entry(EntryId id) { return {NodeKind::kEntry, id.value}; }
  static NodeRef acceptance(std::uint32_t i) { return {NodeKind::kAcceptance, i}; }
  static NodeRef support(std::uint32_t i) { return {NodeKind::kSupport, i}; }
  static NodeRef utterance(std::uint32_t position) { return {NodeKind::kUtterance, position}; }
};

/// "e3", "a0", "s1", "t14" (utterance nodes by position in the dialogue).
std::string to_string(NodeRef ref);

}  // namespace iru

template <class Tag>
struct std::hash<iru::Name<Tag>> {
  std::size_t operator()(const iru::Name<Tag>& n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};
