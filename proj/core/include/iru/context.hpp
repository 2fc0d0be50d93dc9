#pragma once

// Common-ground store with dependency-tracked entries and a forward-chaining
// entailment engine over the proposition fragment.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iru/error.hpp"
#include "iru/evidence.hpp"
#include "iru/ids.hpp"
#include "iru/proposition.hpp"

namespace iru {

struct ContextEntry {
  EntryId id;
  Proposition proposition;
  Strength strength = Strength::kHypothesis;
  /// Utterances that asserted this proposition, in order. Empty for derived entries.
  std::vector<UtteranceId> sources;
  /// Premises of a derived entry (literal entries and the rule entries used).
  std::set<EntryId> dependencies;
  bool defeated = false;

  bool asserted() const noexcept { return !sources.empty(); }
  bool live() const noexcept { return !defeated; }
  /// First asserting utterance, or "derived".
  std::string source_label() const;
};

/// A literal held together with its negation.
struct Clash {
  Literal positive;
  Literal negative;

  friend auto operator<=>(const Clash&, const Clash&) = default;
};

std::string to_string(const Clash& c);

class ConflictDetected : public Error {
 public:
  explicit ConflictDetected(std::vector<Clash> clashes);
  const std::vector<Clash>& clashes() const noexcept { return clashes_; }

 private:
  std::vector<Clash> clashes_;
};

struct AssertOutcome {
  /// Entry now holding the proposition; empty when the assertion was refused.
  std::optional<EntryId> entry;
  /// Set when a live contrary literal at equal or greater strength refused the assertion.
  std::optional<Clash> conflict;
  /// Weaker contrary entries (and their dependents) defeated by this assertion.
  std::vector<EntryId> defeated;
};

struct RedundancyVerdict {
  enum class Kind { kNotRedundant, kSaid, kEntailed };

  Kind kind = Kind::kNotRedundant;
  /// kSaid: utterances that asserted the proposition.
  /// kEntailed: asserting utterances of the premises the derivation rests on.
  std::vector<UtteranceId> antecedents;
  /// Entry that matched (the asserted or derived entry).
  std::optional<EntryId> entry;
};

class Context {
 public:
  Context() = default;

  /// Adds `p` or raises an existing live entry to `strength`; never lowers.
  AssertOutcome assert_prop(const Proposition& p, Strength strength, const UtteranceId& source);

  /// Recomputes and materializes the derived entries; returns every live
  /// literal. Throws ConflictDetected if the fixpoint holds a literal and its
  /// negation; the context is left unchanged in that case.
  std::set<Literal> closure();

  RedundancyVerdict is_redundant(const Proposition& p) const;

  /// Marks `root` and every live entry depending on it (transitively) as
  /// defeated. Returns the newly defeated ids in discovery order.
  std::vector<EntryId> mark_defeated(EntryId root);

  const ContextEntry& entry(EntryId id) const;
  const std::vector<ContextEntry>& entries() const noexcept { return entries_; }
  std::optional<EntryId> find_live(const Proposition& p) const;
  std::set<Literal> live_literals() const;

  /// Asserted entries at the leaves of `id`'s derivation, in id order.
  std::vector<EntryId> leaf_premises(EntryId id) const;
  /// Direct literal premises of a derived entry.
  std::vector<EntryId> literal_premises(EntryId id) const;

  bool needs_closure() const noexcept { return dirty_; }

 private:
  EntryId add_entry(Proposition p, Strength s);
  ContextEntry& mutable_entry(EntryId id) { return entries_.at(id.value); }

  std::vector<ContextEntry> entries_;
  std::map<Proposition, EntryId> index_;  // latest entry per proposition
  bool dirty_ = false;
};

}  // namespace iru
