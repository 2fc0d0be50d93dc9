#pragma once

// Inference of mutual understanding.
//
// Every utterance opens an assumption record: copresence, attention, hearing,
// realization (plus license when the utterance carries an intended
// inference). All start at `hypothesis`. The addressee's next utterance
// raises them: any next utterance gives copresence linguistic support and the
// rest default support; an informationally redundant next utterance (IRU)
// gives linguistic support to the assumptions its class addresses:
//
//   prompt                     attend
//   repeat                     attend, hear
//   paraphrase                 attend, hear, realize
//   explicit inference         attend, hear, realize, license
//   implicature reinforcement  attend, hear, realize, license
//
// Understanding is as strong as the weakest applicable assumption.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "iru/context.hpp"
#include "iru/evidence.hpp"
#include "iru/ids.hpp"
#include "iru/proposition.hpp"
#include "iru/utterance.hpp"

namespace iru {

struct DiscourseState;

enum class Assumption : std::uint8_t { kCopresent, kAttend, kHear, kRealize, kLicense };

inline constexpr std::array<Assumption, 5> kAllAssumptions = {
    Assumption::kCopresent, Assumption::kAttend, Assumption::kHear, Assumption::kRealize,
    Assumption::kLicense};

std::string_view to_string(Assumption a) noexcept;

enum class IruClass : std::uint8_t {
  kNone,
  kPrompt,
  kRepeat,
  kParaphrase,
  kExplicitInference,
  kImplicatureReinforcement,
};

inline constexpr std::array<IruClass, 5> kIruClasses = {
    IruClass::kPrompt, IruClass::kRepeat, IruClass::kParaphrase, IruClass::kExplicitInference,
    IruClass::kImplicatureReinforcement};

std::string_view to_string(IruClass c) noexcept;

/// Assumptions an IRU of class `c` upgrades to linguistic. Empty for kNone.
std::span<const Assumption> upgraded_by(IruClass c) noexcept;

class AssumptionRecord {
 public:
  AssumptionRecord(UtteranceId utterance, bool has_license, bool flow_interrupted = false);

  const UtteranceId& utterance() const noexcept { return utterance_; }
  bool flow_interrupted() const noexcept { return flow_interrupted_; }

  bool applies(Assumption a) const noexcept { return slots_[index(a)].has_value(); }
  std::optional<Strength> find(Assumption a) const noexcept { return slots_[index(a)]; }
  /// Throws Error(kInvalidArgument) when `a` does not apply to this record.
  Strength get(Assumption a) const;

  /// Raises `a` to at least `s`; no effect on an inapplicable assumption.
  void raise(Assumption a, Strength s) noexcept;

  /// Strengths of the applicable assumptions, in kAllAssumptions order.
  std::vector<Strength> values() const;

  bool operator==(const AssumptionRecord&) const = default;

 private:
  static constexpr std::size_t index(Assumption a) noexcept { return static_cast<std::size_t>(a); }

  UtteranceId utterance_;
  std::array<std::optional<Strength>, 5> slots_{};
  bool flow_interrupted_ = false;
};

/// Throws Error(kInvalidArgument) for kNone.
AssumptionRecord apply_iru_upgrade(AssumptionRecord record, IruClass c);

/// Copresence to linguistic, everything else to at least default. Leaves a
/// record whose flow was interrupted untouched.
AssumptionRecord apply_any_next_upgrade(AssumptionRecord record);

Strength understanding_strength(const AssumptionRecord& record);

struct UnderstandingBelief {
  UtteranceId utterance;
  ParticipantId hearer;
  std::vector<Proposition> propositions;
  Strength strength = Strength::kHypothesis;
};

enum class LicenseOrigin : std::uint8_t { kInferred, kImplicated };

/// bel(hearer, license(premise, conclusion)).
struct LicenseLink {
  Proposition premise;
  Proposition conclusion;
  Strength strength = Strength::kHypothesis;
  LicenseOrigin origin = LicenseOrigin::kInferred;
  /// Utterance whose implicates annotation introduced the link, if any.
  std::optional<UtteranceId> carrier;

  bool operator==(const LicenseLink&) const = default;
};

struct IruClassification {
  IruClass cls = IruClass::kNone;
  /// Annotated antecedents, or the redundancy verdict's when none are annotated.
  std::vector<UtteranceId> antecedents;
  /// The realized proposition that made the utterance redundant.
  std::optional<Proposition> matched;
  /// Context entry behind an explicit inference.
  std::optional<EntryId> entailed_entry;
  /// Implicated link reinforced by the utterance.
  std::optional<LicenseLink> reinforced;
};

/// Registers `event` and its all-hypothesis record. Throws DuplicateUtterance.
const AssumptionRecord& open_record(DiscourseState& state, const UtteranceEvent& event);

/// Pure function of (event, state). Throws DanglingAntecedent when an
/// antecedent does not name an earlier utterance.
IruClassification classify_iru_detailed(const UtteranceEvent& event, const DiscourseState& state);
IruClass classify_iru(const UtteranceEvent& event, const DiscourseState& state);

/// Stores the link or raises it to max(old, strength). Throws
/// UnknownProposition when the premise is not live in the context.
const LicenseLink& record_license_evidence(DiscourseState& state, LicenseLink link,
                                           Strength strength);

/// Throws InvalidArgument for an unknown utterance.
UnderstandingBelief understanding(const DiscourseState& state, const UtteranceId& utterance);

}  // namespace iru
