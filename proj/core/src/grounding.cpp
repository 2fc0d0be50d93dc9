#include "iru/grounding.hpp"

#include <algorithm>

#include "iru/discourse_state.hpp"
#include "iru/error.hpp"
#include "iru/text.hpp"

namespace iru {

namespace {

constexpr std::array<Assumption, 1> kPromptSet = {Assumption::kAttend};
constexpr std::array<Assumption, 2> kRepeatSet = {Assumption::kAttend, Assumption::kHear};
constexpr std::array<Assumption, 3> kParaphraseSet = {Assumption::kAttend, Assumption::kHear,
                                                      Assumption::kRealize};
constexpr std::array<Assumption, 4> kInferenceSet = {Assumption::kAttend, Assumption::kHear,
                                                     Assumption::kRealize, Assumption::kLicense};

int precedence(IruClass c) {
  switch (c) {
    case IruClass::kImplicatureReinforcement: return 4;
    case IruClass::kExplicitInference: return 3;
    case IruClass::kRepeat: return 2;
    case IruClass::kParaphrase: return 1;
    default: return 0;
  }
}

}  // namespace

std::string_view to_string(Assumption a) noexcept {
  switch (a) {
    case Assumption::kCopresent: return "copresent";
    case Assumption::kAttend: return "attend";
    case Assumption::kHear: return "hear";
    case Assumption::kRealize: return "realize";
    case Assumption::kLicense: return "license";
  }
  return "?";
}

std::string_view to_string(IruClass c) noexcept {
  switch (c) {
    case IruClass::kNone: return "none";
    case IruClass::kPrompt: return "prompt";
    case IruClass::kRepeat: return "repeat";
    case IruClass::kParaphrase: return "paraphrase";
    case IruClass::kExplicitInference: return "explicit_inference";
    case IruClass::kImplicatureReinforcement: return "implicature_reinforcement";
  }
  return "?";
}

std::span<const Assumption> upgraded_by(IruClass c) noexcept {
  switch (c) {
    case IruClass::kPrompt: return kPromptSet;
    case IruClass::kRepeat: return kRepeatSet;
    case IruClass::kParaphrase: return kParaphraseSet;
    case IruClass::kExplicitInference:
    case IruClass::kImplicatureReinforcement: return kInferenceSet;
    case IruClass::kNone: break;
  }
  return {};
}

AssumptionRecord::AssumptionRecord(UtteranceId utterance, bool has_license, bool flow_interrupted)
    : utterance_(std::move(utterance)), flow_interrupted_(flow_interrupted) {
  for (auto a : kAllAssumptions) {
    if (a != Assumption::kLicense || has_license) slots_[index(a)] = Strength::kHypothesis;
  }
}

Strength AssumptionRecord::get(Assumption a) const {
  if (!applies(a)) {
    throw Error(ErrorKind::kInvalidArgument, std::string(to_string(a)) +
                                                 " does not apply to the record of " +
                                                 utterance_.str());
  }
  return *slots_[index(a)];
}

void AssumptionRecord::raise(Assumption a, Strength s) noexcept {
  auto& slot = slots_[index(a)];
  if (slot) slot = max_strength(*slot, s);
}

std::vector<Strength> AssumptionRecord::values() const {
  std::vector<Strength> out;
  for (const auto& slot : slots_) {
    if (slot) out.push_back(*slot);
  }
  return out;
}

AssumptionRecord apply_iru_upgrade(AssumptionRecord record, IruClass c) {
  if (c == IruClass::kNone) {
    throw Error(ErrorKind::kInvalidArgument, "no upgrade for a non-redundant utterance");
  }
  for (auto a : upgraded_by(c)) record.raise(a, Strength::kLinguistic);
  return record;
}

AssumptionRecord apply_any_next_upgrade(AssumptionRecord record) {
  if (record.flow_interrupted()) return record;
  record.raise(Assumption::kCopresent, Strength::kLinguistic);
  for (auto a : {Assumption::kAttend, Assumption::kHear, Assumption::kRealize,
                 Assumption::kLicense}) {
    record.raise(a, Strength::kDefault);
  }
  return record;
}

Strength understanding_strength(const AssumptionRecord& record) {
  auto values = record.values();
  return min_strength(values);
}

const AssumptionRecord& open_record(DiscourseState& state, const UtteranceEvent& event) {
  if (state.event_index.count(event.id)) {
    throw Error(ErrorKind::kDuplicateUtterance, "utterance " + event.id.str() + " already opened");
  }
  state.event_index.emplace(event.id, state.events.size());
  state.events.push_back(event);
  auto [it, inserted] = state.records.emplace(
      event.id, AssumptionRecord(event.id, event.implicates.has_value(), event.interrupted));
  return it->second;
}

IruClassification classify_iru_detailed(const UtteranceEvent& event, const DiscourseState& state) {
  for (const auto& a : event.antecedents) {
    const auto* ante = state.find_event(a);
    if (ante == nullptr || ante->turn >= event.turn) {
      throw Error(ErrorKind::kDanglingAntecedent,
                  event.id.str() + " names antecedent " + a.str() + " which is not an earlier utterance");
    }
  }

  IruClassification result;
  result.antecedents = event.antecedents;
  if (effective_act(event, state.lexicon) == Act::kPrompt) {
    result.cls = IruClass::kPrompt;
    return result;
  }

  const auto tokens = normalize_tokens(event.text);
  for (const auto& p : event.realizes) {
    IruClassification cand;
    for (const auto& [key, link] : state.licenses) {
      if (link.origin == LicenseOrigin::kImplicated && link.conclusion == p &&
          link.strength < Strength::kLinguistic && state.context.find_live(link.premise)) {
        cand.cls = IruClass::kImplicatureReinforcement;
        cand.reinforced = link;
        cand.antecedents = event.antecedents;
        if (cand.antecedents.empty() && link.carrier) cand.antecedents.push_back(*link.carrier);
        break;
      }
    }

    if (cand.cls == IruClass::kNone) {
      auto verdict = state.context.is_redundant(p);
      cand.antecedents = event.antecedents.empty() ? verdict.antecedents : event.antecedents;
      if (verdict.kind == RedundancyVerdict::Kind::kEntailed) {
        cand.cls = IruClass::kExplicitInference;
        cand.entailed_entry = verdict.entry;
      } else if (verdict.kind == RedundancyVerdict::Kind::kSaid) {
        bool same_words = std::any_of(
            cand.antecedents.begin(), cand.antecedents.end(), [&](const UtteranceId& a) {
              const auto* ante = state.find_event(a);
              return ante != nullptr &&
                     tokens_overlap_as_run(tokens, normalize_tokens(ante->text));
            });
        cand.cls = same_words ? IruClass::kRepeat : IruClass::kParaphrase;
      }
    }

    if (cand.cls != IruClass::kNone && precedence(cand.cls) > precedence(result.cls)) {
      cand.matched = p;
      result = std::move(cand);
    }
  }
  if (result.cls == IruClass::kNone) result.antecedents = event.antecedents;
  return result;
}

IruClass classify_iru(const UtteranceEvent& event, const DiscourseState& state) {
  return classify_iru_detailed(event, state).cls;
}

const LicenseLink& record_license_evidence(DiscourseState& state, LicenseLink link,
                                           Strength strength) {
  if (strength == Strength::kPhysical) {
    throw Error(ErrorKind::kInvalidArgument, "license links top out at linguistic evidence");
  }
  auto key = std::make_pair(link.premise, link.conclusion);
  if (auto it = state.licenses.find(key); it != state.licenses.end()) {
    it->second.strength = max_strength(it->second.strength, strength);
    return it->second;
  }
  if (!state.context.find_live(link.premise)) {
    throw Error(ErrorKind::kUnknownProposition,
                "license premise " + to_string(link.premise) + " is not in the context");
  }
  link.strength = strength;
  return state.licenses.emplace(std::move(key), std::move(link)).first->second;
}

UnderstandingBelief understanding(const DiscourseState& state, const UtteranceId& utterance) {
  const auto* event = state.find_event(utterance);
  auto it = state.records.find(utterance);
  if (event == nullptr || it == state.records.end()) {
    throw Error(ErrorKind::kInvalidArgument, "no record for utterance " + utterance.str());
  }
  return {utterance, event->addressee, event->realizes, understanding_strength(it->second)};
}

}  // namespace iru
