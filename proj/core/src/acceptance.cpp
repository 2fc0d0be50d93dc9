#include "iru/acceptance.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "iru/discourse_state.hpp"
#include "iru/error.hpp"
#include "iru/grounding.hpp"

namespace iru {

std::string_view to_string(ConflictKind k) noexcept {
  switch (k) {
    case ConflictKind::kExplicitRejection: return "explicit_rejection";
    case ConflictKind::kContradictoryAssertion: return "contradictory_assertion";
    case ConflictKind::kRisingIru: return "rising_iru";
  }
  return "?";
}

std::string_view to_string(AcceptanceOutcome::Kind k) noexcept {
  switch (k) {
    case AcceptanceOutcome::Kind::kNotApplicable: return "n/a";
    case AcceptanceOutcome::Kind::kNone: return "none";
    case AcceptanceOutcome::Kind::kDefault: return "default";
    case AcceptanceOutcome::Kind::kLinguistic: return "linguistic";
    case AcceptanceOutcome::Kind::kBlocked: return "blocked";
    case AcceptanceOutcome::Kind::kRejected: return "rejected";
  }
  return "?";
}

namespace {

void unblock(DiscourseState& state, const UtteranceId& id) {
  std::erase(state.blocked, id);
}

std::vector<std::uint32_t> accept_content(DiscourseState& state, const UtteranceEvent& prev,
                                          const UtteranceEvent& next, Strength strength) {
  std::vector<std::uint32_t> ids;
  const auto trigger = NodeRef::utterance(state.position_of(next.id));
  for (const auto& p : prev.realizes) {
    state.acceptances.push_back(AcceptanceBelief{static_cast<std::uint32_t>(state.acceptances.size()),
                                                 prev.id, p, next.speaker, strength, {trigger},
                                                 BeliefStatus::kLive});
    ids.push_back(state.acceptances.back().id);
    if (auto entry = state.context.find_live(p)) {
      state.entry_dependencies[*entry].insert(NodeRef::acceptance(ids.back()));
    }
  }
  return ids;
}

void remember(DiscourseState& state, const ConflictEvidence& c) {
  if (std::find(state.conflicts.begin(), state.conflicts.end(), c) == state.conflicts.end()) {
    state.conflicts.push_back(c);
  }
}

}  // namespace

std::optional<ConflictEvidence> detect_conflict(const DiscourseState& state,
                                                const UtteranceEvent& event) {
  if (event.rejects) {
    ConflictEvidence c;
    c.event = event.id;
    c.kind = ConflictKind::kExplicitRejection;
    c.rejected = event.rejects;
    if (const auto* target = state.find_event(*event.rejects)) c.rejected_content = target->realizes;
    return c;
  }

  Context trial = state.context;
  auto contradiction = [&](Clash clash) {
    ConflictEvidence c;
    c.event = event.id;
    c.kind = ConflictKind::kContradictoryAssertion;
    c.clash = std::move(clash);
    return c;
  };
  for (const auto& p : event.realizes) {
    auto outcome = trial.assert_prop(p, Strength::kLinguistic, event.id);
    if (outcome.conflict) return contradiction(*outcome.conflict);
  }
  try {
    trial.closure();
  } catch (const ConflictDetected& e) {
    return contradiction(e.clashes().front());
  }
  return std::nullopt;
}

bool conflicts_with(const DiscourseState& state, const ConflictEvidence& conflict,
                    const UtteranceEvent& prev) {
  if (conflict.kind == ConflictKind::kExplicitRejection) return conflict.rejected == prev.id;
  if (!conflict.clash) return false;
  for (const auto& lit : {conflict.clash->positive, conflict.clash->negative}) {
    for (const auto& p : prev.realizes) {
      if (p == Proposition(lit)) return true;
    }
    auto entry = state.context.find_live(lit);
    if (!entry) continue;
    for (auto leaf : state.context.leaf_premises(*entry)) {
      const auto& sources = state.context.entry(leaf).sources;
      if (std::find(sources.begin(), sources.end(), prev.id) != sources.end()) return true;
    }
  }
  return false;
}

AcceptanceOutcome evaluate_acceptance(DiscourseState& state, const UtteranceEvent& prev,
                                      const UtteranceEvent& next) {
  if (next.turn <= prev.turn) {
    throw Error(ErrorKind::kOrderingViolation,
                next.id.str() + " (turn " + std::to_string(next.turn) + ") does not follow " +
                    prev.id.str() + " (turn " + std::to_string(prev.turn) + ")");
  }
  AcceptanceOutcome out;
  out.about = prev.id;
  if (next.speaker != prev.addressee || prev.interrupted) return out;

  if (effective_act(next, state.lexicon) == Act::kAffirmation) {
    out.kind = AcceptanceOutcome::Kind::kLinguistic;
    out.beliefs = accept_content(state, prev, next, Strength::kLinguistic);
    unblock(state, prev.id);
    return out;
  }

  auto conflict = detect_conflict(state, next);
  if (conflict && conflicts_with(state, *conflict, prev)) {
    remember(state, *conflict);
    out.kind = AcceptanceOutcome::Kind::kRejected;
    out.conflict = std::move(conflict);
    unblock(state, prev.id);
    return out;
  }

  auto cls = state.classes.count(next.id) ? state.classes.at(next.id) : classify_iru(next, state);
  if (cls != IruClass::kNone && next.intonation == Intonation::kRising) {
    if (std::find(state.blocked.begin(), state.blocked.end(), prev.id) == state.blocked.end()) {
      state.blocked.push_back(prev.id);
    }
    out.kind = AcceptanceOutcome::Kind::kBlocked;
    out.conflict = ConflictEvidence{next.id, ConflictKind::kRisingIru, std::nullopt, std::nullopt, {},
                                    Strength::kLinguistic};
    return out;
  }

  // A discrepancy about something else is still no sign of acceptance.
  if (conflict) {
    remember(state, *conflict);
    out.kind = AcceptanceOutcome::Kind::kNone;
    out.conflict = std::move(conflict);
    return out;
  }

  unblock(state, prev.id);
  if (state.require_acceptance && !prev.realizes.empty()) {
    out.kind = AcceptanceOutcome::Kind::kDefault;
    out.beliefs = accept_content(state, prev, next, Strength::kDefault);
  } else {
    out.kind = AcceptanceOutcome::Kind::kNone;
  }
  return out;
}

RetractionReport defeat(DiscourseState& state, NodeRef target, const ConflictEvidence& by) {
  if (target.kind == NodeKind::kUtterance || !state.is_live(target)) {
    throw Error(ErrorKind::kInvalidArgument, to_string(target) + " is not a live belief");
  }
  auto held = state.strength_of(target);
  if (!defeats(by.strength, held)) {
    throw Error(ErrorKind::kDefeatRejected,
                std::string(to_string(by.strength)) + " evidence cannot defeat " +
                    std::string(to_string(held)) + " belief " + to_string(target));
  }

  std::map<NodeRef, std::vector<NodeRef>> dependents;
  for (auto node : state.nodes()) {
    if (!state.is_live(node)) continue;
    for (auto d : state.dependencies(node)) dependents[d].push_back(node);
  }

  RetractionReport report{target, by, {}};
  std::set<NodeRef> seen{target};
  std::deque<NodeRef> queue{target};
  while (!queue.empty()) {
    auto node = queue.front();
    queue.pop_front();
    report.defeated.push_back(node);
    for (auto next : dependents[node]) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  for (auto node : report.defeated) {
    switch (node.kind) {
      case NodeKind::kEntry: state.context.mark_defeated(EntryId{node.index}); break;
      case NodeKind::kAcceptance: state.acceptances[node.index].status = BeliefStatus::kDefeated; break;
      case NodeKind::kSupport: state.supports[node.index].status = BeliefStatus::kDefeated; break;
      case NodeKind::kUtterance: break;
    }
  }
  state.propagate_defeat();
  state.retractions.push_back(report);
  return report;
}

const SupportLink& record_support(DiscourseState& state, const Proposition& belief,
                                  const Proposition& goal) {
  if (belief == goal) {
    throw Error(ErrorKind::kInvalidArgument, "a proposition cannot support itself");
  }
  auto belief_entry = state.context.find_live(belief);
  auto goal_entry = state.context.find_live(goal);
  if (!belief_entry || !goal_entry) {
    throw Error(ErrorKind::kUnknownProposition,
                "support " + to_string(belief) + " => " + to_string(goal) +
                    " names a proposition not in the context");
  }
  for (const auto& s : state.supports) {
    if (s.status == BeliefStatus::kLive && s.belief == belief && s.goal == goal) return s;
  }
  state.supports.push_back(SupportLink{static_cast<std::uint32_t>(state.supports.size()), belief, goal,
                                      {NodeRef::entry(*belief_entry)}, BeliefStatus::kLive});
  for (auto a : state.live_acceptances_of(goal)) {
    state.acceptances[a].dependencies.insert(NodeRef::support(state.supports.back().id));
  }
  return state.supports.back();
}

}  // namespace iru
