#include "iru/engine.hpp"

#include <algorithm>
#include <set>

#include "iru/error.hpp"

namespace iru {

namespace {

std::vector<std::string> labels(const DiscourseState& state, const std::vector<NodeRef>& nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (auto n : nodes) out.push_back(state.label(n));
  return out;
}

}  // namespace

Engine::Engine(std::array<ParticipantId, 2> participants, bool require_acceptance,
               AffirmationLexicon lexicon)
    : state_(std::move(participants), require_acceptance, std::move(lexicon)) {}

Engine::Engine(const Transcript& header, AffirmationLexicon lexicon)
    : Engine(header.participants, header.require_acceptance, std::move(lexicon)) {}

TraceRecord Engine::process(const UtteranceEvent& event) {
  auto& st = state_;
  auto known = [&](const ParticipantId& p) { return p == st.participants[0] || p == st.participants[1]; };
  if (!known(event.speaker) || !known(event.addressee) || event.speaker == event.addressee) {
    throw Error(ErrorKind::kInvalidArgument,
                event.id.str() + ": speaker and addressee must be the two distinct participants");
  }
  if (last_turn_ && event.turn <= *last_turn_) {
    throw Error(ErrorKind::kOrderingViolation,
                event.id.str() + " has turn " + std::to_string(event.turn) +
                    " after turn " + std::to_string(*last_turn_));
  }
  if (event.rejects && st.find_event(*event.rejects) == nullptr) {
    throw Error(ErrorKind::kDanglingAntecedent,
                event.id.str() + " rejects unknown utterance " + event.rejects->str());
  }
  for (const auto& a : event.antecedents) {
    if (st.find_event(a) == nullptr) {
      throw Error(ErrorKind::kDanglingAntecedent,
                  event.id.str() + " names unknown antecedent " + a.str());
    }
  }

  const UtteranceEvent* prev = st.events.empty() ? nullptr : &st.events.back();
  std::optional<UtteranceEvent> prev_copy;
  if (prev) prev_copy = *prev;

  std::set<EntryId> derived_before;
  for (const auto& e : st.context.entries()) {
    if (e.live() && !e.asserted()) derived_before.insert(e.id);
  }
  const auto acceptances_before = st.acceptances.size();

  open_record(st, event);
  last_turn_ = event.turn;

  TraceRecord trace;
  trace.event = event.id;
  trace.turn = event.turn;
  trace.speaker = event.speaker;
  std::set<std::uint32_t> touched{st.position_of(event.id)};

  // Any reply by the addressee.
  for (std::size_t i = 0; i + 1 < st.events.size(); ++i) {
    const auto& earlier = st.events[i];
    if (earlier.addressee != event.speaker || earlier.interrupted || st.answered.count(earlier.id)) {
      continue;
    }
    auto& rec = st.records.at(earlier.id);
    rec = apply_any_next_upgrade(rec);
    st.answered.insert(earlier.id);
    touched.insert(static_cast<std::uint32_t>(i));
  }

  // Redundant replies.
  auto cls = classify_iru_detailed(event, st);
  st.classes[event.id] = cls.cls;
  trace.iru = cls.cls;
  trace.antecedents = cls.antecedents;
  std::vector<std::pair<Proposition, Proposition>> touched_links;
  if (cls.cls != IruClass::kNone) {
    std::vector<UtteranceId> targets;
    auto consider = [&](const UtteranceId& u) {
      const auto* t = st.find_event(u);
      if (t != nullptr && t->addressee == event.speaker && t->id != event.id &&
          std::find(targets.begin(), targets.end(), u) == targets.end()) {
        targets.push_back(u);
      }
    };
    if (cls.reinforced && cls.reinforced->carrier) consider(*cls.reinforced->carrier);
    for (const auto& a : cls.antecedents) consider(a);
    if (targets.empty() && cls.cls == IruClass::kPrompt) {
      for (auto i = st.events.size() - 1; i-- > 0;) {
        if (st.events[i].addressee == event.speaker) {
          targets.push_back(st.events[i].id);
          break;
        }
      }
    }
    for (const auto& t : targets) {
      auto& rec = st.records.at(t);
      rec = apply_iru_upgrade(rec, cls.cls);
      touched.insert(st.position_of(t));
    }

    if (cls.cls == IruClass::kExplicitInference && cls.entailed_entry && cls.matched) {
      for (auto premise : st.context.literal_premises(*cls.entailed_entry)) {
        LicenseLink link{st.context.entry(premise).proposition, *cls.matched,
                         Strength::kHypothesis, LicenseOrigin::kInferred, std::nullopt};
        const auto& stored = record_license_evidence(st, std::move(link), Strength::kLinguistic);
        touched_links.emplace_back(stored.premise, stored.conclusion);
      }
    }
    if (cls.cls == IruClass::kImplicatureReinforcement && cls.reinforced) {
      const auto& stored = record_license_evidence(st, *cls.reinforced, Strength::kLinguistic);
      touched_links.emplace_back(stored.premise, stored.conclusion);
    }
  }

  // Acceptance of what the speaker was just told, and of blocked content.
  auto conflict = detect_conflict(st, event);
  if (prev_copy) {
    auto out = evaluate_acceptance(st, *prev_copy, event);
    if (out.kind != AcceptanceOutcome::Kind::kNotApplicable) {
      trace.acceptance.push_back({out.kind, out.about, {}});
      for (auto id : out.beliefs) {
        const auto& b = st.acceptances[id];
        trace.acceptance.back().accepted.push_back(
            {to_string(b.proposition), b.agent, b.strength, to_string(NodeRef::acceptance(id))});
      }
    }
  }
  for (auto pending : std::vector<UtteranceId>(st.blocked)) {
    if (prev_copy && pending == prev_copy->id) continue;
    const auto* blocked_event = st.find_event(pending);
    if (blocked_event == nullptr || blocked_event->addressee != event.speaker) continue;
    auto blocked_copy = *blocked_event;
    auto out = evaluate_acceptance(st, blocked_copy, event);
    trace.acceptance.push_back({out.kind, out.about, {}});
    for (auto id : out.beliefs) {
      const auto& b = st.acceptances[id];
      trace.acceptance.back().accepted.push_back(
          {to_string(b.proposition), b.agent, b.strength, to_string(NodeRef::acceptance(id))});
    }
  }

  auto note_retraction = [&](const RetractionReport& r) {
    trace.retractions.push_back(
        {st.label(r.target), r.cause.event, r.cause.kind, labels(st, r.defeated)});
  };

  if (conflict) {
    if (std::find(st.conflicts.begin(), st.conflicts.end(), *conflict) == st.conflicts.end()) {
      st.conflicts.push_back(*conflict);
    }
    trace.conflicts.push_back(*conflict);

    // Discrepancies surfacing late defeat weaker acceptance beliefs.
    std::vector<std::uint32_t> victims;
    for (const auto& a : st.acceptances) {
      if (a.id >= acceptances_before || a.status != BeliefStatus::kLive) continue;
      bool hit = false;
      if (conflict->kind == ConflictKind::kExplicitRejection) {
        hit = conflict->rejected && a.about == *conflict->rejected;
      } else if (conflict->clash) {
        hit = a.proposition == Proposition(conflict->clash->positive) ||
              a.proposition == Proposition(conflict->clash->negative);
      }
      if (hit && defeats(conflict->strength, a.strength)) victims.push_back(a.id);
    }
    for (auto id : victims) {
      if (st.acceptances[id].status != BeliefStatus::kLive) continue;
      note_retraction(defeat(st, NodeRef::acceptance(id), *conflict));
    }
  }

  // Content enters the common ground unless it contradicts it.
  if (effective_act(event, st.lexicon) != Act::kPrompt) {
    for (const auto& p : event.realizes) {
      Context trial = st.context;
      auto out = trial.assert_prop(p, Strength::kLinguistic, event.id);
      bool refused = out.conflict.has_value();
      if (!refused) {
        try {
          trial.closure();
        } catch (const ConflictDetected&) {
          refused = true;
        }
      }
      if (refused) {
        trace.withheld.push_back(to_string(p));
        continue;
      }
      st.context = std::move(trial);
      if (!out.defeated.empty()) {
        const auto* lit = p.as_literal();
        ConflictEvidence cause{event.id, ConflictKind::kContradictoryAssertion,
                               lit->positive ? Clash{*lit, lit->negated()} : Clash{lit->negated(), *lit},
                               std::nullopt, {}, Strength::kLinguistic};
        std::vector<NodeRef> gone;
        for (auto id : out.defeated) gone.push_back(NodeRef::entry(id));
        for (auto n : st.propagate_defeat()) gone.push_back(n);
        RetractionReport report{gone.front(), cause, gone};
        st.retractions.push_back(report);
        note_retraction(report);
      }
    }
  }

  // An implicature whose premise was withheld has nothing to hang on.
  if (event.implicates && st.context.find_live(event.implicates->premise)) {
    LicenseLink link{event.implicates->premise, event.implicates->conclusion, Strength::kHypothesis,
                     LicenseOrigin::kImplicated, event.id};
    const auto& stored = record_license_evidence(st, std::move(link), Strength::kHypothesis);
    touched_links.emplace_back(stored.premise, stored.conclusion);
  }

  for (int guard = 0; guard < 8; ++guard) {
    if (st.context.needs_closure()) st.context.closure();
    if (st.propagate_defeat().empty() && !st.context.needs_closure()) break;
  }

  for (const auto& e : st.context.entries()) {
    if (!e.live() || e.asserted() || derived_before.count(e.id)) continue;
    trace.derived.push_back(to_string(e.proposition) + " [" + std::string(to_string(e.strength)) +
                            "] " + to_string(NodeRef::entry(e.id)));
    for (auto premise : st.context.literal_premises(e.id)) {
      LicenseLink link{st.context.entry(premise).proposition, e.proposition, Strength::kHypothesis,
                       LicenseOrigin::kInferred, std::nullopt};
      const auto& stored = record_license_evidence(st, std::move(link), Strength::kInference);
      touched_links.emplace_back(stored.premise, stored.conclusion);
    }
  }

  if (event.supports) record_support(st, event.supports->belief, event.supports->goal);

  std::set<std::pair<Proposition, Proposition>> seen_links;
  for (const auto& key : touched_links) {
    if (seen_links.insert(key).second) trace.licenses.push_back(render_license(st.licenses.at(key)));
  }
  for (auto pos : touched) trace.records.push_back(snapshot(st.records.at(st.events[pos].id)));
  return trace;
}

std::vector<TraceRecord> replay(const Transcript& transcript, const AffirmationLexicon& lexicon) {
  Engine engine(transcript, lexicon);
  std::vector<TraceRecord> out;
  out.reserve(transcript.events.size());
  for (const auto& e : transcript.events) out.push_back(engine.process(e));
  return out;
}

}  // namespace iru
