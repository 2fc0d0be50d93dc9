#include "iru/discourse_state.hpp"

#include <algorithm>

#include "iru/error.hpp"

namespace iru {

std::string to_string(NodeRef ref) {
  constexpr char kPrefix[] = {'e', 'a', 's', 't'};
  return kPrefix[static_cast<std::size_t>(ref.kind)] + std::to_string(ref.index);
}

DiscourseState::DiscourseState(std::array<ParticipantId, 2> who, bool acceptance_required,
                               AffirmationLexicon affirmations)
    : participants(std::move(who)),
      require_acceptance(acceptance_required),
      lexicon(std::move(affirmations)) {}

const UtteranceEvent* DiscourseState::find_event(const UtteranceId& id) const {
  auto it = event_index.find(id);
  return it == event_index.end() ? nullptr : &events[it->second];
}

std::uint32_t DiscourseState::position_of(const UtteranceId& id) const {
  auto it = event_index.find(id);
  if (it == event_index.end()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown utterance " + id.str());
  }
  return static_cast<std::uint32_t>(it->second);
}

std::string DiscourseState::label(NodeRef node) const {
  if (node.kind == NodeKind::kUtterance && node.index < events.size()) {
    return events[node.index].id.str();
  }
  return to_string(node);
}

std::vector<NodeRef> DiscourseState::nodes() const {
  std::vector<NodeRef> out;
  for (const auto& e : context.entries()) out.push_back(NodeRef::entry(e.id));
  for (const auto& a : acceptances) out.push_back(NodeRef::acceptance(a.id));
  for (const auto& s : supports) out.push_back(NodeRef::support(s.id));
  return out;
}

std::set<NodeRef> DiscourseState::dependencies(NodeRef node) const {
  std::set<NodeRef> deps;
  switch (node.kind) {
    case NodeKind::kEntry: {
      EntryId id{node.index};
      for (auto d : context.entry(id).dependencies) deps.insert(NodeRef::entry(d));
      if (auto it = entry_dependencies.find(id); it != entry_dependencies.end()) {
        deps.insert(it->second.begin(), it->second.end());
      }
      break;
    }
    case NodeKind::kAcceptance:
      deps = acceptances.at(node.index).dependencies;
      break;
    case NodeKind::kSupport:
      deps = supports.at(node.index).dependencies;
      break;
    case NodeKind::kUtterance:
      break;
  }
  return deps;
}

bool DiscourseState::is_live(NodeRef node) const {
  switch (node.kind) {
    case NodeKind::kEntry:
      return node.index < context.entries().size() && context.entry(EntryId{node.index}).live();
    case NodeKind::kAcceptance:
      return node.index < acceptances.size() &&
             acceptances[node.index].status == BeliefStatus::kLive;
    case NodeKind::kSupport:
      return node.index < supports.size() && supports[node.index].status == BeliefStatus::kLive;
    case NodeKind::kUtterance:
      return node.index < events.size();
  }
  return false;
}

Strength DiscourseState::strength_of(NodeRef node) const {
  switch (node.kind) {
    case NodeKind::kEntry:
      return context.entry(EntryId{node.index}).strength;
    case NodeKind::kAcceptance:
      if (node.index < acceptances.size()) return acceptances[node.index].strength;
      break;
    case NodeKind::kSupport:
      if (node.index < supports.size()) {
        // A support link is as strong as its weakest live premise.
        std::vector<Strength> s;
        for (auto d : supports[node.index].dependencies) {
          if (d.kind != NodeKind::kUtterance) s.push_back(strength_of(d));
        }
        return s.empty() ? Strength::kHypothesis : min_strength(s);
      }
      break;
    case NodeKind::kUtterance:
      if (node.index < events.size()) return Strength::kLinguistic;
      break;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown node " + to_string(node));
}

void DiscourseState::add_dependency(NodeRef dependent, NodeRef on) {
  auto known = [&](NodeRef n) {
    switch (n.kind) {
      case NodeKind::kEntry: return n.index < context.entries().size();
      case NodeKind::kAcceptance: return n.index < acceptances.size();
      case NodeKind::kSupport: return n.index < supports.size();
      case NodeKind::kUtterance: return n.index < events.size();
    }
    return false;
  };
  if (!known(dependent) || !known(on) || dependent == on || dependent.kind == NodeKind::kUtterance) {
    throw Error(ErrorKind::kInvalidArgument,
                "bad dependency " + to_string(dependent) + " -> " + to_string(on));
  }
  switch (dependent.kind) {
    case NodeKind::kEntry: entry_dependencies[EntryId{dependent.index}].insert(on); break;
    case NodeKind::kAcceptance: acceptances[dependent.index].dependencies.insert(on); break;
    case NodeKind::kSupport: supports[dependent.index].dependencies.insert(on); break;
    case NodeKind::kUtterance: break;
  }
}

std::vector<NodeRef> DiscourseState::propagate_defeat() {
  std::vector<NodeRef> newly;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto node : nodes()) {
      if (!is_live(node)) continue;
      auto deps = dependencies(node);
      bool broken = std::any_of(deps.begin(), deps.end(), [&](NodeRef d) { return !is_live(d); });
      if (!broken) continue;
      switch (node.kind) {
        case NodeKind::kEntry:
          for (auto id : context.mark_defeated(EntryId{node.index})) newly.push_back(NodeRef::entry(id));
          break;
        case NodeKind::kAcceptance:
          acceptances[node.index].status = BeliefStatus::kDefeated;
          newly.push_back(node);
          break;
        case NodeKind::kSupport:
          supports[node.index].status = BeliefStatus::kDefeated;
          newly.push_back(node);
          break;
        case NodeKind::kUtterance: break;
      }
      changed = true;
    }
  }
  return newly;
}

std::vector<std::uint32_t> DiscourseState::live_acceptances_of(const Proposition& p) const {
  std::vector<std::uint32_t> out;
  for (const auto& a : acceptances) {
    if (a.status == BeliefStatus::kLive && a.proposition == p) out.push_back(a.id);
  }
  return out;
}

}  // namespace iru
