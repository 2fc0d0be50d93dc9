#include "iru/context.hpp"

#include <algorithm>
#include <deque>

namespace iru {

namespace {

struct DirectedRule {
  Rule rule;
  EntryId source;
};

struct Candidate {
  Literal literal;
  Strength strength = Strength::kHypothesis;
  std::vector<EntryId> deps;  // sorted, unique
};

// Strongest derivation first; ties go to the lexicographically earliest
// premise ids, then to literal order.
bool better(const Candidate& a, const Candidate& b) {
  if (a.strength != b.strength) return a.strength > b.strength;
  if (a.deps != b.deps) return a.deps < b.deps;
  return a.literal < b.literal;
}

void add_clash(std::vector<Clash>& clashes, const Literal& l) {
  Clash c = l.positive ? Clash{l, l.negated()} : Clash{l.negated(), l};
  if (std::find(clashes.begin(), clashes.end(), c) == clashes.end()) clashes.push_back(c);
}

}  // namespace

std::string ContextEntry::source_label() const {
  return sources.empty() ? std::string("derived") : sources.front().str();
}

std::string to_string(const Clash& c) { return to_string(c.positive) + " vs " + to_string(c.negative); }

namespace {
std::string describe(const std::vector<Clash>& clashes) {
  std::string out = "contradictory literals:";
  for (const auto& c : clashes) out += " {" + to_string(c) + "}";
  return out;
}
}  // namespace

ConflictDetected::ConflictDetected(std::vector<Clash> clashes)
    : Error(ErrorKind::kConflictDetected, describe(clashes)), clashes_(std::move(clashes)) {}

EntryId Context::add_entry(Proposition p, Strength s) {
  EntryId id{static_cast<std::uint32_t>(entries_.size())};
  index_.insert_or_assign(p, id);
  entries_.push_back(ContextEntry{id, std::move(p), s, {}, {}, false});
  return id;
}

const ContextEntry& Context::entry(EntryId id) const {
  if (id.value >= entries_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "no context entry e" + std::to_string(id.value));
  }
  return entries_[id.value];
}

std::optional<EntryId> Context::find_live(const Proposition& p) const {
  auto it = index_.find(p);
  if (it == index_.end() || entries_[it->second.value].defeated) return std::nullopt;
  return it->second;
}

std::set<Literal> Context::live_literals() const {
  std::set<Literal> out;
  for (const auto& e : entries_) {
    if (!e.live()) continue;
    if (const auto* l = e.proposition.as_literal()) out.insert(*l);
  }
  return out;
}

AssertOutcome Context::assert_prop(const Proposition& p, Strength strength,
                                   const UtteranceId& source) {
  AssertOutcome outcome;
  if (const auto* lit = p.as_literal()) {
    if (auto contrary = find_live(lit->negated())) {
      if (entries_[contrary->value].strength >= strength) {
        outcome.conflict = lit->positive ? Clash{*lit, lit->negated()} : Clash{lit->negated(), *lit};
        return outcome;
      }
      outcome.defeated = mark_defeated(*contrary);
    }
  }

  if (auto existing = find_live(p)) {
    auto& e = mutable_entry(*existing);
    if (!e.asserted()) e.dependencies.clear();
    e.strength = max_strength(e.strength, strength);
    if (std::find(e.sources.begin(), e.sources.end(), source) == e.sources.end()) {
      e.sources.push_back(source);
    }
    outcome.entry = *existing;
  } else {
    auto id = add_entry(p, strength);
    entries_[id.value].sources.push_back(source);
    outcome.entry = id;
  }
  dirty_ = true;
  return outcome;
}

std::vector<EntryId> Context::mark_defeated(EntryId root) {
  std::vector<EntryId> defeated;
  if (root.value >= entries_.size() || entries_[root.value].defeated) return defeated;

  std::map<EntryId, std::vector<EntryId>> dependents;
  for (const auto& e : entries_) {
    for (auto d : e.dependencies) dependents[d].push_back(e.id);
  }
  std::deque<EntryId> queue{root};
  entries_[root.value].defeated = true;
  while (!queue.empty()) {
    auto id = queue.front();
    queue.pop_front();
    defeated.push_back(id);
    for (auto dep : dependents[id]) {
      auto& e = entries_[dep.value];
      if (e.defeated) continue;
      e.defeated = true;
      queue.push_back(dep);
    }
  }
  dirty_ = true;
  return defeated;
}

std::set<Literal> Context::closure() {
  Context work = *this;

  std::map<Literal, EntryId> held;
  std::vector<DirectedRule> rules;
  std::set<std::string> atoms;
  for (const auto& e : work.entries_) {
    if (!e.live()) continue;
    for (auto& a : e.proposition.atoms()) atoms.insert(std::move(a));
    if (!e.asserted()) continue;
    if (const auto* l = e.proposition.as_literal()) {
      held.emplace(*l, e.id);
    } else {
      for (auto& r : expand_rules(e.proposition)) rules.push_back({std::move(r), e.id});
    }
  }

  auto strength_of = [&](EntryId id) { return work.entries_[id.value].strength; };
  auto make_candidate = [&](Literal l, std::set<EntryId> deps) {
    Candidate c{std::move(l), Strength::kInference, {deps.begin(), deps.end()}};
    for (auto d : c.deps) c.strength = std::min(c.strength, strength_of(d));
    return c;
  };

  std::set<EntryId> refreshed;
  auto finalize = [&](const Candidate& c) {
    EntryId id;
    auto it = work.index_.find(Proposition(c.literal));
    if (it != work.index_.end() && !work.entries_[it->second.value].asserted()) {
      id = it->second;
    } else {
      id = work.add_entry(c.literal, c.strength);
    }
    auto& e = work.entries_[id.value];
    e.strength = c.strength;
    e.dependencies = {c.deps.begin(), c.deps.end()};
    e.defeated = false;
    held.emplace(c.literal, id);
    refreshed.insert(id);
  };

  std::vector<Clash> clashes;
  for (;;) {
    // Forward chaining, strongest candidate first.
    for (;;) {
      std::optional<Candidate> best;
      for (const auto& dr : rules) {
        const auto& cons = dr.rule.consequent;
        if (held.count(cons)) continue;
        std::set<EntryId> deps{dr.source};
        bool fires = true;
        for (const auto& a : dr.rule.antecedents) {
          auto h = held.find(a);
          if (h == held.end()) {
            fires = false;
            break;
          }
          deps.insert(h->second);
        }
        if (!fires) continue;
        if (held.count(cons.negated())) {
          add_clash(clashes, cons);
          continue;
        }
        auto c = make_candidate(cons, std::move(deps));
        if (!best || better(c, *best)) best = std::move(c);
      }
      if (!best) break;
      finalize(*best);
    }
    if (!clashes.empty()) throw ConflictDetected(std::move(clashes));

    // Refutation: derive l when assuming !l propagates to a contradiction.
    std::optional<Candidate> best;
    for (const auto& atom : atoms) {
      for (bool positive : {true, false}) {
        Literal goal{atom, positive};
        if (held.count(goal) || held.count(goal.negated())) continue;

        std::map<Literal, const DirectedRule*> local{{goal.negated(), nullptr}};
        auto known = [&](const Literal& x) { return held.count(x) || local.count(x); };
        std::optional<Literal> clash_at;
        for (bool changed = true; changed && !clash_at;) {
          changed = false;
          for (const auto& dr : rules) {
            const auto& cons = dr.rule.consequent;
            if (known(cons)) continue;
            if (!std::all_of(dr.rule.antecedents.begin(), dr.rule.antecedents.end(), known)) continue;
            local.emplace(cons, &dr);
            changed = true;
            if (known(cons.negated())) {
              clash_at = cons;
              break;
            }
          }
        }
        if (!clash_at) continue;

        std::set<EntryId> deps;
        std::set<Literal> visited;
        std::vector<Literal> stack{*clash_at, clash_at->negated()};
        while (!stack.empty()) {
          auto x = stack.back();
          stack.pop_back();
          if (!visited.insert(x).second) continue;
          if (auto h = held.find(x); h != held.end()) {
            deps.insert(h->second);
            continue;
          }
          const DirectedRule* why = local.at(x);
          if (why == nullptr) continue;  // the refuted assumption
          deps.insert(why->source);
          for (const auto& a : why->rule.antecedents) stack.push_back(a);
        }
        auto c = make_candidate(goal, std::move(deps));
        if (!best || better(c, *best)) best = std::move(c);
      }
    }
    if (!best) break;
    finalize(*best);
  }

  // Derived entries that no longer follow from live premises.
  std::vector<EntryId> stale;
  for (const auto& e : work.entries_) {
    if (e.live() && !e.asserted() && !refreshed.count(e.id)) stale.push_back(e.id);
  }
  for (auto id : stale) work.mark_defeated(id);

  work.dirty_ = false;
  *this = std::move(work);

  std::set<Literal> out;
  for (const auto& [lit, id] : held) {
    if (entries_[id.value].live()) out.insert(lit);
  }
  return out;
}

std::vector<EntryId> Context::leaf_premises(EntryId id) const {
  std::set<EntryId> leaves;
  std::set<EntryId> seen;
  std::vector<EntryId> stack{id};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    const auto& e = entry(cur);
    if (e.asserted()) {
      leaves.insert(cur);
      continue;
    }
    stack.insert(stack.end(), e.dependencies.begin(), e.dependencies.end());
  }
  return {leaves.begin(), leaves.end()};
}

std::vector<EntryId> Context::literal_premises(EntryId id) const {
  std::vector<EntryId> out;
  for (auto d : entry(id).dependencies) {
    if (entry(d).proposition.is_literal()) out.push_back(d);
  }
  return out;
}

RedundancyVerdict Context::is_redundant(const Proposition& p) const {
  const Context* ctx = this;
  Context closed;
  if (dirty_) {
    closed = *this;
    try {
      closed.closure();
    } catch (const ConflictDetected&) {
      // An inconsistent context still answers `said` queries.
    }
    ctx = &closed;
  }

  RedundancyVerdict verdict;
  auto id = ctx->find_live(p);
  if (!id) return verdict;
  const auto& e = ctx->entry(*id);
  verdict.entry = id;
  if (e.asserted()) {
    verdict.kind = RedundancyVerdict::Kind::kSaid;
    verdict.antecedents = e.sources;
    return verdict;
  }
  verdict.kind = RedundancyVerdict::Kind::kEntailed;
  for (auto leaf : ctx->leaf_premises(*id)) {
    for (const auto& u : ctx->entry(leaf).sources) {
      if (std::find(verdict.antecedents.begin(), verdict.antecedents.end(), u) ==
          verdict.antecedents.end()) {
        verdict.antecedents.push_back(u);
      }
    }
  }
  return verdict;
}

}  // namespace iru
