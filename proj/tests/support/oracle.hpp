#pragma once

// Independent reference checks used by the tests: brute-force truth tables
// and plain graph reachability.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "iru/discourse_state.hpp"
#include "iru/proposition.hpp"

namespace iru::testing {

struct OracleVerdict {
  bool satisfiable = false;
  /// Literals true in every model. Empty when unsatisfiable.
  std::set<Literal> entailed;
  std::size_t models = 0;
};

inline OracleVerdict truth_table(const std::vector<Proposition>& props) {
  std::set<std::string> atom_set;
  for (const auto& p : props) {
    for (auto& a : p.atoms()) atom_set.insert(a);
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > 20) throw std::invalid_argument("too many atoms for a truth table");
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < atoms.size(); ++i) slot[atoms[i]] = i;

  OracleVerdict v;
  std::vector<bool> always_true(atoms.size(), true), always_false(atoms.size(), true);
  const std::uint32_t rows = 1u << atoms.size();
  for (std::uint32_t mask = 0; mask < rows; ++mask) {
    auto value_of = [&](const std::string& atom) { return ((mask >> slot.at(atom)) & 1u) != 0; };
    bool model = true;
    for (const auto& p : props) {
      if (!evaluate(p, value_of)) {
        model = false;
        break;
      }
    }
    if (!model) continue;
    ++v.models;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((mask >> i) & 1u) {
        always_false[i] = false;
      } else {
        always_true[i] = false;
      }
    }
  }
  v.satisfiable = v.models > 0;
  if (v.satisfiable) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (always_true[i]) v.entailed.insert(Literal{atoms[i], true});
      if (always_false[i]) v.entailed.insert(Literal{atoms[i], false});
    }
  }
  return v;
}

/// `root` plus every node from which `root` is reachable along dependency
/// edges, found by breadth-first search over the reversed edge list.
inline std::set<NodeRef> reachable_dependents(const DiscourseState& state, NodeRef root) {
  std::map<NodeRef, std::vector<NodeRef>> dependents;
  for (auto n : state.nodes()) {
    for (auto d : state.dependencies(n)) dependents[d].push_back(n);
  }
  std::set<NodeRef> seen{root};
  std::deque<NodeRef> queue{root};
  while (!queue.empty()) {
    auto n = queue.front();
    queue.pop_front();
    for (auto m : dependents[n]) {
      if (seen.insert(m).second) queue.push_back(m);
    }
  }
  return seen;
}

/// Live nodes with a defeated node somewhere in their dependency closure.
inline std::vector<NodeRef> live_nodes_on_defeated(const DiscourseState& state) {
  std::vector<NodeRef> bad;
  for (auto n : state.nodes()) {
    if (!state.is_live(n)) continue;
    std::set<NodeRef> seen;
    std::deque<NodeRef> queue{n};
    bool hit = false;
    while (!queue.empty() && !hit) {
      auto m = queue.front();
      queue.pop_front();
      for (auto d : state.dependencies(m)) {
        if (d.kind != NodeKind::kUtterance && !state.is_live(d)) hit = true;
        if (seen.insert(d).second) queue.push_back(d);
      }
    }
    if (hit) bad.push_back(n);
  }
  return bad;
}

}  // namespace iru::testing
