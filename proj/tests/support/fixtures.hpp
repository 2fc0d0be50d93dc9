#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "iru/engine.hpp"
#include "iru/trace.hpp"
#include "iru/transcript.hpp"

namespace iru::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(IRU_FIXTURE_DIR) / name;
}

inline Transcript load_fixture(const std::string& name) { return load_transcript(fixture_path(name)); }

inline const std::vector<std::string>& example_fixtures() {
  static const std::vector<std::string> names = {"example1.dlg", "example2.dlg", "example3.dlg",
                                                 "example4.dlg", "example5.dlg", "example6.dlg"};
  return names;
}

/// Feeds the events `engine` has not seen, up to and including `last`;
/// returns that event's trace.
inline TraceRecord run_until(Engine& engine, const Transcript& t, const std::string& last) {
  for (const auto& e : t.events) {
    if (engine.state().find_event(e.id)) continue;
    auto rec = engine.process(e);
    if (e.id.str() == last) return rec;
  }
  throw std::invalid_argument("no event " + last);
}

}  // namespace iru::testing
