#include "iru/evidence.hpp"

#include <algorithm>

#include "iru/error.hpp"

namespace iru {

namespace {
constexpr std::array<std::string_view, 5> kLabels = {"hypothesis", "default", "inference",
                                                     "linguistic", "physical"};
}

std::string_view to_string(Strength s) noexcept { return kLabels[static_cast<std::size_t>(s)]; }

std::optional<Strength> parse_strength(std::string_view label) noexcept {
  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    if (kLabels[i] == label) return static_cast<Strength>(i);
  }
  return std::nullopt;
}

Strength min_strength(std::span<const Strength> strengths) {
  if (strengths.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "min_strength of an empty assumption set");
  }
  return *std::min_element(strengths.begin(), strengths.end());
}

Strength min_strength(std::initializer_list<Strength> strengths) {
  return min_strength(std::span<const Strength>(strengths.begin(), strengths.size()));
}

}  // namespace iru
