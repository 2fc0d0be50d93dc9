#pragma once

// Evidence-strength lattice and the weakest-link combination law.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>

namespace iru {

/// Source-ordered evidence label. A stronger label is less defeasible.
/// The order is total: hypothesis < default < inference < linguistic < physical.
///
/// `kPhysical` is reserved; no operation in this library produces it.
enum class Strength : std::uint8_t {
  kHypothesis = 0,
  kDefault = 1,
  kInference = 2,
  kLinguistic = 3,
  kPhysical = 4,
};

inline constexpr std::array<Strength, 5> kAllStrengths = {
    Strength::kHypothesis, Strength::kDefault, Strength::kInference,
    Strength::kLinguistic, Strength::kPhysical};

/// Lowercase lattice label, e.g. "linguistic".
std::string_view to_string(Strength s) noexcept;
std::optional<Strength> parse_strength(std::string_view label) noexcept;

/// Weakest link: the strength of anything resting on `strengths` is their
/// minimum. Throws Error(kInvalidArgument) on an empty list.
Strength min_strength(std::span<const Strength> strengths);
Strength min_strength(std::initializer_list<Strength> strengths);

/// True iff `a` is strictly stronger than `b`.
constexpr bool defeats(Strength a, Strength b) noexcept { return a > b; }

constexpr Strength max_strength(Strength a, Strength b) noexcept { return a < b ? b : a; }

}  // namespace iru
