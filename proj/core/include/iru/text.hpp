#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iru {

/// Lowercase, drop punctuation, split on whitespace. Apostrophes vanish so
/// "that's" and "thats" normalize alike.
std::vector<std::string> normalize_tokens(std::string_view text);

/// True when `needle` occurs as a contiguous run inside `haystack`.
/// An empty needle never matches.
bool contains_run(std::span<const std::string> haystack, std::span<const std::string> needle);

/// Contiguous containment in either direction.
bool tokens_overlap_as_run(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace iru
