#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jtgen::glob {

// Shell-style glob over '/'-separated paths: `*` matches within a segment,
// `**` matches across segments, `?` matches a single character.
bool matches(std::string_view pattern, std::string_view path);

bool matches_any(const std::vector<std::string>& patterns, std::string_view path);

}  // namespace jtgen::glob
