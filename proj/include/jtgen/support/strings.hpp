#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jtgen::strings {

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);
bool contains(std::string_view s, std::string_view needle);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_lines(std::string_view s);  // keeps no terminators

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

// Count non-overlapping occurrences of `needle`.
std::size_t count_occurrences(std::string_view s, std::string_view needle);

// Rough token estimate for prompt budgeting: ceil(bytes / 4).
std::size_t approx_tokens(std::string_view s);

}  // namespace jtgen::strings
