#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace jtgen::hash {

// FNV-1a, 64-bit. Stable across platforms and runs.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string to_hex(std::uint64_t value);

}  // namespace jtgen::hash
