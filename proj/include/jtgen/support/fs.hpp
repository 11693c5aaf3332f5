#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace jtgen::fs {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);
void append_line(const std::filesystem::path& path, const std::string& line);

// All regular files under root with the given extension, sorted by relative
// path so traversal order never depends on directory iteration order.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& root,
                                              const std::string& extension);

}  // namespace jtgen::fs
