#include "jtgen/support/fs.hpp"

#include <algorithm>
#include <fstream>

#include "jtgen/support/errors.hpp"

namespace jtgen::fs {

namespace stdfs = std::filesystem;

std::string read_file(const stdfs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::string out;
    in.seekg(0, std::ios::end);
    auto n = in.tellg();
    if (n > 0) {
        out.resize(static_cast<std::size_t>(n));
        in.seekg(0, std::ios::beg);
        in.read(out.data(), n);
    }
    if (in.bad()) throw IoError("read failed: " + path.string());
    return out;
}

void write_file(const stdfs::path& path, const std::string& content) {
    if (path.has_parent_path()) stdfs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

void append_line(const stdfs::path& path, const std::string& line) {
    if (path.has_parent_path()) stdfs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot open file for appending: " + path.string());
    out << line << '\n';
    if (!out) throw IoError("append failed: " + path.string());
}

std::vector<stdfs::path> list_files(const stdfs::path& root, const std::string& extension) {
    std::vector<stdfs::path> out;
    if (!stdfs::exists(root)) return out;
    for (const auto& entry : stdfs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == extension) {
            out.push_back(entry.path());
        }
    }
    std::sort(out.begin(), out.end(), [&](const stdfs::path& a, const stdfs::path& b) {
        return a.lexically_relative(root).generic_string() <
               b.lexically_relative(root).generic_string();
    });
    return out;
}

}  // namespace jtgen::fs
