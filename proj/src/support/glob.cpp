#include "jtgen/support/glob.hpp"

#include <regex>

namespace jtgen::glob {

namespace {

std::string to_regex(std::string_view pattern) {
    std::string re;
    re.reserve(pattern.size() * 2);
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        switch (c) {
            case '*':
                if (i + 1 < pattern.size() && pattern[i + 1] == '*') {
                    re += ".*";
                    ++i;
                    // swallow a following '/' so "a/**/b" also matches "a/b"
                    if (i + 1 < pattern.size() && pattern[i + 1] == '/') {
                        re += "/?";
                        ++i;
                    }
                } else {
                    re += "[^/]*";
                }
                break;
            case '?':
                re += "[^/]";
                break;
            case '.': case '(': case ')': case '[': case ']': case '{': case '}':
            case '+': case '^': case '$': case '|': case '\\':
                re += '\\';
                re += c;
                break;
            default:
                re += c;
        }
    }
    return re;
}

}  // namespace

bool matches(std::string_view pattern, std::string_view path) {
    std::regex re(to_regex(pattern));
    return std::regex_match(path.begin(), path.end(), re);
}

bool matches_any(const std::vector<std::string>& patterns, std::string_view path) {
    for (const auto& p : patterns) {
        if (matches(p, path)) return true;
    }
    return false;
}

}  // namespace jtgen::glob
