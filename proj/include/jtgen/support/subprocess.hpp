#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

namespace jtgen::subprocess {

struct Command {
    std::string program;                      // absolute path or resolved via PATH
    std::vector<std::string> args;            // argv[1..]
    std::filesystem::path working_dir;        // empty = inherit
    std::chrono::milliseconds timeout{0};     // 0 = no timeout
};

struct Result {
    int exit_code = -1;
    bool timed_out = false;
    std::string stdout_text;
    std::string stderr_text;

    bool ok() const { return exit_code == 0 && !timed_out; }
};

// Runs the command to completion, capturing both output streams.
// Throws jtgen::Error when the process cannot be spawned at all.
Result run(const Command& cmd);

// Resolves a program name against PATH; empty string when not found.
std::string find_on_path(const std::string& name);

}  // namespace jtgen::subprocess
