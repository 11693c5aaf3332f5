#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"

namespace jtgen::code_model {

struct ScanDiagnostic {
    std::string path;
    std::string message;
};

struct ProjectCorpus {
    std::vector<SourceClass> classes;
    std::vector<ScanDiagnostic> diagnostics;  // files skipped with reasons
};

// Parses every .java file under `root`, skipping paths (relative to root)
// that match an exclusion glob. Files that fail to parse are skipped and
// reported; distinct files are independent.
ProjectCorpus scan_project(const std::filesystem::path& root,
                           const std::vector<std::string>& exclusion_globs);

}  // namespace jtgen::code_model
