#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jtgen/pipeline/session.hpp"

namespace jtgen::pipeline {

std::string outcome_to_json_line(const Outcome& outcome);
Outcome outcome_from_json_line(const std::string& line);  // throws on malformed input

// One line appended per finished session; a crashed corpus run resumes by
// skipping signatures already present.
void append_record(const std::filesystem::path& records_file, const Outcome& outcome);

struct LoadedRecords {
    std::vector<Outcome> outcomes;
    int skipped = 0;  // malformed lines, counted for the report footer
};

LoadedRecords load_records(const std::filesystem::path& records_file);

}  // namespace jtgen::pipeline
