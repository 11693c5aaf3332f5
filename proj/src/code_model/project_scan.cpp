#include "jtgen/code_model/project_scan.hpp"

#include "jtgen/code_model/parser.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/glob.hpp"

namespace jtgen::code_model {

ProjectCorpus scan_project(const std::filesystem::path& root,
                           const std::vector<std::string>& exclusion_globs) {
    ProjectCorpus corpus;
    for (const auto& file : fs::list_files(root, ".java")) {
        std::string rel = file.lexically_relative(root).generic_string();
        if (glob::matches_any(exclusion_globs, rel)) continue;
        try {
            std::string source = fs::read_file(file);
            auto classes = parse_compilation_unit(source, file.string());
            for (auto& c : classes) corpus.classes.push_back(std::move(c));
        } catch (const ParseError& e) {
            corpus.diagnostics.push_back({file.string(), e.what()});
        } catch (const Error& e) {
            corpus.diagnostics.push_back({file.string(), e.what()});
        }
    }
    return corpus;
}

}  // namespace jtgen::code_model
