#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace jtgen::prompts {

// Prompt templates live as external text files with {{name}} placeholders.
// The shipped defaults are versioned with the repo; recorded transcripts
// depend on their exact bytes, so the set digest is carried in transcript
// metadata.
class TemplateSet {
public:
    static TemplateSet load(const std::filesystem::path& dir);

    const std::string& get(const std::string& name) const;
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }

    // Digest over the sorted (name, content) pairs.
    std::string version() const;

private:
    std::map<std::string, std::string> by_name_;
};

// Replaces every {{key}} with vars.at(key). Throws ConfigError when the
// template references a key the caller did not supply.
std::string render(const std::string& template_text,
                   const std::map<std::string, std::string>& vars);

}  // namespace jtgen::prompts
