#include "jtgen/prompts/templates.hpp"

#include "jtgen/support/errors.hpp"
#include "jtgen/support/fs.hpp"
#include "jtgen/support/hash.hpp"

namespace jtgen::prompts {

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
    TemplateSet set;
    if (!std::filesystem::exists(dir)) {
        throw ConfigError("prompt template directory not found: " + dir.string());
    }
    for (const auto& file : fs::list_files(dir, ".txt")) {
        set.by_name_[file.stem().string()] = fs::read_file(file);
    }
    if (set.by_name_.empty()) {
        throw ConfigError("no .txt templates under " + dir.string());
    }
    return set;
}

const std::string& TemplateSet::get(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw ConfigError("missing prompt template: " + name);
    return it->second;
}

std::string TemplateSet::version() const {
    std::uint64_t h = hash::fnv1a64("templates-v1");
    for (const auto& [name, content] : by_name_) {
        h = hash::fnv1a64(name, h);
        h = hash::fnv1a64("\x1f", h);
        h = hash::fnv1a64(content, h);
    }
    return hash::to_hex(h);
}

std::string render(const std::string& template_text,
                   const std::map<std::string, std::string>& vars) {
    std::string out;
    out.reserve(template_text.size());
    std::size_t pos = 0;
    for (;;) {
        std::size_t open = template_text.find("{{", pos);
        if (open == std::string::npos) {
            out.append(template_text, pos, std::string::npos);
            return out;
        }
        std::size_t close = template_text.find("}}", open + 2);
        if (close == std::string::npos) {
            out.append(template_text, pos, std::string::npos);
            return out;
        }
        out.append(template_text, pos, open - pos);
        std::string key = template_text.substr(open + 2, close - open - 2);
        auto it = vars.find(key);
        if (it == vars.end()) throw ConfigError("unresolved template placeholder: " + key);
        out += it->second;
        pos = close + 2;
    }
}

}  // namespace jtgen::prompts
