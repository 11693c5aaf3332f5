#include "jtgen/steer/intentions.hpp"

#include <map>

#include "jtgen/support/strings.hpp"

namespace jtgen::steer {

std::string mechanical_fallback_description(const BranchPoint& point) {
    if (!point.condition_text.empty()) {
        return "taken when " + point.condition_text + " holds";
    }
    return "reached at the " + to_string(point.kind) + " point on line " +
           std::to_string(point.location.line);
}

namespace {

std::string branch_list_text(const std::vector<BranchPoint>& points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += std::to_string(i + 1) + ". [" + to_string(points[i].kind) + "] " +
               (points[i].condition_text.empty() ? "(line " +
                                                       std::to_string(points[i].location.line) +
                                                       ")"
                                                 : points[i].condition_text);
        out += '\n';
    }
    return out;
}

// "3. some text" -> (3, "some text")
std::map<std::size_t, std::string> parse_numbered_lines(const std::string& text) {
    std::map<std::size_t, std::string> out;
    for (const auto& raw : strings::split_lines(text)) {
        std::string line = strings::trim(raw);
        std::size_t i = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == 0 || i >= line.size()) continue;
        if (line[i] != '.' && line[i] != ')' && line[i] != ':') continue;
        std::string desc = strings::trim(line.substr(i + 1));
        if (desc.empty()) continue;
        out[static_cast<std::size_t>(std::atoi(line.substr(0, i).c_str()))] = desc;
    }
    return out;
}

}  // namespace

std::vector<BranchIntention> infer_branch_intentions(const std::vector<BranchPoint>& points,
                                                     const code_model::MethodInfo& focal,
                                                     IntentionDeps& deps) {
    std::vector<BranchIntention> out;
    if (points.empty()) return out;

    std::string prompt = prompts::render(deps.templates->get("branch_intentions"),
                                         {{"focal_signature", focal.signature},
                                          {"focal_body", focal.source_text},
                                          {"branch_list", branch_list_text(points)}});
    gateway::CompletionRequest req;
    req.messages = {{gateway::Role::User, prompt}};
    req.model_id = deps.model_id;
    req.max_tokens = deps.max_completion_tokens;
    gateway::CompletionResponse resp = deps.gateway->complete(req);

    auto parsed = parse_numbered_lines(resp.content);
    for (std::size_t i = 0; i < points.size(); ++i) {
        BranchIntention intent;
        intent.branch = points[i];
        auto it = parsed.find(i + 1);
        intent.description =
            it != parsed.end() ? it->second : mechanical_fallback_description(points[i]);
        out.push_back(std::move(intent));
    }
    return out;
}

FunctionIntention summarize_function_intention(const code_model::MethodInfo& focal,
                                               const code_model::SourceClass& cls,
                                               IntentionDeps& deps) {
    std::string prompt = prompts::render(deps.templates->get("function_intention"),
                                         {{"focal_signature", focal.signature},
                                          {"class_name", cls.qualified_name()},
                                          {"focal_body", focal.source_text}});
    gateway::CompletionRequest req;
    req.messages = {{gateway::Role::User, prompt}};
    req.model_id = deps.model_id;
    req.max_tokens = deps.max_completion_tokens;
    gateway::CompletionResponse resp = deps.gateway->complete(req);

    FunctionIntention out;
    for (const auto& raw : strings::split_lines(resp.content)) {
        std::string line = strings::trim(raw);
        if (strings::starts_with(line, "purpose:")) {
            out.purpose = strings::trim(line.substr(8));
        } else if (strings::starts_with(line, "io:")) {
            out.io_behavior = strings::trim(line.substr(3));
        } else if (strings::starts_with(line, "side_effects:")) {
            out.side_effects = strings::trim(line.substr(13));
        } else if (strings::starts_with(line, "corner_cases:")) {
            out.corner_cases = strings::trim(line.substr(13));
        }
    }
    if (out.purpose.empty()) out.purpose = focal.signature;
    return out;
}

}  // namespace jtgen::steer
