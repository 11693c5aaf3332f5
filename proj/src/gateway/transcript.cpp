#include "jtgen/gateway/transcript.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>

#include "jtgen/support/fs.hpp"
#include "jtgen/support/strings.hpp"

namespace jtgen::gateway {

using nlohmann::json;

namespace {

json response_to_json(const std::string& key, const CompletionResponse& r) {
    return json{{"key", key},
                {"content", r.content},
                {"finish_reason", to_string(r.finish_reason)},
                {"prompt_tokens", r.prompt_tokens},
                {"completion_tokens", r.completion_tokens}};
}

CompletionResponse response_from_json(const json& j) {
    CompletionResponse r;
    r.content = j.value("content", "");
    r.finish_reason = finish_reason_from_string(j.value("finish_reason", "stop"));
    r.prompt_tokens = j.value("prompt_tokens", 0);
    r.completion_tokens = j.value("completion_tokens", 0);
    return r;
}

}  // namespace

bool Transcript::record(const std::string& request_key, const CompletionResponse& response) {
    auto [it, inserted] = entries_.insert_or_assign(request_key, response);
    (void)it;
    if (inserted) order_.push_back(request_key);
    return inserted;
}

std::optional<CompletionResponse> Transcript::find(const std::string& request_key) const {
    auto it = entries_.find(request_key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

Transcript Transcript::load(const std::filesystem::path& path) {
    Transcript t;
    std::string text = fs::read_file(path);
    bool saw_meta = false;
    for (const auto& line : strings::split_lines(text)) {
        if (strings::trim(line).empty()) continue;
        json j = json::parse(line);
        if (!saw_meta && j.contains("transcript_version")) {
            t.metadata_.model_id = j.value("model_id", "");
            t.metadata_.created = j.value("created", "");
            t.metadata_.template_version = j.value("template_version", "");
            saw_meta = true;
            continue;
        }
        t.record(j.at("key").get<std::string>(), response_from_json(j));
    }
    return t;
}

void Transcript::save(const std::filesystem::path& path) const {
    std::string out;
    json meta{{"transcript_version", 1},
              {"model_id", metadata_.model_id},
              {"created", metadata_.created},
              {"template_version", metadata_.template_version}};
    out += meta.dump();
    out += '\n';
    for (const auto& key : order_) {
        out += response_to_json(key, entries_.at(key)).dump();
        out += '\n';
    }
    fs::write_file(path, out);
}

CompletionResponse ReplayGateway::complete(const CompletionRequest& request) {
    auto found = transcript_.find(request.request_key());
    if (!found) throw TranscriptMiss(request.request_key());
    return *found;
}

RecordingGateway::RecordingGateway(std::shared_ptr<Gateway> inner,
                                   Transcript::Metadata metadata,
                                   std::filesystem::path out_path)
    : inner_(std::move(inner)), transcript_(std::move(metadata)), out_path_(std::move(out_path)) {}

CompletionResponse RecordingGateway::complete(const CompletionRequest& request) {
    CompletionResponse response = inner_->complete(request);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!transcript_.record(request.request_key(), response)) {
        std::cerr << "warning: overwriting transcript entry " << request.request_key() << "\n";
    }
    transcript_.save(out_path_);
    return response;
}

}  // namespace jtgen::gateway
