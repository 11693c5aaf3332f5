#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jtgen/gateway/gateway.hpp"

namespace jtgen::gateway {

// Ordered request_key -> response store, persisted as newline-delimited
// JSON. The first line is a metadata record.
class Transcript {
public:
    struct Metadata {
        std::string model_id;
        std::string created;           // ISO-8601, informational only
        std::string template_version;  // digest of the prompt templates in use
    };

    Transcript() = default;
    explicit Transcript(Metadata metadata) : metadata_(std::move(metadata)) {}

    // Returns true when the key was new, false when an existing entry was
    // overwritten (callers should warn on overwrite).
    bool record(const std::string& request_key, const CompletionResponse& response);

    std::optional<CompletionResponse> find(const std::string& request_key) const;

    std::size_t size() const { return order_.size(); }
    const Metadata& metadata() const { return metadata_; }

    static Transcript load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

private:
    Metadata metadata_;
    std::map<std::string, CompletionResponse> entries_;
    std::vector<std::string> order_;
};

// Deterministic playback of a recorded run. A lookup miss throws
// TranscriptMiss; there is no silent fallback.
class ReplayGateway : public Gateway {
public:
    explicit ReplayGateway(Transcript transcript) : transcript_(std::move(transcript)) {}

    CompletionResponse complete(const CompletionRequest& request) override;

private:
    Transcript transcript_;
};

// Wraps a live backend and records every exchange, flushing the transcript
// file after each call so a crashed run still leaves a usable recording.
class RecordingGateway : public Gateway {
public:
    RecordingGateway(std::shared_ptr<Gateway> inner, Transcript::Metadata metadata,
                     std::filesystem::path out_path);

    CompletionResponse complete(const CompletionRequest& request) override;

    const Transcript& transcript() const { return transcript_; }

private:
    std::shared_ptr<Gateway> inner_;
    Transcript transcript_;
    std::filesystem::path out_path_;
    std::mutex mutex_;
};

}  // namespace jtgen::gateway
