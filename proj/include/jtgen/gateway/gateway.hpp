#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "jtgen/support/errors.hpp"

namespace jtgen::gateway {

enum class Role { System, User, Assistant };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

struct Message {
    Role role = Role::User;
    std::string content;
};

struct CompletionRequest {
    std::vector<Message> messages;
    std::string model_id;
    double temperature = 0.0;
    int max_tokens = 4096;

    // Stable digest of (messages, model_id). Sampling parameters are
    // deliberately excluded so recorded transcripts survive config drift.
    std::string request_key() const;
};

enum class FinishReason { Stop, Length, Error };

std::string to_string(FinishReason reason);
FinishReason finish_reason_from_string(const std::string& s);

struct CompletionResponse {
    std::string content;
    FinishReason finish_reason = FinishReason::Stop;
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

class GatewayError : public Error {
public:
    using Error::Error;
};

class RateLimited : public GatewayError {
public:
    using GatewayError::GatewayError;
};

class TokenOverflow : public GatewayError {
public:
    using GatewayError::GatewayError;
};

class TransportError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

class TranscriptMiss : public GatewayError {
public:
    explicit TranscriptMiss(const std::string& key)
        : GatewayError("no transcript entry for request key " + key), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// Uniform completion interface. Implementations must be safe to share
// across concurrent sessions.
class Gateway {
public:
    virtual ~Gateway() = default;
    virtual CompletionResponse complete(const CompletionRequest& request) = 0;
};

// Scripted backend for tests: returns canned responses in order. Keeps a
// log of every request so budget laws can be asserted from the call record.
class StubGateway : public Gateway {
public:
    // `responder` maps (request, call index) to a response; the default
    // replays the scripted list, repeating the final entry.
    StubGateway() = default;
    explicit StubGateway(std::vector<CompletionResponse> script)
        : script_(std::move(script)) {}

    void set_responder(
        std::function<CompletionResponse(const CompletionRequest&, std::size_t)> responder) {
        responder_ = std::move(responder);
    }

    CompletionResponse complete(const CompletionRequest& request) override;

    std::size_t call_count() const;
    std::vector<CompletionRequest> calls() const;

private:
    mutable std::mutex mutex_;
    std::vector<CompletionResponse> script_;
    std::function<CompletionResponse(const CompletionRequest&, std::size_t)> responder_;
    std::vector<CompletionRequest> calls_;
};

}  // namespace jtgen::gateway
