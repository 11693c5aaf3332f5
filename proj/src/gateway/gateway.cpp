#include "jtgen/gateway/gateway.hpp"

#include "jtgen/support/hash.hpp"

namespace jtgen::gateway {

std::string to_string(Role role) {
    switch (role) {
        case Role::System: return "system";
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
    }
    return "user";
}

Role role_from_string(const std::string& s) {
    if (s == "system") return Role::System;
    if (s == "assistant") return Role::Assistant;
    return Role::User;
}

std::string to_string(FinishReason reason) {
    switch (reason) {
        case FinishReason::Stop: return "stop";
        case FinishReason::Length: return "length";
        case FinishReason::Error: return "error";
    }
    return "stop";
}

FinishReason finish_reason_from_string(const std::string& s) {
    if (s == "length") return FinishReason::Length;
    if (s == "error") return FinishReason::Error;
    return FinishReason::Stop;
}

std::string CompletionRequest::request_key() const {
    std::uint64_t h = hash::fnv1a64(model_id);
    for (const auto& m : messages) {
        h = hash::fnv1a64("\x1e", h);
        h = hash::fnv1a64(to_string(m.role), h);
        h = hash::fnv1a64("\x1f", h);
        h = hash::fnv1a64(m.content, h);
    }
    return hash::to_hex(h);
}

CompletionResponse StubGateway::complete(const CompletionRequest& request) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::size_t index = calls_.size();
    calls_.push_back(request);
    if (responder_) return responder_(request, index);
    if (script_.empty()) return CompletionResponse{"", FinishReason::Error, 0, 0};
    return script_[std::min(index, script_.size() - 1)];
}

std::size_t StubGateway::call_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_.size();
}

std::vector<CompletionRequest> StubGateway::calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

}  // namespace jtgen::gateway
