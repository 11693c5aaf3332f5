#pragma once

#include <condition_variable>
#include <memory>
#include <mutex>
#include <string>

#include "jtgen/gateway/gateway.hpp"

namespace jtgen::gateway {

struct HttpBackendConfig {
    std::string base_url;                      // e.g. http://localhost:8000
    std::string completions_path = "/v1/chat/completions";
    std::string api_key_env = "JTGEN_API_KEY"; // key is read from the environment only
    int max_in_flight = 4;
    int retries = 3;                           // attempts on transient transport errors
    int retry_base_delay_ms = 250;
    int timeout_seconds = 120;
};

// Live chat-completions backend: messages array in, choices array out.
// Works against hosted and self-hosted services that speak the same wire
// shape. Retries transient failures with exponential backoff; rate-limit
// responses honor a server-provided Retry-After delay.
class HttpGateway : public Gateway {
public:
    explicit HttpGateway(HttpBackendConfig config);
    ~HttpGateway() override;

    CompletionResponse complete(const CompletionRequest& request) override;

private:
    struct Slot;  // in-flight limiter

    HttpBackendConfig config_;
    std::string host_;
    int port_ = 80;
    bool https_ = false;
    std::mutex mutex_;
    std::condition_variable slot_available_;
    int in_flight_ = 0;
};

}  // namespace jtgen::gateway
