#include "jtgen/gateway/http_backend.hpp"

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <thread>

#include "jtgen/support/strings.hpp"

namespace jtgen::gateway {

using nlohmann::json;

namespace {

struct ParsedUrl {
    bool https = false;
    std::string host;
    int port = 80;
};

ParsedUrl parse_base_url(const std::string& url) {
    ParsedUrl out;
    std::string rest = url;
    if (strings::starts_with(rest, "https://")) {
        out.https = true;
        out.port = 443;
        rest = rest.substr(8);
    } else if (strings::starts_with(rest, "http://")) {
        rest = rest.substr(7);
    }
    if (auto slash = rest.find('/'); slash != std::string::npos) rest = rest.substr(0, slash);
    if (auto colon = rest.find(':'); colon != std::string::npos) {
        out.host = rest.substr(0, colon);
        out.port = std::atoi(rest.substr(colon + 1).c_str());
    } else {
        out.host = rest;
    }
    return out;
}

json request_to_wire(const CompletionRequest& req) {
    json messages = json::array();
    for (const auto& m : req.messages) {
        messages.push_back({{"role", to_string(m.role)}, {"content", m.content}});
    }
    return json{{"model", req.model_id},
                {"messages", messages},
                {"temperature", req.temperature},
                {"max_tokens", req.max_tokens}};
}

CompletionResponse response_from_wire(const std::string& body) {
    json j = json::parse(body);
    CompletionResponse out;
    const auto& choices = j.at("choices");
    if (choices.empty()) throw TransportError("completion response carried no choices");
    const auto& first = choices.at(0);
    out.content = first.at("message").value("content", "");
    std::string reason = first.value("finish_reason", "stop");
    out.finish_reason = finish_reason_from_string(reason);
    if (j.contains("usage")) {
        out.prompt_tokens = j["usage"].value("prompt_tokens", 0);
        out.completion_tokens = j["usage"].value("completion_tokens", 0);
    }
    if (out.content.empty() && out.finish_reason != FinishReason::Error) {
        out.finish_reason = FinishReason::Error;
    }
    return out;
}

}  // namespace

HttpGateway::HttpGateway(HttpBackendConfig config) : config_(std::move(config)) {
    auto parsed = parse_base_url(config_.base_url);
    host_ = parsed.host;
    port_ = parsed.port;
    https_ = parsed.https;
    if (host_.empty()) throw ConfigError("http backend requires a base URL");
    if (https_) throw ConfigError("https endpoints are not supported by this build; "
                                  "front the service with a local http proxy");
}

HttpGateway::~HttpGateway() = default;

CompletionResponse HttpGateway::complete(const CompletionRequest& request) {
    {
        std::unique_lock<std::mutex> lock(mutex_);
        slot_available_.wait(lock, [&] { return in_flight_ < config_.max_in_flight; });
        ++in_flight_;
    }
    struct Release {
        HttpGateway* self;
        ~Release() {
            std::lock_guard<std::mutex> lock(self->mutex_);
            --self->in_flight_;
            self->slot_available_.notify_one();
        }
    } release{this};

    const std::string body = request_to_wire(request).dump();
    httplib::Headers headers;
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    int delay_ms = config_.retry_base_delay_ms;
    std::string last_error;
    for (int attempt = 0; attempt < std::max(1, config_.retries); ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
        httplib::Client client(host_, port_);
        client.set_read_timeout(config_.timeout_seconds, 0);
        client.set_connection_timeout(10, 0);

        auto res = client.Post(config_.completions_path, headers, body, "application/json");
        if (!res) {
            last_error = "connection failure to " + host_ + ":" + std::to_string(port_);
            continue;
        }
        if (res->status == 429) {
            int wait_s = 1;
            if (res->has_header("Retry-After"))
                wait_s = std::max(1, std::atoi(res->get_header_value("Retry-After").c_str()));
            if (attempt + 1 >= config_.retries)
                throw RateLimited("rate limited after " + std::to_string(attempt + 1) +
                                  " attempts");
            std::this_thread::sleep_for(std::chrono::seconds(wait_s));
            continue;
        }
        if (res->status >= 500) {
            last_error = "server error " + std::to_string(res->status);
            continue;
        }
        if (res->status == 413) throw TokenOverflow("request exceeded the model context size");
        if (res->status != 200) {
            throw TransportError("completion endpoint returned status " +
                                 std::to_string(res->status) + ": " + res->body);
        }
        try {
            return response_from_wire(res->body);
        } catch (const json::exception& e) {
            throw TransportError(std::string("malformed completion payload: ") + e.what());
        }
    }
    throw TransportError("transport failed after retries: " + last_error);
}

}  // namespace jtgen::gateway
