#include "config.hpp"

#include <json.hpp>

#include <cstdlib>

#include "jtgen/support/errors.hpp"
#include "jtgen/support/fs.hpp"

namespace jtgen::cli {

using nlohmann::json;

std::string interpolate_env(const std::string& value) {
    std::string out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t open = value.find("${", pos);
        if (open == std::string::npos) {
            out.append(value, pos, std::string::npos);
            return out;
        }
        std::size_t close = value.find('}', open + 2);
        if (close == std::string::npos) {
            out.append(value, pos, std::string::npos);
            return out;
        }
        out.append(value, pos, open - pos);
        std::string name = value.substr(open + 2, close - open - 2);
        if (const char* v = std::getenv(name.c_str())) out += v;
        pos = close + 1;
    }
}

namespace {

std::string str(const json& j, const char* key, const std::string& fallback = "") {
    if (!j.contains(key)) return fallback;
    return interpolate_env(j.at(key).get<std::string>());
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(fs::read_file(path));
    } catch (const json::exception& e) {
        throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
    }

    RunConfig cfg;
    cfg.project_root = str(j, "project_root");
    cfg.output_root = str(j, "output_root", "jtgen-out");
    cfg.templates_dir = str(j, "templates_dir");
    cfg.project_name = str(j, "project_name", "project");
    if (j.contains("exclude")) {
        for (const auto& g : j["exclude"]) cfg.exclude.push_back(g.get<std::string>());
    }

    if (j.contains("backend")) {
        const auto& b = j["backend"];
        cfg.backend.kind = str(b, "kind", "stub");
        cfg.backend.base_url = str(b, "base_url");
        cfg.backend.model = str(b, "model", "default-model");
        cfg.backend.api_key_env = str(b, "api_key_env", "JTGEN_API_KEY");
        cfg.backend.transcript = str(b, "transcript");
        cfg.backend.record_to = str(b, "record_to");
        cfg.backend.max_completion_tokens = b.value("max_completion_tokens", 2048);
        cfg.backend.prompt_token_budget = b.value("prompt_token_budget", 12000);
    }

    if (j.contains("toolchain")) {
        const auto& t = j["toolchain"];
        cfg.toolchain.kind = str(t, "kind", "javac");
        cfg.toolchain.jdk_home = str(t, "jdk_home");
        cfg.toolchain.junit_jar = str(t, "junit_jar");
        cfg.toolchain.hamcrest_jar = str(t, "hamcrest_jar");
        cfg.toolchain.jacoco_agent_jar = str(t, "jacoco_agent_jar");
        cfg.toolchain.jacoco_cli_jar = str(t, "jacoco_cli_jar");
        cfg.toolchain.runner_dir = str(t, "runner_dir");
        cfg.toolchain.classpath = str(t, "classpath");
        cfg.toolchain.compile_timeout_s = t.value("compile_timeout_s", 60);
        cfg.toolchain.run_timeout_s = t.value("run_timeout_s", 120);
    }

    if (j.contains("session")) {
        const auto& s = j["session"];
        cfg.session.delta = s.value("delta", 5);
        cfg.session.max_seed_rounds = s.value("max_seed_rounds", 5);
        cfg.session.max_iterations = s.value("max_iterations", 5);
        cfg.session.fallback_enabled = s.value("fallback_enabled", true);
        cfg.session.worker_cap = s.value("worker_cap", 1);
        if (cfg.session.delta < 1 || cfg.session.max_seed_rounds < 1 ||
            cfg.session.max_iterations < 1 || cfg.session.worker_cap < 1) {
            throw ConfigError("session budgets must all be at least 1");
        }
    }

    if (j.contains("weights")) {
        const auto& w = j["weights"];
        if (!w.is_array() || w.size() != 4) {
            throw ConfigError("weights must be an array of four numbers");
        }
        cfg.weights.w_var = w[0].get<double>();
        cfg.weights.w_creation = w[1].get<double>();
        cfg.weights.w_calls = w[2].get<double>();
        cfg.weights.w_params = w[3].get<double>();
        if (!cfg.weights.valid()) {
            throw ConfigError("weights must be nonnegative and sum to 1");
        }
    }

    if (j.contains("evosuite")) {
        const auto& e = j["evosuite"];
        cfg.evosuite.jar = str(e, "jar");
        cfg.evosuite.jdk8_home = str(e, "jdk8_home");
        cfg.evosuite.project_classpath = str(e, "project_classpath");
        cfg.evosuite.output_dir = str(e, "output_dir");
        cfg.evosuite.search_budget_s = e.value("search_budget_s", 60);
        cfg.evosuite_tests_dir = str(e, "tests_dir");
    }

    if (cfg.project_root.empty()) throw ConfigError("config must set project_root");
    if (!std::filesystem::exists(cfg.project_root)) {
        throw ConfigError("project_root does not exist: " + cfg.project_root.string());
    }
    if (!cfg.templates_dir.empty() && !std::filesystem::exists(cfg.templates_dir)) {
        throw ConfigError("templates_dir does not exist: " + cfg.templates_dir.string());
    }
    return cfg;
}

}  // namespace jtgen::cli
