#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jtgen/complexity/complexity.hpp"
#include "jtgen/pipeline/session.hpp"
#include "jtgen/seed/evosuite.hpp"

namespace jtgen::cli {

struct BackendConfig {
    std::string kind = "stub";  // live | replay | stub
    std::string base_url;
    std::string model = "default-model";
    std::string api_key_env = "JTGEN_API_KEY";
    std::filesystem::path transcript;   // replay source
    std::filesystem::path record_to;    // live recording sink
    int max_completion_tokens = 2048;
    std::size_t prompt_token_budget = 12000;
};

struct ToolchainSelection {
    std::string kind = "javac";  // javac | stub
    std::filesystem::path jdk_home;
    std::filesystem::path junit_jar;
    std::filesystem::path hamcrest_jar;
    std::filesystem::path jacoco_agent_jar;
    std::filesystem::path jacoco_cli_jar;
    std::filesystem::path runner_dir;
    std::string classpath;
    int compile_timeout_s = 60;
    int run_timeout_s = 120;
};

struct RunConfig {
    std::filesystem::path project_root;
    std::filesystem::path output_root = "jtgen-out";
    std::vector<std::string> exclude;
    std::filesystem::path templates_dir;
    std::string project_name = "project";

    BackendConfig backend;
    ToolchainSelection toolchain;
    pipeline::SessionConfig session;
    complexity::ComplexityWeights weights;

    seed::EvoSuiteConfig evosuite;
    std::filesystem::path evosuite_tests_dir;  // pre-generated tests to ingest
};

// Parses the JSON config file, interpolating ${ENV_VAR} in string values.
// Relative paths stay relative to the process working directory.
RunConfig load_config(const std::filesystem::path& path);

std::string interpolate_env(const std::string& value);

}  // namespace jtgen::cli
