#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jtgen/support/glob.hpp"
#include "jtgen/support/hash.hpp"
#include "jtgen/support/strings.hpp"
#include "jtgen/support/subprocess.hpp"

using namespace jtgen;

TEST_CASE("glob: segment and cross-segment wildcards") {
    CHECK(glob::matches("*.java", "Foo.java"));
    CHECK_FALSE(glob::matches("*.java", "src/Foo.java"));
    CHECK(glob::matches("**/Foo.java", "a/b/Foo.java"));
    CHECK(glob::matches("src/**/*.java", "src/x/y/Z.java"));
    CHECK(glob::matches("gen/**", "gen/a/b.java"));
    CHECK_FALSE(glob::matches("gen/**", "src/gen.java"));
    CHECK(glob::matches("a/**/b.java", "a/b.java"));
    CHECK(glob::matches("?.java", "A.java"));
    CHECK_FALSE(glob::matches("?.java", "AB.java"));
}

TEST_CASE("strings: split_lines handles CRLF and missing trailing newline") {
    auto lines = strings::split_lines("a\r\nb\nc");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "a");
    CHECK(lines[1] == "b");
    CHECK(lines[2] == "c");
}

TEST_CASE("strings: count_occurrences is non-overlapping") {
    CHECK(strings::count_occurrences("aaaa", "aa") == 2);
    CHECK(strings::count_occurrences("abc", "x") == 0);
}

TEST_CASE("hash: fnv1a64 is stable and input-sensitive") {
    auto a = hash::fnv1a64("hello");
    auto b = hash::fnv1a64("hello");
    auto c = hash::fnv1a64("hellp");
    CHECK(a == b);
    CHECK(a != c);
    CHECK(hash::to_hex(a).size() == 16);
}

TEST_CASE("subprocess: captures stdout, stderr, exit code") {
    subprocess::Command cmd;
    cmd.program = "/bin/sh";
    cmd.args = {"-c", "echo out; echo err 1>&2; exit 3"};
    auto res = subprocess::run(cmd);
    CHECK(res.exit_code == 3);
    CHECK(res.stdout_text == "out\n");
    CHECK(res.stderr_text == "err\n");
}

TEST_CASE("subprocess: timeout kills the child") {
    subprocess::Command cmd;
    cmd.program = "/bin/sh";
    cmd.args = {"-c", "sleep 5"};
    cmd.timeout = std::chrono::milliseconds(200);
    auto res = subprocess::run(cmd);
    CHECK(res.timed_out);
}
