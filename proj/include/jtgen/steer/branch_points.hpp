#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"

namespace jtgen::steer {

enum class BranchKind { Conditional, Loop, Exception };

std::string to_string(BranchKind kind);

struct BranchPoint {
    BranchKind kind = BranchKind::Conditional;
    bool input_dependent = false;  // condition references a focal parameter
    std::string condition_text;
    code_model::SourceLocation location;
    std::string enclosing_signature;
};

// One point per `if`/`else if` condition, per `case` label, per loop
// header (the `while` of a do-while carries that loop's point), per
// `catch` clause and per `throw` statement. A bare `else` adds nothing.
// Ordered by source location.
std::vector<BranchPoint> extract_branch_points(const code_model::MethodInfo& focal);

}  // namespace jtgen::steer
