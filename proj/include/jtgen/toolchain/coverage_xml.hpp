#pragma once

#include <string>
#include <vector>

#include "jtgen/toolchain/toolchain.hpp"

namespace jtgen::toolchain {

// Parses a JaCoCo-format XML report into per-method branch/line counts,
// keyed by canonical signature (`pkg.Class#name(erased params)`).
// Constructors and static initializers are skipped. Focal signatures with
// no matching entry come back zeroed in `unmatched_focals`.
CoverageReport parse_coverage_xml(const std::string& xml,
                                  const std::vector<std::string>& focal_signatures);

// `(Ljava/util/List;I[Ljava/lang/String;)V` -> "List, int, String[]"
std::string descriptor_to_param_list(const std::string& descriptor);

}  // namespace jtgen::toolchain
