#pragma once

#include <string>
#include <vector>

#include "jtgen/code_model/model.hpp"
#include "jtgen/support/errors.hpp"

namespace jtgen::complexity {

// Static features of an invocation context: variable declarations, object
// creations, prior method calls, and the focal method's parameter count.
struct InitFeatures {
    int var_decls = 0;
    int creations = 0;
    int calls_before_focal = 0;
    int params = 0;
};

struct ComplexityWeights {
    double w_var = 0.1;
    double w_creation = 0.1;
    double w_calls = 0.4;
    double w_params = 0.4;

    // weights must be nonnegative and sum to 1 (within 1e-12)
    bool valid() const;
};

struct FeatureRange {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizationStats {
    FeatureRange var_decls;
    FeatureRange creations;
    FeatureRange calls_before_focal;
    FeatureRange params;
};

struct ComplexityScore {
    double raw = 0.0;     // in [0, 1]
    double scaled = 0.0;  // 10 * raw
    int bin = 0;          // floor(scaled), clamped to 9
};

class NoFocalCall : public Error {
public:
    explicit NoFocalCall(const std::string& signature)
        : Error("context never invokes focal method " + signature) {}
};

class EmptyCorpus : public Error {
public:
    EmptyCorpus() : Error("cannot fit normalization stats over an empty corpus") {}
};

// Measures the invocation context of `focal` (an exemplar snippet or test
// method body). The measured span runs from the start of the context through
// the end of the line holding the first call matching the focal's name and
// arity. Throws NoFocalCall when no such call exists.
InitFeatures count_init_features(const std::string& invocation_context,
                                 const code_model::MethodInfo& focal);

// (x - min) / (max - min), clamped into [0, 1]; 0 when the range is empty.
double minmax_normalize(double x, FeatureRange range);

ComplexityScore init_complexity(const InitFeatures& f, const NormalizationStats& stats,
                                const ComplexityWeights& w);

// 1 + decision points, counted the way Lizard counts them for C-family
// sources: if / for / while / catch / case keywords plus &&, || and the
// ternary '?'. `else` and `do` add nothing (their paired tokens count).
int cyclomatic_complexity(const code_model::MethodInfo& method);
int cyclomatic_complexity_of_text(const std::string& body);

NormalizationStats fit_normalization(const std::vector<InitFeatures>& corpus);

}  // namespace jtgen::complexity
