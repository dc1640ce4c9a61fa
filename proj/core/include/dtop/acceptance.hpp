#pragma once

#include <string>
#include <vector>

namespace dtop {

/// One self-check criterion: a named batch of exact assertions over the
/// library, with a one-line data summary (or the first failure).
struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full self-verification suite in order. Never throws; a crash
/// inside one criterion is reported as its failure.
std::vector<CriterionResult> run_acceptance();

}  // namespace dtop
