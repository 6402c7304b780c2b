#pragma once

#include <string>
#include <vector>

#include "ktri/limits.hpp"

namespace ktri {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string counterexample{};  // serialized object on failure
};

/// Runs the module invariants for one k over every polygon size from 2k+1
/// up to n_max. Sizes beyond the limits are skipped, not failed.
std::vector<PropertyResult> run_invariant_suite(int k, int n_max, const EnumerationLimits& limits = {});

}  // namespace ktri
