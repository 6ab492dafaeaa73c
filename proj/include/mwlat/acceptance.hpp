#pragma once

#include <string>
#include <vector>

namespace mwlat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details; // deterministic; no timing data
    double seconds = 0.0;
};

// Runs the full acceptance suite (exact recomputation of the headline
// results plus the randomized property checks with fixed seeds).
std::vector<CriterionResult> run_acceptance();

} // namespace mwlat
